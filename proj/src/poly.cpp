#include "eschur/poly.hpp"

#include "eschur/errors.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace eschur {

Var::Var(VarKind kind, int index) {
  if ((kind == VarKind::X || kind == VarKind::Y) && index < 1)
    throw std::invalid_argument("x/y indices start at 1");
  if (kind == VarKind::Alpha) index = 0;
  if (index <= -kOffset || index >= kOffset)
    throw std::invalid_argument("variable index out of range");
  key_ = (static_cast<std::uint32_t>(kind) << 24) |
         static_cast<std::uint32_t>(index + kOffset);
}

int Var::index() const {
  return static_cast<int>(key_ & 0xFFFFFFu) - kOffset;
}

std::string Var::name() const {
  switch (kind()) {
  case VarKind::X:
    return "x" + std::to_string(index());
  case VarKind::Y:
    return "y" + std::to_string(index());
  case VarKind::Alpha:
    return "alpha";
  case VarKind::A:
    if (index() < 0) return "a(" + std::to_string(index()) + ")";
    return "a" + std::to_string(index());
  }
  return "?";
}

int degree(const Monomial &m) {
  int d = 0;
  for (const auto &[v, e] : m) d += e;
  return d;
}

int series_degree(const Monomial &m) {
  int d = 0;
  for (const auto &[v, e] : m)
    if (v.kind() == VarKind::X || v.kind() == VarKind::Y) d += e;
  return d;
}

int degree_in(const Monomial &m, VarKind kind) {
  int d = 0;
  for (const auto &[v, e] : m)
    if (v.kind() == kind) d += e;
  return d;
}

Monomial mono_mul(const Monomial &p, const Monomial &q) {
  Monomial r;
  r.reserve(p.size() + q.size());
  auto i = p.begin(), j = q.begin();
  while (i != p.end() && j != q.end()) {
    if (i->first == j->first) {
      r.emplace_back(i->first, i->second + j->second);
      ++i, ++j;
    } else if (i->first < j->first) {
      r.push_back(*i++);
    } else {
      r.push_back(*j++);
    }
  }
  r.insert(r.end(), i, p.end());
  r.insert(r.end(), j, q.end());
  return r;
}

int combine_trunc(int s, int t) {
  if (s == Poly::kNoTrunc) return t;
  if (t == Poly::kNoTrunc) return s;
  return std::min(s, t);
}

Poly::Poly(long c) {
  if (c != 0) terms_.emplace(Monomial{}, mpz_class(c));
}

Poly::Poly(const mpz_class &c) {
  if (c != 0) terms_.emplace(Monomial{}, c);
}

Poly::Poly(Var v) { terms_.emplace(Monomial{{v, 1}}, mpz_class(1)); }

Poly Poly::monomial(const Monomial &m, const mpz_class &c) {
  Poly p;
  if (c != 0) p.terms_.emplace(m, c);
  return p;
}

mpz_class Poly::constant_term() const { return coeff(Monomial{}); }

mpz_class Poly::coeff(const Monomial &m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? mpz_class(0) : it->second;
}

int Poly::degree() const {
  int d = -1;
  for (const auto &[m, c] : terms_) d = std::max(d, eschur::degree(m));
  return d;
}

Poly Poly::truncated(int t) const {
  Poly r = *this;
  if (t == kNoTrunc) return r;
  r.trunc_ = combine_trunc(trunc_, t);
  for (auto it = r.terms_.begin(); it != r.terms_.end();) {
    if (series_degree(it->first) > r.trunc_)
      it = r.terms_.erase(it);
    else
      ++it;
  }
  return r;
}

Poly Poly::with_trunc(int t) const {
  if (t == kNoTrunc) {
    Poly r = *this;
    r.trunc_ = kNoTrunc;
    return r;
  }
  Poly r = *this;
  r.trunc_ = kNoTrunc;
  return r.truncated(t);
}

void Poly::add_term(const Monomial &m, const mpz_class &c) {
  if (c == 0) return;
  if (trunc_ != kNoTrunc && series_degree(m) > trunc_) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void Poly::normalize() {
  if (trunc_ == kNoTrunc) return;
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (series_degree(it->first) > trunc_)
      it = terms_.erase(it);
    else
      ++it;
  }
}

Poly &Poly::operator+=(const Poly &q) {
  int t = combine_trunc(trunc_, q.trunc_);
  if (t != trunc_) {
    trunc_ = t;
    normalize();
  }
  for (const auto &[m, c] : q.terms_) add_term(m, c);
  return *this;
}

Poly &Poly::operator-=(const Poly &q) {
  int t = combine_trunc(trunc_, q.trunc_);
  if (t != trunc_) {
    trunc_ = t;
    normalize();
  }
  for (const auto &[m, c] : q.terms_) add_term(m, -c);
  return *this;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto &[m, c] : r.terms_) c = -c;
  return r;
}

Poly operator*(const Poly &p, const Poly &q) {
  Poly r;
  r.trunc_ = combine_trunc(p.trunc_, q.trunc_);
  if (p.is_zero() || q.is_zero()) return r;
  for (const auto &[mp, cp] : p.terms_) {
    int dp = series_degree(mp);
    if (r.trunc_ != Poly::kNoTrunc && dp > r.trunc_) continue;
    for (const auto &[mq, cq] : q.terms_) {
      if (r.trunc_ != Poly::kNoTrunc && dp + series_degree(mq) > r.trunc_) continue;
      r.add_term(mono_mul(mp, mq), cp * cq);
    }
  }
  return r;
}

Poly &Poly::operator*=(const Poly &q) { return *this = *this * q; }

Poly Poly::pow(int k) const {
  if (k < 0) throw std::invalid_argument("negative power");
  Poly r = Poly(1).truncated(trunc_);
  Poly base = *this;
  while (k > 0) {
    if (k & 1) r *= base;
    k >>= 1;
    if (k > 0) base *= base;
  }
  return r;
}

Poly Poly::substitute(Var v, const Poly &expr, int t) const {
  if (expr.constant_term() != 0 && t == kNoTrunc &&
      combine_trunc(trunc_, expr.trunc_) == kNoTrunc)
    throw DivergenceRisk("substituting an expression with nonzero constant "
                         "term requires a truncation bound");
  int bound = combine_trunc(combine_trunc(trunc_, expr.trunc_), t);
  std::vector<Poly> powers{Poly(1).truncated(bound)};
  Poly out = Poly().truncated(bound);
  for (const auto &[m, c] : terms_) {
    Monomial rest;
    int e = 0;
    for (const auto &ve : m) {
      if (ve.first == v)
        e = ve.second;
      else
        rest.push_back(ve);
    }
    while (static_cast<int>(powers.size()) <= e)
      powers.push_back(powers.back() * expr.truncated(bound));
    out += Poly::monomial(rest, c).truncated(bound) * powers[e];
  }
  return out;
}

Poly Poly::rename(VarKind from, VarKind to) const {
  Poly r;
  r.trunc_ = trunc_;
  for (const auto &[m, c] : terms_) {
    Monomial n;
    for (const auto &[v, e] : m)
      n.emplace_back(v.kind() == from ? Var(to, v.index()) : v, e);
    std::sort(n.begin(), n.end());
    Monomial merged;
    for (const auto &ve : n) {
      if (!merged.empty() && merged.back().first == ve.first)
        merged.back().second += ve.second;
      else
        merged.push_back(ve);
    }
    r.add_term(merged, c);
  }
  return r;
}

bool Poly::uses(Var v) const {
  for (const auto &[m, c] : terms_)
    for (const auto &ve : m)
      if (ve.first == v) return true;
  return false;
}

std::vector<Var> Poly::variables() const {
  std::set<Var> vs;
  for (const auto &[m, c] : terms_)
    for (const auto &ve : m) vs.insert(ve.first);
  return {vs.begin(), vs.end()};
}

Poly swap_vars(const Poly &p, Var u, Var v) {
  Poly r = Poly().truncated(p.trunc());
  for (const auto &[m, c] : p.terms()) {
    Monomial n;
    for (const auto &[w, e] : m) n.emplace_back(w == u ? v : (w == v ? u : w), e);
    std::sort(n.begin(), n.end());
    r += Poly::monomial(n, c);
  }
  return r;
}

Poly add(const Poly &p, const Poly &q) { return p + q; }
Poly mul(const Poly &p, const Poly &q) { return p * q; }

Poly series_inverse(const Poly &p, int t) {
  if (t < 0) throw std::invalid_argument("series_inverse needs a bound");
  mpz_class c = p.constant_term();
  if (c != 1 && c != -1)
    throw NotInvertible("constant term must be +1 or -1, got " + c.get_str());
  // p = c(1 + r) with r(0) = 0, so p^{-1} = c * sum (-r)^k
  Poly r = (p * Poly(c) - Poly(1)).truncated(t);
  for (const auto &[m, coef] : r.terms())
    if (series_degree(m) == 0)
      throw NotInvertible("constant part in x and y must be +1 or -1");
  Poly minus_r = -r;
  Poly acc = Poly(1).truncated(t);
  Poly term = Poly(1).truncated(t);
  for (int k = 1; k <= t; ++k) {
    term *= minus_r;
    if (term.is_zero()) break;
    acc += term;
  }
  return acc * Poly(c);
}

Poly substitute(const Poly &p, Var v, const Poly &expr, int t) {
  return p.substitute(v, expr, t);
}

bool equal_mod_degree(const Poly &p, const Poly &q, int t) {
  return p.with_trunc(t) == q.with_trunc(t);
}

namespace {

// Ascending total degree, then the lexicographically larger exponent
// vector first.
bool canonical_before(const Monomial &p, const Monomial &q) {
  int dp = degree(p), dq = degree(q);
  if (dp != dq) return dp < dq;
  auto i = p.begin(), j = q.begin();
  while (i != p.end() && j != q.end()) {
    if (i->first == j->first) {
      if (i->second != j->second) return i->second > j->second;
      ++i, ++j;
    } else {
      return i->first < j->first;
    }
  }
  return i != p.end() && j == q.end();
}

int print_rank(VarKind k) {
  switch (k) {
  case VarKind::A:
    return 0;
  case VarKind::Alpha:
    return 1;
  case VarKind::X:
    return 2;
  case VarKind::Y:
    return 3;
  }
  return 4;
}

std::string mono_str(const Monomial &m) {
  std::vector<std::pair<Var, int>> vs(m.begin(), m.end());
  std::stable_sort(vs.begin(), vs.end(), [](const auto &p, const auto &q) {
    return print_rank(p.first.kind()) < print_rank(q.first.kind());
  });
  std::string s;
  for (const auto &[v, e] : vs) {
    if (!s.empty()) s += "*";
    s += v.name();
    if (e != 1) s += "^" + std::to_string(e);
  }
  return s;
}

} // namespace

std::string Poly::str() const {
  if (terms_.empty()) return "0";
  std::vector<const Terms::value_type *> order;
  for (const auto &kv : terms_) order.push_back(&kv);
  std::sort(order.begin(), order.end(), [](const auto *p, const auto *q) {
    return canonical_before(p->first, q->first);
  });
  std::string out;
  bool first = true;
  for (const auto *kv : order) {
    mpz_class c = kv->second;
    bool neg = c < 0;
    if (neg) c = -c;
    if (first)
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    first = false;
    std::string ms = mono_str(kv->first);
    if (ms.empty())
      out += c.get_str();
    else if (c == 1)
      out += ms;
    else
      out += c.get_str() + "*" + ms;
  }
  return out;
}

std::string canonical_string(const Poly &p) { return p.str(); }

namespace {

class Parser {
public:
  explicit Parser(const std::string &s) : s_(s) {}

  Poly parse_all() {
    Poly p = expr();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return p;
  }

private:
  [[noreturn]] void fail(const std::string &msg) const {
    throw ParseError(msg + " at offset " + std::to_string(pos_) + " in \"" +
                     s_ + "\"");
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Poly expr() {
    Poly acc;
    bool neg = false;
    skip_ws();
    if (eat('-'))
      neg = true;
    else
      eat('+');
    Poly t = term();
    acc = neg ? -t : t;
    for (;;) {
      if (eat('+'))
        acc += term();
      else if (eat('-'))
        acc -= term();
      else
        return acc;
    }
  }

  Poly term() {
    Poly acc = factor();
    while (eat('*')) acc *= factor();
    return acc;
  }

  Poly factor() {
    if (eat('-')) return -factor();
    Poly base = primary();
    if (eat('^')) {
      skip_ws();
      base = base.pow(static_cast<int>(integer()));
    }
    return base;
  }

  long integer() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
    if (start == pos_) fail("expected digits");
    return std::stol(s_.substr(start, pos_ - start));
  }

  long signed_integer() {
    bool neg = false;
    if (pos_ < s_.size() && s_[pos_] == '-') {
      neg = true;
      ++pos_;
    }
    long v = integer();
    return neg ? -v : v;
  }

  Poly primary() {
    skip_ws();
    if (pos_ >= s_.size()) fail("unexpected end");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Poly p = expr();
      if (!eat(')')) fail("expected ')'");
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
        ++pos_;
      return Poly(mpz_class(s_.substr(start, pos_ - start)));
    }
    if (s_.compare(pos_, 5, "alpha") == 0) {
      pos_ += 5;
      return Poly::alpha();
    }
    if (c == 'x' || c == 'y') {
      ++pos_;
      long i = integer();
      return c == 'x' ? Poly::x(static_cast<int>(i)) : Poly::y(static_cast<int>(i));
    }
    if (c == 'a') {
      ++pos_;
      if (pos_ < s_.size() && s_[pos_] == '(') {
        ++pos_;
        skip_ws();
        long d = signed_integer();
        if (!eat(')')) fail("expected ')' after a-index");
        return Poly::a(static_cast<int>(d));
      }
      // "a-3" only when the minus sign is glued to the digits
      return Poly::a(static_cast<int>(signed_integer()));
    }
    fail("unknown token");
  }

  const std::string &s_;
  std::size_t pos_ = 0;
};

} // namespace

Poly Poly::parse(const std::string &text) { return Parser(text).parse_all(); }

} // namespace eschur
