#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace eschur {

enum class VarKind : std::uint8_t { X = 0, Y = 1, Alpha = 2, A = 3 };

// Variables are packed into a single key whose natural order is the
// canonical variable order x1 < x2 < ... < y1 < ... < alpha < a_m < ...
class Var {
public:
  Var() = default;
  Var(VarKind kind, int index);

  static Var x(int i) { return {VarKind::X, i}; }
  static Var y(int i) { return {VarKind::Y, i}; }
  static Var alpha() { return {VarKind::Alpha, 0}; }
  static Var a(int d) { return {VarKind::A, d}; }

  VarKind kind() const { return static_cast<VarKind>(key_ >> 24); }
  int index() const;
  std::uint32_t key() const { return key_; }
  std::string name() const;

  friend bool operator==(Var p, Var q) { return p.key_ == q.key_; }
  friend bool operator<(Var p, Var q) { return p.key_ < q.key_; }

private:
  static constexpr int kOffset = 1 << 20;
  std::uint32_t key_ = 0;
};

// Sorted by variable, no zero exponents; empty means 1.
using Monomial = std::vector<std::pair<Var, int>>;

int degree(const Monomial &m);
int degree_in(const Monomial &m, VarKind kind);
// Degree in the x and y variables only; a and alpha are coefficients.
int series_degree(const Monomial &m);
Monomial mono_mul(const Monomial &p, const Monomial &q);

class Poly {
public:
  using Terms = std::map<Monomial, mpz_class>;
  static constexpr int kNoTrunc = -1;

  Poly() = default;
  Poly(long c); // NOLINT: integers convert implicitly
  Poly(const mpz_class &c);
  Poly(Var v);

  static Poly x(int i) { return Poly(Var::x(i)); }
  static Poly y(int i) { return Poly(Var::y(i)); }
  static Poly a(int d) { return Poly(Var::a(d)); }
  static Poly alpha() { return Poly(Var::alpha()); }
  static Poly var(VarKind kind, int i) { return Poly(Var(kind, i)); }
  static Poly monomial(const Monomial &m, const mpz_class &c = 1);
  static Poly parse(const std::string &text);

  const Terms &terms() const { return terms_; }
  int trunc() const { return trunc_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  mpz_class constant_term() const;
  mpz_class coeff(const Monomial &m) const;
  int degree() const;

  // Drops every term above degree t in x and y and records the bound.
  Poly truncated(int t) const;
  Poly with_trunc(int t) const;

  Poly &operator+=(const Poly &q);
  Poly &operator-=(const Poly &q);
  Poly &operator*=(const Poly &q);
  Poly operator-() const;
  friend Poly operator+(Poly p, const Poly &q) { return p += q; }
  friend Poly operator-(Poly p, const Poly &q) { return p -= q; }
  friend Poly operator*(const Poly &p, const Poly &q);

  // Exact term equality; truncation bounds are not compared.
  friend bool operator==(const Poly &p, const Poly &q) {
    return p.terms_ == q.terms_;
  }
  friend bool operator!=(const Poly &p, const Poly &q) { return !(p == q); }

  Poly pow(int k) const;
  Poly substitute(Var v, const Poly &expr, int t = kNoTrunc) const;
  Poly rename(VarKind from, VarKind to) const;
  bool uses(Var v) const;
  std::vector<Var> variables() const;

  std::string str() const;

private:
  void add_term(const Monomial &m, const mpz_class &c);
  void normalize();

  Terms terms_;
  int trunc_ = kNoTrunc;
};

int combine_trunc(int s, int t);
Poly add(const Poly &p, const Poly &q);
Poly mul(const Poly &p, const Poly &q);
Poly series_inverse(const Poly &p, int t);
Poly substitute(const Poly &p, Var v, const Poly &expr, int t = Poly::kNoTrunc);
std::string canonical_string(const Poly &p);
bool equal_mod_degree(const Poly &p, const Poly &q, int t);

// Swaps the two named variables; used for symmetry checks.
Poly swap_vars(const Poly &p, Var u, Var v);

} // namespace eschur
