#include "eschur/schur.hpp"

#include "eschur/errors.hpp"
#include "eschur/lattice.hpp"
#include "eschur/tableaux.hpp"

#include <functional>
#include <sstream>

namespace eschur {

EdgeParams EdgeParams::defaults(const SkewShape &shape, int n) {
  EdgeParams p;
  p.n = n;
  p.lo = -shape.extent();
  p.hi = shape.outer().first();
  return p;
}

namespace {

Poly cut(const Poly &p, int trunc) {
  return trunc == Poly::kNoTrunc ? p : p.truncated(trunc);
}

// Sum over strip chains from inner to outer, where step v from rho to nu
// contributes step(v, nu, rho).  Runs top-down so each intermediate
// partition is expanded once.
Poly chain_sum(const SkewShape &shape, int n, int trunc,
               const std::function<Poly(int, const Partition &,
                                        const Partition &)> &step) {
  if (!shape.valid() || n < 0) return Poly();
  const Partition &inner = shape.inner();
  std::map<Partition, Poly> layer{{shape.outer(), Poly(1)}};
  for (int v = n; v >= 1; --v) {
    std::map<Partition, Poly> next;
    for (const auto &[nu, acc] : layer)
      for (const auto &rho : strip_predecessors(nu, inner)) {
        Poly w = step(v, nu, rho);
        if (w.is_zero()) continue;
        next[rho] += cut(acc * w, trunc);
      }
    layer = std::move(next);
  }
  auto it = layer.find(inner);
  return it == layer.end() ? Poly() : it->second;
}

// Cells of nu / rho (both with the same extent).
std::vector<Cell> strip_cells(const Partition &nu, const Partition &rho) {
  std::vector<Cell> out;
  for (int i = 1; i <= nu.extent(); ++i)
    for (int j = rho[i] + 1; j <= nu[i]; ++j) out.push_back({i, j});
  return out;
}

void require_trunc(const EdgeParams &p, const char *what) {
  if (p.trunc == Poly::kNoTrunc)
    throw DivergenceRisk(std::string(what) + " needs a truncation degree");
}

} // namespace

Poly schur(const SkewShape &shape, int n, VarKind vars) {
  return chain_sum(shape, n, Poly::kNoTrunc,
                   [&](int v, const Partition &nu, const Partition &rho) {
                     return Poly::var(vars, v).pow(nu.size() - rho.size());
                   });
}

Poly factorial_schur(const SkewShape &shape, int n, const Alphabet &a,
                     VarKind vars) {
  return chain_sum(shape, n, Poly::kNoTrunc,
                   [&](int v, const Partition &nu, const Partition &rho) {
                     Poly w(1);
                     Poly x = Poly::var(vars, v);
                     for (const auto &c : strip_cells(nu, rho))
                       w *= x - a.at(v + c.content());
                     return w;
                   });
}

Poly edge_schur(const SkewShape &shape, const EdgeParams &p) {
  return chain_sum(shape, p.n, p.trunc,
                   [&](int v, const Partition &nu, const Partition &rho) {
                     Poly x = Poly::var(p.vars, v);
                     Poly w = x.pow(nu.size() - rho.size());
                     for (int d : deformed_diagonals(nu, rho, p.lo, p.hi)) {
                       Poly c = p.alphabet.at(d);
                       if (!c.is_zero()) w = cut(w * (Poly(1) + c * x), p.trunc);
                     }
                     return w;
                   });
}

Poly edge_schur_brute(const SkewShape &shape, const EdgeParams &p) {
  if (!shape.valid()) return Poly();
  Poly out;
  for (const auto &t : enumerate_elt(shape, p.n, p.lo, p.hi))
    out += cut(weight_elt(t, p.alphabet, p.vars), p.trunc);
  return out;
}

Poly variation(Variation kind, const SkewShape &shape, const EdgeParams &p) {
  auto inverse_product = [&](int from, int to, int sign) {
    Poly prod(1);
    for (int j = 1; j <= p.n; ++j) {
      Poly y = Poly::var(p.vars, j);
      for (int k = from; k <= to; ++k) {
        Poly c = p.alphabet.at(k);
        if (c.is_zero()) continue;
        prod = (prod * series_inverse(Poly(1) + sign * c * y, p.trunc))
                   .truncated(p.trunc);
      }
    }
    return prod;
  };
  switch (kind) {
  case Variation::EBar: {
    if (!shape.straight())
      throw UnsupportedSkew("EBar is defined for straight shapes only");
    require_trunc(p, "EBar");
    Poly e = edge_schur(shape, p);
    return (inverse_product(shape.outer().first(), p.hi, 1) * e)
        .truncated(p.trunc);
  }
  case Variation::DualFact:
    return edge_schur(shape, p.with_window(p.lo, std::min(p.hi, -1)));
  case Variation::ScriptE: {
    require_trunc(p, "ScriptE");
    EdgeParams q = p;
    q.alphabet = p.alphabet.flipped();
    return (inverse_product(p.lo, p.hi, -1) * edge_schur(shape, q))
        .truncated(p.trunc);
  }
  case Variation::HatScriptE: {
    if (!shape.straight())
      throw UnsupportedSkew("HatScriptE is defined for straight shapes only");
    require_trunc(p, "HatScriptE");
    EdgeParams q = p;
    q.alphabet = p.alphabet.flipped();
    return (inverse_product(0, p.hi, -1) * edge_schur(shape, q))
        .truncated(p.trunc);
  }
  }
  return Poly();
}

Poly dual_schur(const SkewShape &shape, int m, const EdgeParams &p) {
  require_trunc(p, "dual_schur");
  if (!shape.valid()) return Poly();
  const Partition &mu = shape.inner();
  int t = p.trunc;
  auto inv = [&](const Poly &c, const Poly &y) {
    return series_inverse(Poly(1) - c * y, t);
  };
  // One variable: prod over the strip of y / (1 - a_c y).
  auto single = [&](const Partition &lam, const Partition &nu, const Poly &y) {
    Poly w(1);
    for (const auto &c : strip_cells(lam, nu))
      w = (w * y * inv(p.alphabet.at(c.content()), y)).truncated(t);
    return w;
  };
  std::map<std::pair<Partition, int>, Poly> memo;
  // Value of s^_{lam/mu}(y_k, ..., y_m).
  std::function<Poly(const Partition &, int)> rec = [&](const Partition &lam,
                                                        int k) -> Poly {
    if (k > m) return lam == mu ? Poly(1) : Poly();
    auto key = std::make_pair(lam, k);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    Poly y = Poly::var(p.vars, k);
    Poly total;
    for (const auto &nu : strip_predecessors(lam, mu)) {
      Poly rest = rec(nu, k + 1);
      if (rest.is_zero()) continue;
      Poly corr(1);
      for (const auto &c : strip_cells(nu, mu)) {
        int d = c.content();
        corr = (corr * (Poly(1) - p.alphabet.at(d - 1) * y) *
                inv(p.alphabet.at(d), y))
                   .truncated(t);
      }
      total += (rest * corr * single(lam, nu, y)).truncated(t);
    }
    memo[key] = total;
    return total;
  };
  return rec(shape.outer(), 1);
}

SchurExpansion schur_expand(const Poly &f, int n, int max_size, VarKind vars) {
  SchurExpansion out;
  // Split each monomial into its x-exponent vector and the rest.
  auto split = [&](const Poly &g) {
    std::map<std::vector<int>, Poly> groups;
    for (const auto &[mono, c] : g.terms()) {
      std::vector<int> e(n, 0);
      Monomial rest;
      for (const auto &[v, k] : mono) {
        if (v.kind() == vars) {
          if (v.index() < 1 || v.index() > n)
            throw NotSymmetric("variable " + v.name() + " outside 1.." +
                               std::to_string(n));
          e[v.index() - 1] = k;
        } else {
          rest.push_back({v, k});
        }
      }
      groups[e] += Poly::monomial(rest, c);
    }
    return groups;
  };
  Poly g = f.with_trunc(Poly::kNoTrunc);
  for (int d = 0; d <= max_size; ++d) {
    for (;;) {
      auto groups = split(g);
      const std::vector<int> *lead = nullptr;
      // Lex-largest exponent vector of x-degree d.
      for (auto it = groups.rbegin(); it != groups.rend(); ++it) {
        int deg = 0;
        for (int k : it->first) deg += k;
        if (deg == d) {
          lead = &it->first;
          break;
        }
      }
      if (!lead) break;
      for (int k = 1; k < n; ++k)
        if ((*lead)[k] > (*lead)[k - 1])
          throw NotSymmetric("leading exponent is not a partition");
      Partition nu(*lead, n);
      Poly c = groups[*lead];
      g -= c * schur(SkewShape(nu), n, vars);
      // s_nu has leading monomial x^nu with coefficient 1, so the lead
      // disappears unless the input was not symmetric.
      if (split(g).count(nu.parts()))
        throw NotSymmetric("peeling did not remove the leading term");
      out.coeffs[nu] += c;
    }
  }
  out.remainder = g;
  return out;
}

std::string expansion_str(const SchurExpansion &e) {
  std::ostringstream os;
  for (const auto &[nu, c] : e.coeffs)
    os << "s" << nu.str() << ": " << canonical_string(c) << "\n";
  if (!e.remainder.is_zero())
    os << "remainder: " << canonical_string(e.remainder) << "\n";
  return os.str();
}

} // namespace eschur
