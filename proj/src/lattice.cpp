#include "eschur/lattice.hpp"

#include "eschur/errors.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

namespace eschur {

std::set<int> deformed_diagonals(const Partition &top, const Partition &bottom,
                                 int lo, int hi) {
  std::set<int> out;
  for (int d = lo; d <= hi; ++d) out.insert(d);
  int ext = std::max(top.extent(), bottom.extent());
  for (int k = 1; k <= ext; ++k)
    for (int d = bottom[k] - k; d <= top[k] - k; ++d) out.erase(d);
  for (int k = ext + 1; -k >= lo; ++k) out.erase(-k);
  return out;
}

const std::array<std::array<int, 4>, 6> kWeightClasses = {{
    {0, 0, 0, 0}, {1, 1, 1, 1}, {0, 1, 0, 1},
    {1, 0, 1, 0}, {0, 1, 1, 0}, {1, 0, 0, 1},
}};
const std::array<const char *, 6> kWeightClassNames = {"a1", "a2", "b1",
                                                       "b2", "c1", "c2"};

int weight_class_index(const std::string &name) {
  for (int k = 0; k < 6; ++k)
    if (name == kWeightClassNames[k]) return k;
  return -1;
}

std::string model_name(Model m) {
  switch (m) {
  case Model::L: return "L";
  case Model::Lstar: return "Lstar";
  case Model::Ell: return "Ell";
  case Model::EllSubst: return "EllSubst";
  case Model::ScriptL: return "ScriptL";
  }
  return "?";
}

Model parse_model(const std::string &s) {
  for (Model m : {Model::L, Model::Lstar, Model::Ell, Model::EllSubst,
                  Model::ScriptL})
    if (model_name(m) == s) return m;
  throw ParseError("unknown vertex model '" + s + "'");
}

namespace {

Poly geometric(const Poly &c, const Poly &x, int trunc) {
  if (c.is_zero()) return Poly(1);
  if (trunc == Poly::kNoTrunc)
    throw DivergenceRisk("series weights need a truncation degree");
  return series_inverse(Poly(1) - c * x, trunc);
}

} // namespace

Poly vertex_weight(Model m, int w, int s, int e, int n, const Poly &x,
                   const Poly &c, int trunc) {
  if (w + s != e + n) return Poly();
  int v = vertex_index(w, s, e, n);
  Poly out;
  switch (m) {
  case Model::L:
    if (v == vertex_index(0, 0, 0, 0)) out = Poly(1) + c * x;
    else if (v == vertex_index(0, 1, 0, 1)) out = 1;
    else if (v == vertex_index(1, 0, 1, 0)) out = x;
    else if (v == vertex_index(0, 1, 1, 0)) out = 1;
    else if (v == vertex_index(1, 0, 0, 1)) out = x;
    break;
  case Model::Lstar:
    if (v == vertex_index(1, 0, 1, 0)) out = Poly(1) + c * x;
    else if (v == vertex_index(1, 1, 1, 1)) out = 1;
    else if (v == vertex_index(0, 0, 0, 0)) out = x;
    else if (v == vertex_index(1, 0, 0, 1)) out = 1;
    else if (v == vertex_index(0, 1, 1, 0)) out = x;
    break;
  case Model::Ell:
    if (v == vertex_index(0, 0, 0, 0)) out = 1;
    else if (v == vertex_index(1, 1, 1, 1)) out = 1;
    else if (v == vertex_index(1, 0, 1, 0)) out = x - c;
    else if (v == vertex_index(0, 1, 1, 0)) out = 1;
    else if (v == vertex_index(1, 0, 0, 1)) out = 1;
    break;
  case Model::EllSubst:
    if (v == vertex_index(0, 0, 0, 0)) out = 1;
    else if (v == vertex_index(0, 1, 0, 1)) out = 1;
    else if (v == vertex_index(0, 1, 1, 0)) out = 1;
    else if (v == vertex_index(1, 0, 1, 0) || v == vertex_index(1, 0, 0, 1))
      out = x * geometric(c, x, trunc);
    break;
  case Model::ScriptL: {
    if (v == vertex_index(0, 0, 0, 0)) {
      out = 1;
      break;
    }
    Poly g = geometric(c, x, trunc);
    if (v == vertex_index(0, 1, 0, 1) || v == vertex_index(0, 1, 1, 0)) out = g;
    else if (v == vertex_index(1, 0, 1, 0) || v == vertex_index(1, 0, 0, 1))
      out = x * g;
    break;
  }
  }
  return trunc == Poly::kNoTrunc ? out : out.truncated(trunc);
}

Row make_row(Model m, const Poly &x, int lo, int hi,
             const std::function<Poly(int)> &colparam, int left, int right,
             int trunc) {
  Row r;
  r.left = left;
  r.right = right;
  for (int d = lo; d <= hi; ++d) {
    Poly c = colparam(d);
    std::array<Poly, 16> t;
    for (int v = 0; v < 16; ++v)
      t[v] = vertex_weight(m, v >> 3 & 1, v >> 2 & 1, v >> 1 & 1, v & 1, x, c,
                           trunc);
    r.w.push_back(std::move(t));
  }
  return r;
}

std::vector<int> maya_bits(const Partition &lambda, int lo, int hi,
                           int charge) {
  std::vector<int> bits(std::max(0, hi - lo + 1), 0);
  for (int p : particle_positions(lambda, lo - charge, hi - charge))
    bits[p + charge - lo] = 1;
  return bits;
}

namespace {

bool is_one(const Poly &p) { return p.size() == 1 && p.constant_term() == 1; }

Poly times(const Poly &p, const Poly &w, int trunc) {
  if (is_one(w)) return p;
  Poly r = p * w;
  return trunc == Poly::kNoTrunc ? r : r.truncated(trunc);
}

void check_grid(const Grid &g) {
  int w = g.width();
  if (w < 0 || w > 62) throw WindowError("grid width out of range");
  if (static_cast<int>(g.bottom.size()) != w ||
      static_cast<int>(g.top.size()) != w)
    throw WindowError("boundary length does not match the grid width");
  for (const auto &r : g.rows)
    if (static_cast<int>(r.w.size()) != w)
      throw WindowError("row length does not match the grid width");
}

std::uint64_t pack(const std::vector<int> &bits) {
  std::uint64_t m = 0;
  for (std::size_t k = 0; k < bits.size(); ++k)
    if (bits[k]) m |= std::uint64_t{1} << k;
  return m;
}

} // namespace

Poly partition_function(const Grid &g) {
  check_grid(g);
  int w = g.width();
  // Vertical edges below the current row, keyed by bitmask.
  std::unordered_map<std::uint64_t, Poly> cur;
  cur[pack(g.bottom)] = Poly(1);
  for (const auto &row : g.rows) {
    // Key: mask << 1 | horizontal bit entering the next column.
    std::unordered_map<std::uint64_t, Poly> front;
    for (auto &[mask, p] : cur) front[mask << 1 | row.left] = std::move(p);
    for (int c = 0; c < w; ++c) {
      std::unordered_map<std::uint64_t, Poly> next;
      for (const auto &[key, p] : front) {
        std::uint64_t mask = key >> 1;
        int h = key & 1;
        int s = mask >> c & 1;
        for (int e = 0; e <= 1; ++e) {
          int n = h + s - e;
          if (n < 0 || n > 1) continue;
          const Poly &wt = row.w[c][vertex_index(h, s, e, n)];
          if (wt.is_zero()) continue;
          std::uint64_t nm = (mask & ~(std::uint64_t{1} << c)) |
                             (std::uint64_t(n) << c);
          Poly t = times(p, wt, g.trunc);
          if (t.is_zero()) continue;
          auto [it, fresh] = next.try_emplace(nm << 1 | e, std::move(t));
          if (!fresh) it->second += t;
        }
      }
      front = std::move(next);
    }
    cur.clear();
    for (auto &[key, p] : front)
      if (static_cast<int>(key & 1) == row.right && !p.is_zero())
        cur[key >> 1] += p;
  }
  auto it = cur.find(pack(g.top));
  if (it == cur.end()) return Poly();
  return it->second;
}

Poly partition_function_brute(const Grid &g) {
  check_grid(g);
  int w = g.width(), h = static_cast<int>(g.rows.size());
  if (h == 0) return g.bottom == g.top ? Poly(1) : Poly();
  // Assign east and north labels vertex by vertex; every assignment is
  // visited, zero weights simply contribute nothing.
  std::vector<std::vector<int>> vert(h + 1, std::vector<int>(w));
  vert[0] = g.bottom;
  Poly total;
  std::function<void(int, int, int, const Poly &)> rec =
      [&](int r, int c, int west, const Poly &acc) {
        if (c == w) {
          if (west != g.rows[r].right) return;
          if (r + 1 == h) {
            if (vert[h] == g.top) total += acc;
            return;
          }
          rec(r + 1, 0, g.rows[r + 1].left, acc);
          return;
        }
        for (int e = 0; e <= 1; ++e)
          for (int n = 0; n <= 1; ++n) {
            const Poly &wt = g.rows[r].w[c][vertex_index(west, vert[r][c], e, n)];
            if (wt.is_zero()) continue;
            vert[r + 1][c] = n;
            rec(r, c + 1, e, times(acc, wt, g.trunc));
          }
      };
  rec(0, 0, g.rows[0].left, Poly(1));
  return total;
}

Poly transfer_row(Model m, const Partition &bottom, const Partition &top,
                  const Poly &x, int lo, int hi, const Alphabet &a, int trunc) {
  Grid g;
  g.lo = lo;
  g.hi = hi;
  g.trunc = trunc;
  auto col = [&](int d) { return a.at(d); };
  if (m == Model::Ell) {
    auto strict_bits = [&](const Partition &p) {
      std::vector<int> bits(std::max(0, hi - lo + 1), 0);
      for (int k = 1; k <= p.extent(); ++k) {
        int c = p[k] + 1;
        if (c < lo || c > hi)
          throw WindowError("particle column " + std::to_string(c) +
                            " outside [" + std::to_string(lo) + "," +
                            std::to_string(hi) + "]");
        if (bits[c - lo])
          throw ValidationError("parts must be distinct for Ell rows: " +
                                p.str());
        bits[c - lo] = 1;
      }
      return bits;
    };
    g.bottom = strict_bits(bottom);
    g.top = strict_bits(top);
    g.rows.push_back(make_row(m, x, lo, hi, col, 1, 0, trunc));
    return partition_function(g);
  }
  g.bottom = maya_bits(bottom, lo, hi);
  g.top = maya_bits(top, lo, hi);
  int b = m == Model::Lstar ? 1 : 0;
  g.rows.push_back(make_row(m, x, lo, hi, col, b, b, trunc));
  return partition_function(g);
}

Poly edge_schur_lattice(const SkewShape &shape, const EdgeParams &p, Form form) {
  if (!shape.valid()) return Poly();
  // Columns outside the parameter window carry a_d = 0 and only hold
  // particle paths.
  Grid g;
  g.lo = std::min(p.lo, -shape.extent());
  g.hi = std::max(p.hi, shape.outer().first() - 1);
  g.trunc = p.trunc;
  auto col = [&](int d) {
    return d >= p.lo && d <= p.hi ? p.alphabet.at(d) : Poly();
  };
  Partition outer = shape.outer(), inner = shape.inner();
  if (form == Form::T) {
    g.bottom = maya_bits(inner, g.lo, g.hi);
    g.top = maya_bits(outer, g.lo, g.hi);
    for (int i = 1; i <= p.n; ++i)
      g.rows.push_back(make_row(Model::L, Poly::var(p.vars, i), g.lo, g.hi, col,
                                0, 0, p.trunc));
  } else {
    g.bottom = maya_bits(outer, g.lo, g.hi);
    g.top = maya_bits(inner, g.lo, g.hi);
    for (int i = p.n; i >= 1; --i)
      g.rows.push_back(make_row(Model::Lstar, Poly::var(p.vars, i), g.lo, g.hi,
                                col, 1, 1, p.trunc));
  }
  return partition_function(g);
}

Poly factorial_schur_lattice(const SkewShape &shape, int n, int kappa,
                             const Alphabet &a) {
  const Partition &lam = shape.outer();
  const Partition &mu = shape.inner();
  if (kappa < mu.length())
    throw WindowError("kappa " + std::to_string(kappa) + " below length of " +
                      mu.str());
  if (!shape.valid() || lam.length() > kappa + n) return Poly();
  Grid g;
  g.lo = 1;
  g.hi = lam.first() + kappa + n;
  g.bottom.assign(g.width(), 0);
  g.top.assign(g.width(), 0);
  for (int i = 1; i <= kappa; ++i) g.bottom[mu[i] + kappa - i] = 1;
  for (int i = 1; i <= kappa + n; ++i) g.top[lam[i] + kappa + n - i] = 1;
  auto col = [&](int j) { return a.at(j - kappa); };
  for (int i = 1; i <= n; ++i)
    g.rows.push_back(make_row(Model::Ell, Poly::x(i), g.lo, g.hi, col, 1, 0));
  return partition_function(g);
}

// Yang-Baxter checks.

std::string yb_kind_name(YBKind k) {
  switch (k) {
  case YBKind::RLL_L: return "RLL_L";
  case YBKind::RLL_Lstar: return "RLL_Lstar";
  case YBKind::rll_Ell: return "rll_Ell";
  case YBKind::frakRLell: return "frakRLell";
  }
  return "?";
}

YBKind parse_yb_kind(const std::string &s) {
  for (YBKind k : {YBKind::RLL_L, YBKind::RLL_Lstar, YBKind::rll_Ell,
                   YBKind::frakRLell})
    if (yb_kind_name(k) == s) return k;
  throw ParseError("unknown Yang-Baxter kind '" + s + "'");
}

std::string YBResult::describe() const {
  std::ostringstream os;
  if (ok) {
    os << "all " << boundaries << " boundaries agree";
    return os.str();
  }
  os << "boundary (a,b,c,d,e,f) = (";
  for (int k = 0; k < 6; ++k) os << (k ? "," : "") << witness[k];
  os << "): lhs = " << canonical_string(lhs)
     << ", rhs = " << canonical_string(rhs);
  return os.str();
}

namespace {

using LineWeight = std::function<Poly(int, int, int, int)>;

struct Cross {
  std::array<std::array<Poly, 4>, 4> m;
  bool dual = false; // complemented basis with swapped factors
  Poly operator()(int ii, int ij, int oi, int oj) const {
    if (dual) return m[2 * (1 - ij) + (1 - ii)][2 * (1 - oj) + (1 - oi)];
    return m[2 * ii + ij][2 * oi + oj];
  }
};

Cross crossing(const Poly &p00, const Poly &p12, const Poly &p21,
               const Poly &p22, const Poly &p33) {
  Cross c;
  c.m[0][0] = p00;
  c.m[1][2] = p12;
  c.m[2][1] = p21;
  c.m[2][2] = p22;
  c.m[3][3] = p33;
  return c;
}

LineWeight line(Model m, const Poly &x, const Poly &c, int cls) {
  return [=](int w, int s, int e, int n) {
    Poly v = vertex_weight(m, w, s, e, n, x, c);
    if (cls >= 0) {
      const auto &k = kWeightClasses[cls];
      if (k[0] == w && k[1] == s && k[2] == e && k[3] == n) v = 2 * v + 1;
    }
    return v;
  };
}

} // namespace

YBResult yang_baxter_check(YBKind kind, const std::optional<Perturbation> &p) {
  int cls = -1, rentry = -1;
  if (p) {
    cls = weight_class_index(p->target);
    if (cls < 0) {
      if (p->target.size() == 2 && p->target[0] == 'r' &&
          p->target[1] >= '0' && p->target[1] <= '5')
        rentry = p->target[1] - '0';
      else
        throw ParseError("unknown perturbation target '" + p->target + "'");
    }
  }
  Poly xi = Poly::x(1), xj = Poly::x(2), ak = Poly::a(0);
  Poly x = Poly::x(1), y = Poly::y(1);
  LineWeight wi, wj;
  Cross R;
  switch (kind) {
  case YBKind::RLL_L:
    R = crossing(xi, xj, xi, xi - xj, xj);
    wi = line(Model::L, xi, ak, cls);
    wj = line(Model::L, xj, ak, cls);
    break;
  case YBKind::RLL_Lstar:
    R = crossing(xj, xi, xj, xj - xi, xi);
    R.dual = true;
    wi = line(Model::Lstar, xi, ak, cls);
    wj = line(Model::Lstar, xj, ak, cls);
    break;
  case YBKind::rll_Ell:
    R = crossing(1, 1, 1, xi - xj, 1);
    wi = line(Model::Ell, xi, ak, cls);
    wj = line(Model::Ell, xj, ak, cls);
    break;
  case YBKind::frakRLell:
    R = crossing(y, y, 1, Poly(1) - x * y, 1);
    wi = line(Model::Lstar, y, ak, cls);
    wj = line(Model::Ell, x, -ak, cls);
    break;
  }
  if (rentry >= 0) {
    int k = 0;
    for (auto &row : R.m)
      for (auto &e : row)
        if (!e.is_zero() && k++ == rentry) e = 2 * e + 1;
  }

  YBResult res;
  for (int bits = 0; bits < 64; ++bits) {
    int a = bits >> 5 & 1, b = bits >> 4 & 1, c = bits >> 3 & 1,
        d = bits >> 2 & 1, e = bits >> 1 & 1, f = bits & 1;
    Poly lhs, rhs;
    for (int oi = 0; oi <= 1; ++oi)
      for (int oj = 0; oj <= 1; ++oj)
        for (int mid = 0; mid <= 1; ++mid) {
          Poly r = R(a, b, oi, oj);
          if (!r.is_zero()) lhs += r * wi(oi, c, e, mid) * wj(oj, mid, d, f);
        }
    for (int hi = 0; hi <= 1; ++hi)
      for (int hj = 0; hj <= 1; ++hj)
        for (int mid = 0; mid <= 1; ++mid) {
          Poly r = R(hi, hj, e, d);
          if (!r.is_zero()) rhs += wj(b, c, hj, mid) * wi(a, mid, hi, f) * r;
        }
    ++res.boundaries;
    if (lhs != rhs && res.ok) {
      res.ok = false;
      res.witness = {a, b, c, d, e, f};
      res.lhs = lhs;
      res.rhs = rhs;
    }
  }
  return res;
}

std::string CheckReport::summary() const {
  std::ostringstream os;
  os << (ok ? "ok" : "FAILED") << " (" << cases << " cases";
  if (!failures.empty()) os << ", " << failures.size() << " failures";
  os << ")";
  if (!failures.empty()) os << "\n  first: " << failures.front();
  return os.str();
}

CheckReport commutation_check(int lo, int hi, int trunc, int rows, int cols,
                              bool flip) {
  CheckReport rep;
  Poly x = Poly::x(1), y = Poly::y(1);
  int clo = std::min(lo, -(rows + 1)) - 1;
  // Padding columns push every escaping particle beyond the truncation;
  // the flipped check keeps the grid tight so the escape is visible.
  int chi = std::max(hi, cols + 1) + (flip ? 0 : trunc + 2);
  auto param = [&](int p) { return p >= lo && p <= hi ? Poly::a(p) : Poly(); };
  int tright = flip ? 1 : 0;
  int charge = flip ? 0 : 1;
  Row t = make_row(Model::Ell, x, clo, chi, [&](int p) { return -param(p); },
                   1, tright, trunc);
  Row ts = make_row(Model::Lstar, y, clo, chi, param, 1, 1, trunc);
  Poly factor = Poly(1) - x * y;
  auto box = partitions_in_box(rows, cols, rows);
  for (const auto &mu : box)
    for (const auto &lam : box) {
      Grid g;
      g.lo = clo;
      g.hi = chi;
      g.trunc = trunc;
      g.bottom = maya_bits(mu, clo, chi, 0);
      g.top = maya_bits(lam, clo, chi, charge);
      g.rows = {t, ts};
      Poly z1 = partition_function(g);
      g.rows = {ts, t};
      Poly z2 = partition_function(g);
      ++rep.cases;
      Poly lhs = (factor * z1).truncated(trunc);
      if (!equal_mod_degree(lhs, z2, trunc)) {
        rep.ok = false;
        rep.failures.push_back("mu=" + mu.str() + " lam=" + lam.str() +
                               ": (1-xy)<T*t> = " + canonical_string(lhs) +
                               ", <tT*> = " + canonical_string(z2));
      }
    }
  return rep;
}

std::string CauchyReport::summary() const {
  std::ostringstream os;
  os << (ok ? "ok" : "FAILED") << "\n  lhs (algebraic) = "
     << canonical_string(lhs_alg) << "\n  rhs (algebraic) = "
     << canonical_string(rhs_alg) << "\n  lhs (grid)      = "
     << canonical_string(lhs_grid) << "\n  rhs (grid)      = "
     << canonical_string(rhs_grid);
  for (const auto &f : failures) os << "\n  " << f;
  return os.str();
}

CauchyReport cauchy_check(const Partition &mu, const Partition &eta, int n,
                          int m, int plo, int phi, int trunc) {
  CauchyReport rep;
  int ext = std::max(mu.length() + n, eta.length());
  Partition mu_e = mu.with_extent(std::max(ext, mu.extent()));
  ext = mu_e.extent();
  Partition eta_e = eta.with_extent(ext);

  Alphabet s_alpha = Alphabet::zero_outside(plo, phi, -1);
  auto e_params = [&](int shift) {
    EdgeParams p;
    p.n = m;
    p.vars = VarKind::Y;
    p.trunc = trunc;
    p.lo = std::min(plo - shift, -ext - 1);
    p.hi = std::max(phi - shift, ext + mu.size() + trunc);
    p.alphabet = Alphabet::zero_outside(plo, phi, 1, shift);
    return p;
  };

  // Left side: sum over lam containing mu and eta.
  EdgeParams lp = e_params(n + 1);
  for (const auto &lam :
       partitions_of_size_at_most(mu.size() + trunc, mu.length() + n, ext)) {
    if (!lam.contains(mu_e) || !lam.contains(eta_e)) continue;
    Poly s = factorial_schur(SkewShape(lam, mu_e), n, s_alpha);
    if (s.is_zero()) continue;
    Poly e = edge_schur(SkewShape(lam, eta_e), lp);
    rep.lhs_alg += (s * e).truncated(trunc);
  }
  rep.lhs_alg = rep.lhs_alg.truncated(trunc);

  Poly cauchy(1);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= m; ++j)
      cauchy = (cauchy * series_inverse(Poly(1) - Poly::x(i) * Poly::y(j),
                                        trunc))
                   .truncated(trunc);

  // Right side: sum over kap inside both.
  EdgeParams rp = e_params(1);
  Poly rsum;
  for (const auto &kap :
       partitions_of_size_at_most(std::min(mu.size(), eta.size()), ext, ext)) {
    if (!mu_e.contains(kap) || !eta_e.contains(kap)) continue;
    Poly s = factorial_schur(SkewShape(eta_e, kap), n, s_alpha);
    if (s.is_zero()) continue;
    Poly e = edge_schur(SkewShape(mu_e, kap), rp);
    rsum += (s * e).truncated(trunc);
  }
  rep.rhs_alg = (cauchy * rsum).truncated(trunc);

  // The glued grids.
  int clo = std::min(plo, -ext) - n - 2;
  int chi = std::max({phi, mu.first(), eta.first()}) + n + trunc + 2;
  auto param = [&](int p) {
    return p + 1 >= plo && p + 1 <= phi ? Poly::a(p + 1) : Poly();
  };
  std::vector<Row> t_rows, ts_rows;
  for (int i = 1; i <= n; ++i)
    t_rows.push_back(make_row(Model::Ell, Poly::x(i), clo, chi,
                              [&](int p) { return -param(p); }, 1, 0, trunc));
  for (int j = m; j >= 1; --j)
    ts_rows.push_back(
        make_row(Model::Lstar, Poly::y(j), clo, chi, param, 1, 1, trunc));
  Grid g;
  g.lo = clo;
  g.hi = chi;
  g.trunc = trunc;
  g.bottom = maya_bits(mu_e, clo, chi, 0);
  g.top = maya_bits(eta_e, clo, chi, n);
  g.rows = t_rows;
  g.rows.insert(g.rows.end(), ts_rows.begin(), ts_rows.end());
  rep.lhs_grid = partition_function(g);
  g.rows = ts_rows;
  g.rows.insert(g.rows.end(), t_rows.begin(), t_rows.end());
  rep.rhs_grid = (cauchy * partition_function(g)).truncated(trunc);

  auto cmp = [&](const char *name, const Poly &p) {
    if (!equal_mod_degree(rep.lhs_alg, p, trunc)) {
      rep.ok = false;
      rep.failures.push_back(std::string("lhs (algebraic) - ") + name + " = " +
                             canonical_string((rep.lhs_alg - p).truncated(trunc)));
    }
  };
  cmp("rhs (algebraic)", rep.rhs_alg);
  cmp("lhs (grid)", rep.lhs_grid);
  cmp("rhs (grid)", rep.rhs_grid);
  return rep;
}

bool free_fermion_check(const std::array<Poly, 6> &w) {
  return w[0] * w[1] + w[2] * w[3] == w[4] * w[5];
}

bool free_fermion_check(Model m, int trunc) {
  std::array<Poly, 6> w;
  for (int k = 0; k < 6; ++k) {
    const auto &c = kWeightClasses[k];
    w[k] = vertex_weight(m, c[0], c[1], c[2], c[3], Poly::x(1), Poly::a(0),
                         trunc);
  }
  Poly lhs = w[0] * w[1] + w[2] * w[3], rhs = w[4] * w[5];
  return equal_mod_degree(lhs, rhs, trunc);
}

CheckReport symmetry_check(int rows, int cols, int n, int lo, int hi) {
  CheckReport rep;
  for (const auto &lam : partitions_in_box(rows, cols, rows)) {
    SkewShape s(lam);
    EdgeParams p = EdgeParams::defaults(s, n).with_window(lo, hi);
    Poly e = edge_schur(s, p);
    for (int i = 1; i < n; ++i) {
      ++rep.cases;
      if (swap_vars(e, Var::x(i), Var::x(i + 1)) != e) {
        rep.ok = false;
        rep.failures.push_back(lam.str() + " not invariant under x" +
                               std::to_string(i) + " <-> x" +
                               std::to_string(i + 1));
      }
    }
  }
  return rep;
}

} // namespace eschur
