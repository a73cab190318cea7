#pragma once

#include "eschur/alphabet.hpp"
#include "eschur/poly.hpp"
#include "eschur/schur.hpp"
#include "eschur/shapes.hpp"

#include <array>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace eschur {

// Diagonals of [lo, hi] where a single L row from bottom to top places the
// empty vertex: the window minus every particle path [bottom_k - k,
// top_k - k] and minus the vacuum particles -k, k > extent.
std::set<int> deformed_diagonals(const Partition &top, const Partition &bottom,
                                 int lo, int hi);

// Row vertex models.  Rows carry a spectral parameter, columns a parameter
// c (already signed).  ScriptL is (1 - c x)^{-1} L(x | -c), the column
// weight behind the series variants.
enum class Model { L, Lstar, Ell, EllSubst, ScriptL };

std::string model_name(Model m);
Model parse_model(const std::string &s);

// Weight of a vertex with edge labels west, south, east, north.
Poly vertex_weight(Model m, int w, int s, int e, int n, const Poly &x,
                   const Poly &c, int trunc = Poly::kNoTrunc);

// Square-ice weight classes, in the order a1 a2 b1 b2 c1 c2.
// a1 = (0,0,0,0) a2 = (1,1,1,1) b1 = (0,1,0,1) b2 = (1,0,1,0)
// c1 = (0,1,1,0) c2 = (1,0,0,1)
extern const std::array<std::array<int, 4>, 6> kWeightClasses;
extern const std::array<const char *, 6> kWeightClassNames;
int weight_class_index(const std::string &name); // -1 if unknown

inline int vertex_index(int w, int s, int e, int n) {
  return w << 3 | s << 2 | e << 1 | n;
}

// One row of a grid: weights per column, indexed by vertex_index.
struct Row {
  std::vector<std::array<Poly, 16>> w;
  int left = 0, right = 0;
};

struct Grid {
  int lo = 0, hi = -1;            // column positions
  std::vector<Row> rows;          // bottom to top
  std::vector<int> bottom, top;   // bits per column
  int trunc = Poly::kNoTrunc;

  int width() const { return hi - lo + 1; }
};

// Builds a row over columns [lo, hi] whose column d gets parameter
// colparam(d).
Row make_row(Model m, const Poly &x, int lo, int hi,
             const std::function<Poly(int)> &colparam, int left, int right,
             int trunc = Poly::kNoTrunc);

// Column bits for the particles of lambda shifted by charge, over [lo, hi].
std::vector<int> maya_bits(const Partition &lambda, int lo, int hi,
                           int charge = 0);

// Frontier dynamic programming, row by row and column by column.
Poly partition_function(const Grid &g);
// Sum over every assignment of the internal edges.
Poly partition_function_brute(const Grid &g);

// Single-row weight between two partitions.  L, Lstar, EllSubst and ScriptL
// read partitions as Maya diagrams on [lo, hi] with boundaries 0/0 (1/1 for
// Lstar, where bottom is the larger shape); Ell reads parts as strict
// particle columns (column = part + 1) with boundary 1/0.
Poly transfer_row(Model m, const Partition &bottom, const Partition &top,
                  const Poly &x, int lo, int hi,
                  const Alphabet &a = Alphabet::plain(),
                  int trunc = Poly::kNoTrunc);

enum class Form { T, TStar };

// Product of n row operators from inner to outer (T) or n dual rows from
// outer to inner (TStar).  The grid covers [p.lo, p.hi] plus whatever the
// particles need; extra columns get a_d = 0.
Poly edge_schur_lattice(const SkewShape &shape, const EdgeParams &p,
                        Form form = Form::T);

// Ell rows over columns [1, lambda_1 + kappa + n]; column j carries
// a.at(j - kappa).
Poly factorial_schur_lattice(const SkewShape &shape, int n, int kappa,
                             const Alphabet &a = Alphabet::plain());

enum class YBKind { RLL_L, RLL_Lstar, rll_Ell, frakRLell };

std::string yb_kind_name(YBKind k);
YBKind parse_yb_kind(const std::string &s);

// Replaces w by 2w + 1 on one weight class of both line models, or on one
// nonzero entry of the crossing matrix ("r0".."r4" in row-major order).
// Adding a constant alone would leave Ell's b2 = x - a integrable.
struct Perturbation {
  std::string target;
};

struct YBResult {
  bool ok = true;
  int boundaries = 0;
  // First failing boundary (a, b, c, d, e, f): line i in, line j in,
  // vertical bottom, line j out, line i out, vertical top.
  std::array<int, 6> witness{};
  Poly lhs, rhs;
  std::string describe() const;
};

YBResult yang_baxter_check(YBKind kind,
                           const std::optional<Perturbation> &p = {});

struct CheckReport {
  bool ok = true;
  int cases = 0;
  std::vector<std::string> failures;
  std::string summary() const;
};

// (1 - xy) <lam| T*(y) t(x) |mu> = <lam| t(x) T*(y) |mu> mod degree trunc,
// for mu and lam in the rows x cols box.  Ell rows use -a.  flip gives the
// t rows a right boundary of 1 on an unpadded grid, which should break the
// relation.
CheckReport commutation_check(int lo, int hi, int trunc, int rows, int cols,
                              bool flip = false);

struct CauchyReport {
  bool ok = true;
  Poly lhs_alg, rhs_alg, lhs_grid, rhs_grid;
  std::vector<std::string> failures;
  std::string summary() const;
};

// Sum_lam s_{lam/mu}(x_n|-a) E^{lam/eta}(y_m | a_{d+n+1})
//   = prod (1 - x_i y_j)^{-1} Sum_kap s_{eta/kap}(x_n|-a) E^{mu/kap}(y_m | a_{d+1})
// with a_p = 0 outside [plo, phi], compared mod degree trunc, plus the two
// glued grids.
CauchyReport cauchy_check(const Partition &mu, const Partition &eta, int n,
                          int m, int plo, int phi, int trunc);

bool free_fermion_check(const std::array<Poly, 6> &weights);
bool free_fermion_check(Model m, int trunc = 6);

// Invariance of edge_schur under x_i <-> x_{i+1} for every straight shape in
// the box.
CheckReport symmetry_check(int rows, int cols, int n, int lo, int hi);

} // namespace eschur
