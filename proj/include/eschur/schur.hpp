#pragma once

#include "eschur/alphabet.hpp"
#include "eschur/poly.hpp"
#include "eschur/shapes.hpp"

#include <map>
#include <string>

namespace eschur {

struct EdgeParams {
  int n = 0;            // number of row variables
  int lo = 0, hi = -1;  // window of diagonals carrying parameters
  int trunc = Poly::kNoTrunc;
  VarKind vars = VarKind::X;
  Alphabet alphabet = Alphabet::plain();

  // Window [-extent, outer_1].
  static EdgeParams defaults(const SkewShape &shape, int n);
  EdgeParams with_window(int l, int h) const {
    EdgeParams p = *this;
    p.lo = l;
    p.hi = h;
    return p;
  }
};

Poly schur(const SkewShape &shape, int n, VarKind vars = VarKind::X);

// Sum over SSYT of prod (x_v - a_{v + c}); pass Alphabet::negated() for
// s(x | -a).
Poly factorial_schur(const SkewShape &shape, int n,
                     const Alphabet &a = Alphabet::plain(),
                     VarKind vars = VarKind::X);

// Sum over strip chains of prod_v x_v^{|strip|} prod_{d deformed} (1 + a_d x_v).
Poly edge_schur(const SkewShape &shape, const EdgeParams &p);
// Generating series of the positional ELT enumeration.
Poly edge_schur_brute(const SkewShape &shape, const EdgeParams &p);

enum class Variation { EBar, DualFact, ScriptE, HatScriptE };

Poly variation(Variation kind, const SkewShape &shape, const EdgeParams &p);

// Dual Schur function in y_1..y_m via the one-variable formula and the
// branching recursion, as a series truncated at p.trunc.
Poly dual_schur(const SkewShape &shape, int m, const EdgeParams &p);

struct SchurExpansion {
  std::map<Partition, Poly> coeffs; // partitions carry extent n
  Poly remainder;                   // x-degree above max_size
};

SchurExpansion schur_expand(const Poly &f, int n, int max_size,
                            VarKind vars = VarKind::X);

std::string expansion_str(const SchurExpansion &e);

} // namespace eschur
