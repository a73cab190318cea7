#pragma once

#include "eschur/lattice.hpp"
#include "eschur/schur.hpp"
#include "eschur/tableaux.hpp"

#include <string>
#include <vector>

namespace eschur {

// Row insertion of each letter of the word, left to right.
Tableau rsk_insert(const Tableau &p, const std::vector<int> &word);

// P is a straight semistandard tableau.  Q lives on shape(P)/nu where nu is
// the part of lambda already read, slid to the top; inner cells hold 0.
struct RSKPair {
  Tableau P, Q;
  friend bool operator==(const RSKPair &a, const RSKPair &b) {
    return a.P == b.P && a.Q == b.Q;
  }
};

// Diagonals are numbered from 1 at the lower-left box of lambda.
int first_reading_diagonal(const Partition &lambda);

// (P_i, Q_i) after each diagonal, i = 1, 2, ...
std::vector<RSKPair> uncrowd_steps(const EdgeTableau &t);
RSKPair uncrowd(const EdgeTableau &t);

// Inverse of uncrowd for shape lambda; lo and hi become the window of the
// result.  Throws MalformedPair when no unique preimage exists.
EdgeTableau crowd(const RSKPair &pair, const Partition &lambda, int lo,
                  int hi);

// P(f_i T) = f_i P(T) and Q(f_i T) = Q(T) over every ELT in scope.
CheckReport check_crystal_commute(const SkewShape &shape, const EdgeParams &p,
                                  int max_labels = -1);

struct CensusEntry {
  Partition mu; // shape of P
  Tableau Q;
  int count = 0; // ELTs with this recording tableau
};

// Distinct recording tableaux, sorted by (mu, Q).  Nothing is asserted.
std::vector<CensusEntry> hook_tableau_census(const SkewShape &shape,
                                             const EdgeParams &p,
                                             int max_labels = -1);
std::string census_str(const std::vector<CensusEntry> &c);

} // namespace eschur
