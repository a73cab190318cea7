#pragma once

#include "eschur/alphabet.hpp"
#include "eschur/poly.hpp"
#include "eschur/shapes.hpp"

#include <map>
#include <set>
#include <string>
#include <vector>

namespace eschur {

// Box entries of a (skew) shape; rows[i-1][j-1], zero on inner cells.
struct Tableau {
  SkewShape shape;
  std::vector<std::vector<int>> rows;

  Tableau() = default;
  explicit Tableau(SkewShape s);

  int entry(int i, int j) const; // 0 when (i,j) is not a skew cell
  void set(int i, int j, int v) { rows[i - 1][j - 1] = v; }
  bool is_semistandard() const;
  std::vector<int> row_reading() const; // bottom row first, left to right
  std::string str() const;

  friend bool operator==(const Tableau &p, const Tableau &q) {
    return p.shape == q.shape && p.rows == q.rows;
  }
  friend bool operator<(const Tableau &p, const Tableau &q) {
    return p.rows < q.rows;
  }
};

// Semistandard entries plus label sets on horizontal edges.  The edge at
// position (i,j) is the upper edge of cell (i,j); its weight diagonal is j-i.
struct EdgeTableau {
  Tableau boxes;
  int lo = 0, hi = -1; // window of admissible weight diagonals
  std::map<Cell, std::vector<int>> edges; // sorted, nonempty

  const SkewShape &shape() const { return boxes.shape; }
  int entry(int i, int j) const { return boxes.entry(i, j); }
  const std::vector<int> *labels(int i, int j) const;
  int label_count() const;
  // Weight diagonals of every label, with multiplicity.
  std::vector<int> label_diagonals() const;
  std::string str() const;

  friend bool operator==(const EdgeTableau &p, const EdgeTableau &q) {
    return p.boxes == q.boxes && p.lo == q.lo && p.hi == q.hi &&
           p.edges == q.edges;
  }
  friend bool operator<(const EdgeTableau &p, const EdgeTableau &q) {
    if (p.boxes.rows != q.boxes.rows) return p.boxes.rows < q.boxes.rows;
    return p.edges < q.edges;
  }
};

// Horizontal strip chain plus, for each step v, the weight diagonals that
// carry label v.
struct ChainForm {
  Chain chain;
  std::vector<std::set<int>> labels; // labels[v-1]
};

std::vector<Tableau> enumerate_ssyt(const SkewShape &shape, int n);

// Horizontal edges that may carry labels: column j admits rows
// inner'_j + 1 .. outer'_j + 1, and the weight diagonal must lie in [lo, hi].
std::vector<Cell> edge_positions(const SkewShape &shape, int lo, int hi);

// Open interval (entry above, entry below) clipped to [1, n]; n <= 0 means
// no upper bound from n, which needs a cell below the edge.
std::vector<int> admissible_labels(const Tableau &t, Cell edge, int n);

void validate(const EdgeTableau &t, int n = 0);
bool is_valid(const EdgeTableau &t, int n = 0);

Poly weight_elt(const EdgeTableau &t, const Alphabet &a = Alphabet::plain(),
                VarKind kind = VarKind::X);
// x-exponents of entries and labels, indices 1..n.
std::vector<int> content_vector(const EdgeTableau &t, int n);
// Product of a_d over labels.
Poly a_monomial(const EdgeTableau &t);

// Every ELT of the shape with values in [n]: each SSYT together with every
// choice of label subsets on every edge.
std::vector<EdgeTableau> enumerate_elt(const SkewShape &shape, int n, int lo,
                                       int hi);
// The same set built from strip chains and deformed-diagonal subsets.
std::vector<EdgeTableau> enumerate_elt_chains(const SkewShape &shape, int n,
                                              int lo, int hi);

EdgeTableau chain_to_positional(const ChainForm &c, int lo, int hi);
ChainForm positional_to_chain(const EdgeTableau &t, int n);

struct Letter {
  int value = 0;
  bool box = true;
  Cell at; // box cell, or edge position for labels
  friend bool operator==(const Letter &p, const Letter &q) {
    return p.value == q.value && p.box == q.box && p.at == q.at;
  }
};

// Diagonals by increasing content; within one, cells bottom to top.  Each
// cell first contributes the labels on its lower edge (decreasing), then its
// entry.  Cells of row 0 exist only to carry the top-edge labels of row 1.
std::vector<Letter> reading_word(const EdgeTableau &t);
std::vector<Letter> reading_word(const Tableau &t);
std::vector<int> letters(const std::vector<Letter> &w);
// Reading diagonal of a letter: content of the cell it is attached to.
int reading_diagonal(const Letter &l);

EdgeTableau make_elt(const SkewShape &shape, int lo, int hi,
                     const std::vector<std::vector<int>> &rows,
                     const std::map<Cell, std::vector<int>> &edges = {});

std::string render_text(const EdgeTableau &t);

} // namespace eschur
