#pragma once

#include "eschur/schur.hpp"
#include "eschur/tableaux.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace eschur {

// Signature rule on a word read left to right: each i is -, each i+1 is +,
// and adjacent "+-" pairs cancel until the reduced signature is -...-+...+.
// f_i changes the rightmost surviving -, e_i the leftmost surviving +.
std::optional<std::size_t> tensor_f_position(const std::vector<int> &w, int i);
std::optional<std::size_t> tensor_e_position(const std::vector<int> &w, int i);
std::optional<std::vector<int>> tensor_f(std::vector<int> w, int i);
std::optional<std::vector<int>> tensor_e(std::vector<int> w, int i);

struct EpsPhi {
  int eps = 0, phi = 0;
};
EpsPhi signature_counts(const std::vector<int> &w, int i);

// Crystal operators on edge labeled tableaux through the diagonal reading
// word, including the exception where a box i sits left of another i.
std::optional<EdgeTableau> f_elt(const EdgeTableau &t, int i);
std::optional<EdgeTableau> e_elt(const EdgeTableau &t, int i);

// Classical crystal on semistandard tableaux via the row reading word.
std::optional<Tableau> f_ssyt(const Tableau &t, int i);
std::optional<Tableau> e_ssyt(const Tableau &t, int i);

struct EpsPhiWt {
  int eps = 0, phi = 0;
  std::vector<int> wt; // counts of 1..n among entries and labels
};
EpsPhiWt eps_phi_wt(const EdgeTableau &t, int i, int n);

bool is_highest_weight(const EdgeTableau &t, int n);

struct HighestWeight {
  EdgeTableau t;
  std::vector<int> weight;
  Poly a_monomial;
};

// Highest weight ELTs of the given shape with values in [n] on the window
// of p; max_labels >= 0 bounds the number of edge labels.
std::vector<HighestWeight> highest_weights(const SkewShape &shape,
                                           const EdgeParams &p,
                                           int max_labels = -1);

// Coefficients c^nu(a) = sum of a-monomials over highest weights of weight
// nu, for |nu| <= max_size.
std::map<Partition, Poly> schur_expansion_crystal(const SkewShape &shape,
                                                  const EdgeParams &p,
                                                  int max_size);

struct CrystalComponent {
  int highest = -1;        // vertex index
  std::vector<int> members; // sorted vertex indices
  std::vector<int> weight;
  Poly a_monomial;
  bool isomorphic = false; // matches B(weight) arc for arc
};

struct CrystalGraph {
  int n = 0;
  std::vector<EdgeTableau> vertices;
  struct Arc {
    int from, to, i;
  };
  std::vector<Arc> arcs;
  std::vector<CrystalComponent> components;
};

CrystalGraph crystal_graph(const SkewShape &shape, const EdgeParams &p,
                           int max_labels = -1);

// Walks the component from its highest weight alongside the Yamanouchi
// tableau of shape weight and checks that the f-arcs correspond.
bool matches_highest_weight_crystal(const CrystalGraph &g,
                                    const CrystalComponent &c);

std::string to_dot(const CrystalGraph &g);

} // namespace eschur
