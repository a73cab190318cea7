#pragma once

#include "eschur/tableaux.hpp"

#include <map>
#include <vector>

namespace fixture {

// Shape (3,3,2,2) with labels 4,5 under (1,3), 4 under (3,2), 5 under (4,1).
inline eschur::EdgeTableau uncrowding_example() {
  using namespace eschur;
  return make_elt(SkewShape(Partition({3, 3, 2, 2})), -4, 3,
                  {{1, 1, 2}, {2, 2, 6}, {3, 3}, {4, 5}},
                  {{{2, 3}, {4, 5}}, {{4, 2}, {4}}, {{5, 1}, {5}}});
}

// Nonzero recording entries keyed by cell.
inline std::map<eschur::Cell, int> filled(const eschur::Tableau &q) {
  std::map<eschur::Cell, int> out;
  for (const auto &c : q.shape.cells())
    if (int v = q.entry(c.i, c.j)) out[c] = v;
  return out;
}

inline std::vector<int> positive_parts(const eschur::Partition &p) {
  std::vector<int> out;
  for (int v : p.parts())
    if (v > 0) out.push_back(v);
  return out;
}

} // namespace fixture
