#include "eschur/alphabet.hpp"

#include "eschur/errors.hpp"

namespace eschur {

Poly Alphabet::at(int d) const {
  int idx = d + shift;
  if (support != Support::Free && (idx < lo || idx > hi)) {
    if (support == Support::ZeroOutside) return Poly();
    throw WindowError("a_" + std::to_string(idx) + " outside declared window [" +
                      std::to_string(lo) + "," + std::to_string(hi) + "]");
  }
  Poly v = alpha ? Poly::alpha() : Poly::a(idx);
  return sign < 0 ? -v : v;
}

} // namespace eschur
