#pragma once

#include "eschur/poly.hpp"

#include <string>

namespace eschur {

// The parameter sequence a seen through an optional sign flip and index
// shift: at(d) = sign * a_{d + shift}.  A declared support [lo, hi] either
// zeroes everything outside it or rejects out-of-range indices.
struct Alphabet {
  enum class Support { Free, Strict, ZeroOutside };

  int sign = 1;
  int shift = 0;
  Support support = Support::Free;
  int lo = 0, hi = -1;

  static Alphabet plain() { return {}; }
  static Alphabet negated() { return {-1, 0}; }
  static Alphabet strict(int lo, int hi, int sign = 1) {
    return {sign, 0, Support::Strict, lo, hi};
  }
  static Alphabet zero_outside(int lo, int hi, int sign = 1, int shift = 0) {
    return {sign, shift, Support::ZeroOutside, lo, hi};
  }
  // Constant specialization a_d = alpha for every d.
  static Alphabet constant_alpha(int sign = 1) {
    Alphabet a;
    a.sign = sign;
    a.alpha = true;
    return a;
  }

  bool alpha = false;

  Alphabet flipped() const {
    Alphabet a = *this;
    a.sign = -sign;
    return a;
  }
  Alphabet shifted(int s) const {
    Alphabet a = *this;
    a.shift += s;
    return a;
  }

  Poly at(int d) const;
};

} // namespace eschur
