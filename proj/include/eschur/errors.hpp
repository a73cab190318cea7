#pragma once

#include <stdexcept>
#include <string>

namespace eschur {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

#define ESCHUR_ERROR(Name)                                                   \
  struct Name : Error {                                                      \
    explicit Name(const std::string &what) : Error(#Name ": " + what) {}     \
  }

ESCHUR_ERROR(NotInvertible);
ESCHUR_ERROR(DivergenceRisk);
ESCHUR_ERROR(ParseError);
ESCHUR_ERROR(WindowError);
ESCHUR_ERROR(MalformedMaya);
ESCHUR_ERROR(ValidationError);
ESCHUR_ERROR(ChainInvariantViolation);
ESCHUR_ERROR(UnsupportedSkew);
ESCHUR_ERROR(NotSymmetric);
ESCHUR_ERROR(MalformedPair);

#undef ESCHUR_ERROR

} // namespace eschur
