#pragma once

#include <stdexcept>
#include <string>

namespace godbersen {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define GODBERSEN_DEFINE_ERROR(Name)        \
  class Name : public Error {               \
   public:                                  \
    using Error::Error;                     \
  }

/// Input points do not span the ambient space.
GODBERSEN_DEFINE_ERROR(DegenerateInput);
GODBERSEN_DEFINE_ERROR(ZeroDirection);
GODBERSEN_DEFINE_ERROR(SingularMatrix);
GODBERSEN_DEFINE_ERROR(DimensionMismatch);
/// A proven inequality failed to hold. Always an implementation bug.
GODBERSEN_DEFINE_ERROR(TheoremViolation);
GODBERSEN_DEFINE_ERROR(CombinatorialBlowup);
GODBERSEN_DEFINE_ERROR(InvalidM);
GODBERSEN_DEFINE_ERROR(NotConcave);
GODBERSEN_DEFINE_ERROR(LemmaViolation);
GODBERSEN_DEFINE_ERROR(ParseError);

#undef GODBERSEN_DEFINE_ERROR

}  // namespace godbersen
