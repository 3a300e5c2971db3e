#pragma once

#include <stdexcept>
#include <string>

namespace jordan {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define JORDAN_DEFINE_ERROR(Name)           \
  class Name : public Error {               \
   public:                                  \
    using Error::Error;                     \
  }

/// A scalar has no multiplicative inverse in its ring.
JORDAN_DEFINE_ERROR(NonUnit);
/// Element or operator shapes do not match the structure they are used with.
JORDAN_DEFINE_ERROR(ShapeMismatch);
/// Scalars from incompatible rings (e.g. different prime moduli) were mixed.
JORDAN_DEFINE_ERROR(RingMismatch);
/// The Bergman operator B(x,y) is singular.
JORDAN_DEFINE_ERROR(NotQuasiInvertible);
/// A Jordan-algebra element or linear operator is not invertible.
JORDAN_DEFINE_ERROR(NotInvertible);
/// A linear map fails the structurality identity.
JORDAN_DEFINE_ERROR(NotStructural);
/// A point is outside the chart of the symmetric space it was used with.
JORDAN_DEFINE_ERROR(NotMember);
/// The square of a point is not defined in the chart (id - Q(x) singular).
JORDAN_DEFINE_ERROR(SingularSquare);
/// A point is outside the domain of a pointed-space map.
JORDAN_DEFINE_ERROR(OutOfDomain);
/// The supplied pair is not an idempotent.
JORDAN_DEFINE_ERROR(NotIdempotent);
/// Element is not in the fiber V1 + V0 of a Peirce decomposition.
JORDAN_DEFINE_ERROR(NotInFiber);
/// A complement subspace has the wrong dimension.
JORDAN_DEFINE_ERROR(DimensionDrop);
/// Malformed input text (scalars, JSON documents, ring selectors).
JORDAN_DEFINE_ERROR(ParseError);
/// Instance kind or family not known to the catalog.
JORDAN_DEFINE_ERROR(UnknownInstance);
/// Input violates a documented precondition.
JORDAN_DEFINE_ERROR(InvalidInput);

#undef JORDAN_DEFINE_ERROR

}  // namespace jordan
