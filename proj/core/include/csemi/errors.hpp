#pragma once

#include <stdexcept>
#include <string>

namespace csemi {

/// Base class for all csemi errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Ray/point/matrix dimensions do not agree, or exceed the supported maximum.
struct DimensionMismatchError : Error {
    using Error::Error;
};

/// Every input ray of a cone was zero.
struct EmptyConeError : Error {
    using Error::Error;
};

/// The cone contains a full line (should not happen for cones in the
/// nonnegative orthant; kept as a hard check).
struct NotPointedError : Error {
    using Error::Error;
};

/// Order matrix has determinant zero.
struct SingularMatrixError : Error {
    using Error::Error;
};

/// Order matrix first row has an entry <= 0.
struct NonPositiveFirstRowError : Error {
    using Error::Error;
};

/// Operation requires genus >= 1 but the semigroup is the root (no gaps).
struct RootHasNoFrobeniusError : Error {
    using Error::Error;
};

/// Family constructor parameters outside their domain.
struct BadParamsError : Error {
    using Error::Error;
};

/// Two-generator numerical semigroup parameters are not coprime.
struct NotCoprimeError : Error {
    using Error::Error;
};

/// A gap set does not describe a semigroup (complement not closed under +).
struct NotClosedError : Error {
    using Error::Error;
};

/// Arithmetic left the exactly-representable range of 64-bit integers.
struct OverflowError : Error {
    using Error::Error;
};

/// Malformed textual input (rays, matrices, point lists).
struct ParseError : Error {
    using Error::Error;
};

/// check_mult_2p_shape called on a semigroup whose cone is not N^p.
struct NotOrthantConeError : Error {
    using Error::Error;
};

} // namespace csemi
