#pragma once

#include <stdexcept>
#include <string>

namespace cesym {

/// Base class for all errors raised by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed input file or JSON document; the message carries field context.
struct ParseError : Error {
    using Error::Error;
};

/// A dual presentation whose induced differential does not square to zero.
struct NotLiePresentationError : Error {
    std::string generator;
    explicit NotLiePresentationError(std::string gen)
        : Error("not a Lie algebra presentation: d^2 != 0 on generator '" + gen + "'"),
          generator(std::move(gen)) {}
};

/// Structure constants violate the Jacobi identity (see jacobi_check for the triples).
struct JacobiError : Error {
    using Error::Error;
};

/// Invalid action data: non-square or singular generator matrix.
struct ActionError : Error {
    using Error::Error;
};

/// An action generator fails to commute with the differential.
struct EquivarianceError : Error {
    using Error::Error;
};

/// Symplectic questions only exist in even dimension.
struct OddDimensionError : Error {
    OddDimensionError() : Error("no symplectic question in odd dimension") {}
};

/// Symbolic top-power expansion would exceed the monomial guardrail.
struct ExpansionLimitError : Error {
    using Error::Error;
};

} // namespace cesym
