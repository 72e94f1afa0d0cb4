#pragma once

#include <stdexcept>
#include <string>

namespace kmlab {

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Two operands carry Gaussian factors with different scales; the sum is not
// representable in this class of functions.
struct ScaleMismatch : Error {
    using Error::Error;
};

// An operation defined only against the standard Gaussian (scale 1) was
// invoked at a different scale.
struct UnsupportedScale : Error {
    using Error::Error;
};

struct NonIntegrable : Error {
    using Error::Error;
};

struct ZeroScale : Error {
    using Error::Error;
};

struct NotUnitary : Error {
    using Error::Error;
};

struct ResourceLimit : Error {
    using Error::Error;
};

struct IndefiniteLattice : Error {
    using Error::Error;
};

struct CapExceeded : Error {
    using Error::Error;
};

struct SingularTraceForm : Error {
    using Error::Error;
};

struct NonFreeAction : Error {
    using Error::Error;
};

struct DomainError : Error {
    using Error::Error;
};

struct DecompositionUnsupported : Error {
    using Error::Error;
};

struct ParseError : Error {
    using Error::Error;
};

}  // namespace kmlab
