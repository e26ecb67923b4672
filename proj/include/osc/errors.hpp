#pragma once

#include <stdexcept>
#include <string>

namespace osc {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotPrime : Error {
    using Error::Error;
};
struct DivisionByZero : Error {
    using Error::Error;
};
struct ModulusMismatch : Error {
    using Error::Error;
};
struct ZeroScaling : Error {
    using Error::Error;
};
struct NotUnimodular : Error {
    using Error::Error;
};
struct NotCyclic : Error {
    using Error::Error;
};
struct DegenerateEigenspace : Error {
    using Error::Error;
};
struct SnapFailure : Error {
    using Error::Error;
};
struct AmbiguousPeak : Error {
    using Error::Error;
};
struct DecodeMarginBelowThreshold : Error {
    using Error::Error;
};
struct ParseError : Error {
    using Error::Error;
};

}  // namespace osc
