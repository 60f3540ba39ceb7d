#pragma once

#include <stdexcept>
#include <string>

namespace svet {

// Base class for all svet errors so callers can catch the whole family.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DimensionMismatch : Error {
    using Error::Error;
};

struct NotXType : Error {
    using Error::Error;
};

struct UnknownMode : Error {
    using Error::Error;
};

struct WrongKeepCount : Error {
    using Error::Error;
};

struct NonUnitVector : Error {
    using Error::Error;
};

struct OutOfRange : Error {
    using Error::Error;
};

struct NonPositiveMass : Error {
    using Error::Error;
};

struct NonPositive : Error {
    using Error::Error;
};

struct NariaiViolation : Error {
    using Error::Error;
};

struct InvalidScenario : Error {
    using Error::Error;
};

struct BudgetExhausted : Error {
    using Error::Error;
};

struct InvalidConfig : Error {
    using Error::Error;
};

struct UnknownPreset : Error {
    using Error::Error;
};

struct ParseError : Error {
    using Error::Error;
};

struct IoError : Error {
    using Error::Error;
};

}  // namespace svet
