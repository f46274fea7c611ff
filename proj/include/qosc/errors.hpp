#ifndef QOSC_ERRORS_HPP
#define QOSC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qosc {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct InvalidParams : Error {
    using Error::Error;
};

struct OverflowError : Error {
    using Error::Error;
};

struct NegativeLambda : Error {
    using Error::Error;
};

struct NegativeLambdaInterior : Error {
    using Error::Error;
};

struct NuZero : Error {
    using Error::Error;
};

struct DimensionMismatch : Error {
    using Error::Error;
};

// Analytic sign conditions and the numeric scan disagree on the class.
struct InconsistentClassification : Error {
    using Error::Error;
};

struct NotFiniteDim : Error {
    using Error::Error;
};

struct NotUnbounded : Error {
    using Error::Error;
};

struct DivergentProduct : Error {
    using Error::Error;
};

struct RestrictionViolated : Error {
    using Error::Error;
};

struct NotSaturating : Error {
    using Error::Error;
};

struct DegenerateSaturation : Error {
    using Error::Error;
};

} // namespace qosc

#endif
