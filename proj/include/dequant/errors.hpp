#pragma once

#include <stdexcept>
#include <string>

namespace dequant {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DimensionError : Error {
    using Error::Error;
};

// Result of an operation would exceed the configured matrix dimension cap.
struct CapacityError : Error {
    using Error::Error;
};

struct NonHermitianError : Error {
    using Error::Error;
};

struct NonCommutingError : Error {
    using Error::Error;
};

struct RangeError : Error {
    using Error::Error;
};

struct ConvergenceError : Error {
    ConvergenceError(const std::string& what, double delta)
        : Error(what), final_delta(delta) {}
    double final_delta;
};

struct ParseError : Error {
    enum class Kind { Syntax, Index, Order };
    ParseError(Kind kind, int line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what), kind(kind), line(line) {}
    Kind kind;
    int line;
};

}  // namespace dequant
