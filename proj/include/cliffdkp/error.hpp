#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cliffdkp {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Index or rank outside its admissible interval.
struct RangeError : Error {
    using Error::Error;
};

/// Operands built for different n.
struct DimensionError : Error {
    using Error::Error;
};

struct GradeError : Error {
    using Error::Error;
};

/// Singular or non-symmetric metric, singular frame map.
struct MetricError : Error {
    using Error::Error;
};

struct MembershipError : Error {
    using Error::Error;
};

/// Symbol of the wrong kind (e.g. differentiating by a derivative symbol).
struct KindError : Error {
    using Error::Error;
};

/// Field symbol whose multi-index length does not match the working rank.
struct RankError : Error {
    using Error::Error;
};

struct ParseError : Error {
    ParseError(const std::string& what, std::size_t offset)
        : Error(what + " at byte " + std::to_string(offset)), offset(offset) {}
    std::size_t offset;
};

}  // namespace cliffdkp
