#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cliffdkp/rational_matrix.hpp"

namespace cliffdkp {

struct CheckResult {
    std::string name;
    std::uint64_t run = 0;
    std::uint64_t failed = 0;
    /// Counts plus the first failing case, if any.
    std::string detail;

    bool pass() const { return failed == 0; }
};

struct VerifyOptions {
    int n = 3;
    std::uint64_t seed = 42;
    /// Latin metric for the trilinear and closure checks; random
    /// symmetric invertible metrics are drawn when absent.
    std::optional<RationalMatrix> metric;
    /// Frame map for the bracket and field-equation checks; random
    /// invertible frames are drawn when absent.
    std::optional<RationalMatrix> lambda;
};

/// "core", "dkp", "subspaces", "bracket"
const std::vector<std::string>& suite_names();

/// Runs one suite, or every suite for "all". Throws std::invalid_argument
/// for an unknown suite name. Results are in a fixed order and depend only
/// on the options.
std::vector<CheckResult> run_suite(const std::string& suite, const VerifyOptions& opts);

}  // namespace cliffdkp
