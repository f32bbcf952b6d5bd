#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gtcat/projrep.hpp"

namespace gtcat {

struct SelfTestResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

/// Invariant sweep over the built-in fixtures. quick skips the expensive
/// double cross-checks. Throws nothing; failures land in the results.
std::vector<SelfTestResult> run_selftest(bool quick, uint64_t seed = kDefaultSeed,
                                         int threads = 1);

} // namespace gtcat
