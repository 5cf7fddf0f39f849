#pragma once

#include <functional>
#include <string>
#include <vector>

#include "midy/modular.hpp"

namespace midy {

/// Functions the self-test exercises through an indirection so that fault
/// injection can confirm a broken build is caught.
struct SelftestTargets {
    std::function<FibPair(const BigInt&, const BigInt&)> fib_pair = fib_pair_mod;
};

struct SelftestReport {
    std::size_t run = 0;
    std::vector<std::string> passed;
    std::vector<std::string> failures;
    bool ok() const { return failures.empty(); }
};

/// Golden examples plus a small prime cross-check.
SelftestReport run_selftest(const SelftestTargets& targets = {});

}  // namespace midy
