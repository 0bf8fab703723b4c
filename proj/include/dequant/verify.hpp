#pragma once

#include <string>
#include <vector>

#include "dequant/random.hpp"

namespace dequant {

struct SuiteResult {
    std::string name;
    int passed = 0;
    int failed = 0;
    std::string first_failure;  // serialized counterexample, empty when clean

    bool ok() const { return failed == 0; }
};

// Non-commuting conjunction vs intersection oracle, symmetry, ordering and
// the conjunction theorem on seeded random projector pairs.
SuiteResult run_conjunction_suite(unsigned seed);

// Closed-form (PQ)^n vs direct matrix powers, n in [1, 8].
SuiteResult run_power_suite(unsigned seed);

// Semiclassical theta-sweep: monotone decrease and the 3*theta bound.
SuiteResult run_limit_suite();

// Entropy identities and bounds, including the register recurrence vs its
// upper bound.
SuiteResult run_entropy_suite(unsigned seed);

// suite: conjunction | power | limit | entropy | all
std::vector<SuiteResult> run_suites(const std::string& suite, unsigned seed);

}  // namespace dequant
