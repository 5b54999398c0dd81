#pragma once

// Self-check suites runnable from the CLI: cross-validations between the
// independent routes, identity checks for the combinatorial ingredients, and
// comparisons against the exhaustive oracles. Every check reports pass/fail
// instead of throwing, so one failure cannot mask the others.

#include <cstdint>
#include <string>
#include <vector>

namespace genusforge {

struct CheckResult {
    std::string suite;
    std::string name;
    std::string params;
    bool pass = false;
};

// Binomial/Stirling/double-factorial identities underpinning the closed forms.
std::vector<CheckResult> verify_identities();

// Character engine checks: dimensions, closed hook forms vs the rim hook
// engine, orthogonality. n_max bounds the group size for the hook sweep.
std::vector<CheckResult> verify_characters(int n_max = 10);

// Class product laws vs exhaustive convolution, Frobenius counts.
std::vector<CheckResult> verify_fourier(int n_max = 6, uint64_t seed = 1234);

// Four-way agreement of the distribution routes and consequences.
std::vector<CheckResult> verify_distributions(int n_max = 7, int oracle_limit = 8);

}  // namespace genusforge
