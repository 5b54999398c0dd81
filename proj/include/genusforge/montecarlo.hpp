#pragma once

// Monte Carlo sampler for the gluing model, with exact goodness-of-fit
// diagnostics against the analytic law. Sampling is sharded into a fixed
// number of streams so that results depend only on (n, samples, seed, mode),
// never on the thread count.

#include "genusforge/distribution.hpp"
#include "genusforge/exact.hpp"

#include <cstdint>
#include <map>

namespace genusforge {

enum class BetaMode {
    canonical,        // glue against the fixed rotation cycle
    random_unicyclic  // glue against a fresh uniform (2n)-cycle per sample
};

struct McReport {
    int n = 0;
    long long samples = 0;
    uint64_t seed = 0;
    BetaMode beta_mode = BetaMode::canonical;
    std::map<long, long long> frequencies;  // observed counts per nu

    Rat tv;                      // total variation distance to the exact law
    Rat chi_square;              // Pearson statistic over the exact support
    double chi_square_p_value;   // upper tail probability (diagnostic only)
    Rat empirical_mean;
    Rat expected_mean;
    Rat law_variance;
    bool mean_within_band;       // (mean - E)^2 <= 16 Var / samples

    bool operator==(const McReport&) const = default;
};

McReport run_mc(int n, long long samples, uint64_t seed, int threads = 1,
                BetaMode mode = BetaMode::canonical);

}  // namespace genusforge
