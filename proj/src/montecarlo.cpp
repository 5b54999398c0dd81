#include "genusforge/montecarlo.hpp"

#include "genusforge/permutation.hpp"
#include "genusforge/rng.hpp"

#include <boost/math/distributions/chi_squared.hpp>

#include <atomic>
#include <thread>
#include <vector>

namespace genusforge {

namespace {

constexpr int kShards = 64;

std::map<long, long long> run_shard(int n, long long count, RngState rng, BetaMode mode) {
    int N = 2 * n;
    std::map<long, long long> freq;
    std::vector<long long> visited(static_cast<size_t>(N), -1);
    for (long long s = 0; s < count; ++s) {
        Permutation alpha = sample_matching(N, rng);
        // The walk below follows p -> alpha(beta(p)).
        Permutation beta = (mode == BetaMode::random_unicyclic)
                               ? sample_unicyclic(N, rng)
                               : Permutation::rotation(N);
        long cycles = 0;
        long long stamp = s;
        for (int start = 0; start < N; ++start) {
            if (visited[static_cast<size_t>(start)] == stamp) continue;
            ++cycles;
            int p = start;
            while (visited[static_cast<size_t>(p)] != stamp) {
                visited[static_cast<size_t>(p)] = stamp;
                p = alpha(beta(p));
            }
        }
        ++freq[cycles];
    }
    return freq;
}

}  // namespace

McReport run_mc(int n, long long samples, uint64_t seed, int threads, BetaMode mode) {
    if (n < 1) throw std::domain_error("run_mc: n must be positive");
    if (samples < 1) throw std::domain_error("run_mc: sample count must be positive");
    if (threads < 1) throw std::domain_error("run_mc: thread count must be positive");

    // Fixed sharding: shard s draws from stream(seed, s) and takes a fixed
    // share of the samples, so any thread count reproduces the same tallies.
    std::vector<std::map<long, long long>> shard_freq(kShards);
    std::atomic<int> next{0};
    auto worker = [&]() {
        for (;;) {
            int s = next.fetch_add(1);
            if (s >= kShards) return;
            long long count = samples / kShards + (s < samples % kShards ? 1 : 0);
            if (count == 0) continue;
            shard_freq[static_cast<size_t>(s)] =
                run_shard(n, count, RngState::stream(seed, static_cast<uint64_t>(s)), mode);
        }
    };
    int pool = std::min(threads, kShards);
    if (pool <= 1) {
        worker();
    } else {
        std::vector<std::thread> ts;
        ts.reserve(static_cast<size_t>(pool));
        for (int i = 0; i < pool; ++i) ts.emplace_back(worker);
        for (std::thread& t : ts) t.join();
    }

    McReport rep;
    rep.n = n;
    rep.samples = samples;
    rep.seed = seed;
    rep.beta_mode = mode;
    for (const auto& shard : shard_freq)
        for (const auto& [nu, c] : shard) rep.frequencies[nu] += c;

    GenusDistribution exact = dist_via_stirling(n);
    Rat total_samples(static_cast<long>(samples));

    // Total variation: 1/2 sum over all attainable nu of |freq/S - P(nu)|.
    Rat tv(0);
    for (long nu = 1; nu <= n + 1; ++nu) {
        long long observed = 0;
        auto it = rep.frequencies.find(nu);
        if (it != rep.frequencies.end()) observed = it->second;
        Rat diff = Rat(static_cast<long>(observed)) / total_samples - exact.prob(nu);
        if (diff < 0) diff = -diff;
        tv += diff;
    }
    rep.tv = tv / Rat(2);

    // Pearson chi-square over the exact support (every cell has P > 0).
    Rat chi(0);
    std::vector<long> support = exact.support();
    for (long nu : support) {
        long long observed = 0;
        auto it = rep.frequencies.find(nu);
        if (it != rep.frequencies.end()) observed = it->second;
        Rat expected = total_samples * exact.prob(nu);
        Rat d = Rat(static_cast<long>(observed)) - expected;
        chi += d * d / expected;
    }
    rep.chi_square = chi;
    long df = static_cast<long>(support.size()) - 1;
    if (df <= 0) {
        rep.chi_square_p_value = 1.0;
    } else {
        boost::math::chi_squared dist(static_cast<double>(df));
        rep.chi_square_p_value = boost::math::cdf(boost::math::complement(dist, chi.get_d()));
    }

    Rat mean(0);
    for (const auto& [nu, c] : rep.frequencies) mean += Rat(nu) * Rat(static_cast<long>(c));
    rep.empirical_mean = mean / total_samples;
    rep.expected_mean = exact.expected_value();
    rep.law_variance = exact.variance();

    // Four-sigma band on the sample mean, compared in exact arithmetic:
    // (mean - E)^2 <= 16 Var / samples.
    Rat dev = rep.empirical_mean - rep.expected_mean;
    rep.mean_within_band = dev * dev <= Rat(16) * rep.law_variance / total_samples;
    return rep;
}

}  // namespace genusforge
