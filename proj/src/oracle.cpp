#include "genusforge/oracle.hpp"

#include "genusforge/fourier.hpp"
#include "genusforge/numbers.hpp"

#include <atomic>
#include <thread>
#include <vector>

namespace genusforge {

GenusDistribution GluingCensus::to_distribution() const {
    Int denom = total();
    std::vector<Rat> prob(static_cast<size_t>(n) + 2, Rat(0));
    for (const auto& [nu, c] : counts) {
        if (nu < 1 || nu > n + 1)
            throw std::logic_error("GluingCensus: cycle count out of range");
        prob[static_cast<size_t>(nu)] = make_rat(c, denom);
    }
    return GenusDistribution(n, std::move(prob));
}

namespace {

// Streaming enumeration state: word w holds the matching under construction,
// beta is the gluing cycle, counts tallies cycle counts of w * beta at leaves.
struct CensusState {
    int N;
    std::vector<int> w;
    std::vector<int> beta;
    std::vector<int> visit;
    int stamp = 0;
    std::map<long, Int> counts;

    CensusState(int N_, std::vector<int> beta_)
        : N(N_), w(static_cast<size_t>(N_), -1), beta(std::move(beta_)),
          visit(static_cast<size_t>(N_), -1) {}

    void tally_leaf() {
        ++stamp;
        long cycles = 0;
        for (int start = 0; start < N; ++start) {
            if (visit[static_cast<size_t>(start)] == stamp) continue;
            ++cycles;
            int p = start;
            while (visit[static_cast<size_t>(p)] != stamp) {
                visit[static_cast<size_t>(p)] = stamp;
                p = w[static_cast<size_t>(beta[static_cast<size_t>(p)])];
            }
        }
        counts[cycles] += 1;
    }

    void extend() {
        int first = -1;
        for (int i = 0; i < N; ++i) {
            if (w[static_cast<size_t>(i)] < 0) {
                first = i;
                break;
            }
        }
        if (first < 0) {
            tally_leaf();
            return;
        }
        for (int j = first + 1; j < N; ++j) {
            if (w[static_cast<size_t>(j)] >= 0) continue;
            w[static_cast<size_t>(first)] = j;
            w[static_cast<size_t>(j)] = first;
            extend();
            w[static_cast<size_t>(first)] = -1;
            w[static_cast<size_t>(j)] = -1;
        }
    }
};

std::vector<int> rotation_word(int N) {
    std::vector<int> beta(static_cast<size_t>(N));
    for (int i = 0; i < N; ++i) beta[static_cast<size_t>(i)] = (i + 1) % N;
    return beta;
}

}  // namespace

GluingCensus enumerate_census(int n, int limit, int threads) {
    if (n < 1) throw std::domain_error("enumerate_census: n must be positive");
    if (n > limit) throw std::domain_error("enumerate_census: n exceeds enumeration limit");
    if (threads < 1) throw std::domain_error("enumerate_census: thread count must be positive");
    int N = 2 * n;
    std::vector<int> beta = rotation_word(N);

    // Shard by the partner of side 0; each shard enumerates independently.
    int shards = N - 1;
    std::vector<std::map<long, Int>> results(static_cast<size_t>(shards));
    std::atomic<int> next_shard{0};
    auto worker = [&]() {
        for (;;) {
            int s = next_shard.fetch_add(1);
            if (s >= shards) return;
            CensusState state(N, beta);
            int partner = s + 1;
            state.w[0] = partner;
            state.w[static_cast<size_t>(partner)] = 0;
            state.extend();
            results[static_cast<size_t>(s)] = std::move(state.counts);
        }
    };
    int pool = std::min(threads, shards);
    if (pool <= 1) {
        worker();
    } else {
        std::vector<std::thread> ts;
        ts.reserve(static_cast<size_t>(pool));
        for (int i = 0; i < pool; ++i) ts.emplace_back(worker);
        for (std::thread& t : ts) t.join();
    }

    GluingCensus census;
    census.n = n;
    for (const auto& shard : results)
        for (const auto& [nu, c] : shard) census.counts[nu] += c;
    return census;
}

GluingCensus enumerate_census_with_beta(int n, const Permutation& beta, int limit) {
    if (n < 1) throw std::domain_error("enumerate_census_with_beta: n must be positive");
    if (n > limit)
        throw std::domain_error("enumerate_census_with_beta: n exceeds enumeration limit");
    int N = 2 * n;
    if (beta.size() != N || cycle_type(beta) != CycleType::single_cycle(N))
        throw std::domain_error("enumerate_census_with_beta: beta must be a single (2n)-cycle");
    CensusState state(N, beta.word());
    state.extend();
    GluingCensus census;
    census.n = n;
    census.counts = std::move(state.counts);
    return census;
}

Int class_character_sum(const HookShape& h, const CycleType& t) {
    if (h.n != t.n())
        throw std::domain_error("class_character_sum: shape and class sizes differ");
    if (h.n > 8)
        throw std::domain_error("class_character_sum: class enumeration limited to n <= 8");
    Int closed = class_size(t) * chi_hook_general(h, t);
    Int enumerated = 0;
    Partition shape = h.to_partition();
    for (const Permutation& p : conjugacy_class_elements(t))
        enumerated += mn_character(shape, cycle_type(p));
    if (closed != enumerated)
        throw std::logic_error("class_character_sum: closed form disagrees with enumeration");
    return closed;
}

}  // namespace genusforge
