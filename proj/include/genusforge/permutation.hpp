#pragma once

// Permutations of {0, ..., n-1}, cycle types, conjugacy class sizes, and the
// samplers/enumerators for the gluing model: fixed-point-free involutions
// (perfect matchings of the polygon sides) and full cycles.

#include "genusforge/exact.hpp"
#include "genusforge/rng.hpp"

#include <compare>
#include <functional>
#include <vector>

namespace genusforge {

class Permutation {
  public:
    // Image word: word[i] is the image of i. Must be a bijection.
    explicit Permutation(std::vector<int> word);

    static Permutation identity(int n);

    // The canonical n-cycle 0 -> 1 -> ... -> n-1 -> 0.
    static Permutation rotation(int n);

    int size() const { return static_cast<int>(word_.size()); }
    int operator()(int i) const { return word_[static_cast<size_t>(i)]; }
    const std::vector<int>& word() const { return word_; }

    bool is_identity() const;

    bool operator==(const Permutation&) const = default;

  private:
    std::vector<int> word_;
};

// Composition acts right-to-left: (a * b)(i) = a(b(i)), b applied first.
Permutation compose(const Permutation& a, const Permutation& b);
Permutation inverse(const Permutation& p);

// Cycle type of a permutation of [n], stored as multiplicities: count(j) is
// the number of cycles of length j, with sum j * count(j) = n.
class CycleType {
  public:
    CycleType(int n, std::vector<long> counts);

    static CycleType from_parts(int n, const std::vector<int>& parts);
    static CycleType identity(int n);
    static CycleType single_cycle(int n);
    // The class of fixed-point-free involutions; n must be even.
    static CycleType fixed_point_free(int n);

    int n() const { return n_; }
    long count(int length) const;
    long total_cycles() const;
    int min_part() const;
    // Distinct cycle lengths that occur, ascending.
    std::vector<int> support() const;
    // All parts, non-increasing, e.g. (3, 1) for a 3-cycle plus fixed point.
    std::vector<int> parts() const;

    auto operator<=>(const CycleType&) const = default;

  private:
    int n_;
    std::vector<long> counts_;  // index = cycle length, [0] unused
};

CycleType cycle_type(const Permutation& p);
long cycle_count(const Permutation& p);

// Number of permutations in S_n with the given cycle type:
// n! / prod_j j^(c_j) c_j!.
Int class_size(const CycleType& t);

// Visits every fixed-point-free involution of [n] (perfect matching of n
// points), in the lexicographic order generated by repeatedly pairing the
// smallest unmatched point. There are (n-1)!! of them; n above the limit
// throws rather than silently running forever.
void for_each_matching(int n, const std::function<void(const Permutation&)>& fn,
                       int limit = 16);
std::vector<Permutation> enumerate_matchings(int n, int limit = 16);

// Uniform random fixed-point-free involution of [n].
Permutation sample_matching(int n, RngState& rng);

// Uniform random n-cycle.
Permutation sample_unicyclic(int n, RngState& rng);

// Uniform random permutation with the given cycle type.
Permutation sample_class(const CycleType& t, RngState& rng);

}  // namespace genusforge
