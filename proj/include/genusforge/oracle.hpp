#pragma once

// Exhaustive census of all (2n-1)!! gluings of the 2n-gon: for every perfect
// matching of the sides, count the cycles of (matching) * (rotation) and
// tally. This is the ground-truth oracle the analytic routes are checked
// against; it shares no code with them.

#include "genusforge/characters.hpp"
#include "genusforge/distribution.hpp"
#include "genusforge/exact.hpp"
#include "genusforge/permutation.hpp"

#include <map>

namespace genusforge {

struct GluingCensus {
    int n;                       // half the polygon size
    std::map<long, Int> counts;  // counts[nu] = matchings with nu cycles

    Int total() const {
        Int t = 0;
        for (const auto& [nu, c] : counts) t += c;
        return t;
    }

    GenusDistribution to_distribution() const;
};

// Full census for the canonical rotation. The matching enumeration is split
// into 2n - 1 independent shards by the partner of side 0, so results are
// exact and identical for any thread count. n above the limit throws.
GluingCensus enumerate_census(int n, int limit = 8, int threads = 1);

// Census against an arbitrary gluing cycle beta instead of the rotation;
// beta must be a single (2n)-cycle. Used to check rotation-invariance.
GluingCensus enumerate_census_with_beta(int n, const Permutation& beta, int limit = 8);

// Sum of chi^(arm-hook) over every element of the class, computed two ways:
// class_size * closed-form character, and an element-by-element sum with the
// rim hook engine. Disagreement throws; the common value is returned.
Int class_character_sum(const HookShape& h, const CycleType& t);

}  // namespace genusforge
