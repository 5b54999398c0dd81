#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "genusforge/distribution.hpp"
#include "genusforge/numbers.hpp"
#include "genusforge/oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

using namespace genusforge;

TEST_CASE("census tiny cases by hand") {
    // n = 1: the single gluing of the 2-gon gives 2 cycles.
    GluingCensus c1 = enumerate_census(1);
    CHECK(c1.counts == std::map<long, Int>{{2, Int(1)}});
    // n = 2: of the 3 gluings of the square, 2 give 3 cycles and 1 gives 1.
    GluingCensus c2 = enumerate_census(2);
    CHECK(c2.counts == std::map<long, Int>{{1, Int(1)}, {3, Int(2)}});
    // n = 3: 15 gluings of the hexagon, 5 planar, 10 toroidal.
    GluingCensus c3 = enumerate_census(3);
    CHECK(c3.counts == std::map<long, Int>{{2, Int(10)}, {4, Int(5)}});
}

TEST_CASE("census totals and distribution conversion") {
    for (int n = 1; n <= 7; ++n) {
        GluingCensus c = enumerate_census(n);
        CHECK(c.total() == double_factorial(2L * n - 1));
        GenusDistribution exact = dist_via_stirling(n);
        CHECK(c.to_distribution() == exact);
    }
}

TEST_CASE("census is thread-count invariant") {
    for (int n = 3; n <= 6; ++n) {
        GluingCensus serial = enumerate_census(n, 8, 1);
        GluingCensus parallel = enumerate_census(n, 8, 4);
        CHECK(serial.counts == parallel.counts);
    }
}

TEST_CASE("census limits") {
    CHECK_THROWS_AS(enumerate_census(9), std::domain_error);
    CHECK_THROWS_AS(enumerate_census(5, 4), std::domain_error);
    CHECK_THROWS_AS(enumerate_census(0), std::domain_error);
    CHECK_THROWS_AS(enumerate_census(2, 8, 0), std::domain_error);
    // Raising the limit admits larger n.
    CHECK(enumerate_census(5, 5).total() == double_factorial(9));
}

TEST_CASE("census with explicit gluing cycle") {
    for (int n = 1; n <= 5; ++n) {
        GluingCensus base = enumerate_census(n);
        GluingCensus rot = enumerate_census_with_beta(n, Permutation::rotation(2 * n));
        CHECK(base.counts == rot.counts);
    }
    // Any full cycle gives the same census (relabeling invariance).
    for (int n = 1; n <= 3; ++n) {
        int N = 2 * n;
        GluingCensus base = enumerate_census(n);
        std::vector<int> word(static_cast<size_t>(N));
        std::iota(word.begin(), word.end(), 0);
        long long cycles_seen = 0;
        do {
            Permutation p(word);
            if (cycle_type(p) != CycleType::single_cycle(N)) continue;
            ++cycles_seen;
            CHECK(enumerate_census_with_beta(n, p).counts == base.counts);
        } while (std::next_permutation(word.begin(), word.end()));
        CHECK(Int(static_cast<long>(cycles_seen)) == factorial(N - 1));
    }
    CHECK_THROWS_AS(enumerate_census_with_beta(2, Permutation::identity(4)), std::domain_error);
    CHECK_THROWS_AS(enumerate_census_with_beta(2, Permutation::rotation(6)), std::domain_error);
}

TEST_CASE("hook class character sums, closed vs enumerated") {
    // Spot values in S_4: 3 double transpositions, chi^(2,1,1) = -1 each.
    CHECK(class_character_sum(HookShape(4, 2), CycleType::fixed_point_free(4)) == -3);
    CHECK(class_character_sum(HookShape(4, 4), CycleType::single_cycle(4)) == 6);
    CHECK(class_character_sum(HookShape(2, 1), CycleType::single_cycle(2)) == -1);
    CHECK(class_character_sum(HookShape(3, 2), CycleType::identity(3)) == 2);
    // Full sweep over small groups; the function itself throws on mismatch.
    for (int N = 1; N <= 6; ++N)
        for (const Partition& tw : partitions_of(N)) {
            CycleType t = CycleType::from_parts(N, tw.parts());
            for (int arm = 1; arm <= N; ++arm)
                CHECK_NOTHROW(class_character_sum(HookShape(N, arm), t));
        }
    // A couple of N = 8 spot checks (the largest size the guard allows).
    CHECK_NOTHROW(class_character_sum(HookShape(8, 3), CycleType::fixed_point_free(8)));
    CHECK_NOTHROW(class_character_sum(HookShape(8, 5), CycleType::single_cycle(8)));
    CHECK_THROWS_AS(class_character_sum(HookShape(9, 3), CycleType::single_cycle(9)),
                    std::domain_error);
    CHECK_THROWS_AS(class_character_sum(HookShape(4, 2), CycleType::identity(5)),
                    std::domain_error);
}

TEST_CASE("census equals analytic routes through n = 7") {
    for (int n = 1; n <= 7; ++n) {
        GenusDistribution census = enumerate_census(n, 8, 2).to_distribution();
        CHECK(census == dist_via_theorem(n));
        CHECK(census == dist_via_hz(n));
    }
}
