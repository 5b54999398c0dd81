#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "genusforge/fourier.hpp"
#include "genusforge/numbers.hpp"
#include "genusforge/partition.hpp"

#include <map>
#include <vector>

using namespace genusforge;

namespace {

std::vector<CycleType> all_types(int n) {
    std::vector<CycleType> out;
    for (const Partition& p : partitions_of(n)) out.push_back(CycleType::from_parts(n, p.parts()));
    return out;
}

}  // namespace

TEST_CASE("single class law is uniform on the class") {
    for (int N = 2; N <= 6; ++N) {
        for (const CycleType& c : all_types(N)) {
            ClassProductLaw law({c});
            for (const CycleType& t : all_types(N)) {
                Rat expect = (t == c) ? make_rat(Int(1), class_size(c)) : Rat(0);
                CHECK(product_law_pointmass(law, t) == expect);
            }
        }
    }
}

TEST_CASE("product of transposition and rotation in S_2") {
    // Both classes are the single transposition, so the product is always the
    // identity.
    ClassProductLaw law({CycleType::fixed_point_free(2), CycleType::single_cycle(2)});
    CHECK(product_law_pointmass(law, CycleType::identity(2)) == 1);
    CHECK(product_law_pointmass(law, CycleType::single_cycle(2)) == 0);
    CHECK(hook_only_law(CycleType::identity(2)) == 1);
    CHECK(hook_only_law(CycleType::single_cycle(2)) == 0);
}

TEST_CASE("gluing law in S_4") {
    ClassProductLaw law({CycleType::fixed_point_free(4), CycleType::single_cycle(4)});
    // A product of a double transposition and a 4-cycle is odd, so the
    // identity never occurs.
    CHECK(product_law_pointmass(law, CycleType::identity(4)) == 0);
    std::map<CycleType, Rat> brute = bruteforce_law(law);
    for (const CycleType& t : all_types(4)) {
        Rat mass = Rat(class_size(t)) * product_law_pointmass(law, t);
        auto it = brute.find(t);
        Rat expect = (it == brute.end()) ? Rat(0) : it->second;
        CHECK(mass == expect);
    }
    // Masses over all classes cover every one of the 3 * 6 pairs.
    Rat total(0);
    for (const CycleType& t : all_types(4))
        total += Rat(class_size(t)) * product_law_pointmass(law, t);
    CHECK(total == 1);
}

TEST_CASE("hook-only law matches the full expansion on even sizes") {
    for (int N = 2; N <= 8; N += 2) {
        ClassProductLaw law({CycleType::fixed_point_free(N), CycleType::single_cycle(N)});
        for (const CycleType& t : all_types(N))
            CHECK(hook_only_law(t) == product_law_pointmass(law, t));
    }
    CHECK_THROWS_AS(hook_only_law(CycleType::identity(3)), std::domain_error);
}

TEST_CASE("class elements enumeration") {
    CHECK(conjugacy_class_elements(CycleType::single_cycle(4)).size() == 6);
    CHECK(conjugacy_class_elements(CycleType::fixed_point_free(4)).size() == 3);
    CHECK(conjugacy_class_elements(CycleType::identity(3)).size() == 1);
    for (const Permutation& p : conjugacy_class_elements(CycleType::from_parts(5, {3, 2})))
        CHECK(cycle_type(p) == CycleType::from_parts(5, {3, 2}));
}

TEST_CASE("frobenius counts") {
    // Two transpositions in S_3 multiply to the identity in 3 ways.
    ClassProductLaw transp2(
        {CycleType::from_parts(3, {2, 1}), CycleType::from_parts(3, {2, 1})});
    CHECK(frobenius_count(transp2) == 3);
    // Two 4-cycles in S_4: each has its inverse in the class, 6 ways.
    ClassProductLaw cyc2({CycleType::single_cycle(4), CycleType::single_cycle(4)});
    CHECK(frobenius_count(cyc2) == 6);
    // A single nontrivial class never multiplies to the identity.
    CHECK(frobenius_count(ClassProductLaw({CycleType::single_cycle(4)})) == 0);
    CHECK(frobenius_count(ClassProductLaw({CycleType::identity(4)})) == 1);

    // Against enumeration for every pair of classes in S_4.
    for (const CycleType& c1 : all_types(4))
        for (const CycleType& c2 : all_types(4)) {
            ClassProductLaw law({c1, c2});
            std::map<CycleType, Rat> brute = bruteforce_law(law);
            Int tuples = class_size(c1) * class_size(c2);
            auto it = brute.find(CycleType::identity(4));
            Rat id_mass = (it == brute.end()) ? Rat(0) : it->second;
            CHECK(Rat(frobenius_count(law)) == id_mass * Rat(tuples));
        }
}

TEST_CASE("guards") {
    CHECK_THROWS_AS(ClassProductLaw({}), std::domain_error);
    CHECK_THROWS_AS(
        ClassProductLaw({CycleType::identity(3), CycleType::identity(4)}),
        std::domain_error);
    ClassProductLaw big({CycleType::single_cycle(11)});
    CHECK_THROWS_AS(product_law_pointmass(big, CycleType::identity(11)), std::domain_error);
    CHECK_THROWS_AS(frobenius_count(big), std::domain_error);
    ClassProductLaw wide({CycleType::single_cycle(8), CycleType::single_cycle(8),
                          CycleType::single_cycle(8)});
    CHECK_THROWS_AS(bruteforce_law(wide, 1000), std::domain_error);
    CHECK_THROWS_AS(
        product_law_pointmass(ClassProductLaw({CycleType::identity(3)}), CycleType::identity(4)),
        std::domain_error);
}

TEST_CASE("bruteforce masses total one") {
    for (int N = 2; N <= 5; ++N) {
        ClassProductLaw law({CycleType::single_cycle(N), CycleType::single_cycle(N)});
        std::map<CycleType, Rat> brute = bruteforce_law(law);
        Rat total(0);
        for (const auto& [t, mass] : brute) total += mass;
        CHECK(total == 1);
    }
}
