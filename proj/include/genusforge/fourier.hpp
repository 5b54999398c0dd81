#pragma once

// Products of independent uniform conjugacy class elements, analyzed through
// characters: the pointwise law of the product, the Frobenius count of
// factorizations, a hook-only specialization for the gluing law, and an
// exhaustive convolution oracle for small groups.

#include "genusforge/exact.hpp"
#include "genusforge/partition.hpp"
#include "genusforge/permutation.hpp"

#include <map>
#include <vector>

namespace genusforge {

// A product sigma_1 ... sigma_k of independent uniform elements of the listed
// conjugacy classes of the same S_n.
struct ClassProductLaw {
    std::vector<CycleType> classes;

    explicit ClassProductLaw(std::vector<CycleType> cls) : classes(std::move(cls)) {
        if (classes.empty())
            throw std::domain_error("ClassProductLaw: needs at least one class");
        for (const CycleType& c : classes)
            if (c.n() != classes.front().n())
                throw std::domain_error("ClassProductLaw: classes from different groups");
    }

    int n() const { return classes.front().n(); }
    int k() const { return static_cast<int>(classes.size()); }
};

// P(product = s) for any fixed s with cycle type `target`:
//   (1/n!) sum_lambda chi^lambda(s) prod_j chi^lambda(C_j) / (f^lambda)^(k-1).
// The partition sweep is exponential, so n above n_limit throws.
Rat product_law_pointmass(const ClassProductLaw& law, const CycleType& target,
                          int n_limit = 10);

// The same pointwise law for the gluing product (involution times full cycle),
// using only hook shapes and closed-form weights:
//   P(product = s) = (1/N!) sum_arm F(N, arm) chi^(arm-hook)(s).
// Requires even N = target.n().
Rat hook_only_law(const CycleType& target);

// Number of tuples (sigma_1, ..., sigma_k) from the classes whose product is
// the identity:
//   (prod_j |C_j| / n!) sum_lambda prod_j chi^lambda(C_j) / (f^lambda)^(k-2).
// Always a nonnegative integer; anything else throws.
Int frobenius_count(const ClassProductLaw& law, int n_limit = 10);

// Exhaustive oracle: iterates over every tuple from the classes and tallies
// the cycle type of the product. Returns total probability mass per type,
// i.e. out[t] = |{tuples with product of type t}| / #tuples, which equals
// class_size(t) * pointmass(t). Tuple counts above the budget throw.
std::map<CycleType, Rat> bruteforce_law(const ClassProductLaw& law,
                                        long long budget = 10000000);

// All elements of the conjugacy class, by scanning S_n. Small n only.
std::vector<Permutation> conjugacy_class_elements(const CycleType& t);

}  // namespace genusforge
