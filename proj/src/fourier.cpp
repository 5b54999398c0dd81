#include "genusforge/fourier.hpp"

#include "genusforge/characters.hpp"
#include "genusforge/numbers.hpp"

#include <algorithm>
#include <numeric>

namespace genusforge {

Rat product_law_pointmass(const ClassProductLaw& law, const CycleType& target,
                          int n_limit) {
    int n = law.n();
    if (target.n() != n)
        throw std::domain_error("product_law_pointmass: target from a different group");
    if (n > n_limit)
        throw std::domain_error("product_law_pointmass: group size exceeds limit");
    Rat total(0);
    for (const Partition& shape : partitions_of(n)) {
        Int dim = dimension(shape);
        Rat term(mn_character(shape, target));
        for (const CycleType& c : law.classes) term *= Rat(mn_character(shape, c));
        // Divide by f^(k-1).
        Int denom = 1;
        for (int j = 0; j + 1 < law.k(); ++j) denom *= dim;
        total += term / Rat(denom);
    }
    return total / Rat(factorial(n));
}

Rat hook_only_law(const CycleType& target) {
    int n = target.n();
    if (n < 2 || n % 2 != 0)
        throw std::domain_error("hook_only_law: point count must be even");
    Rat total(0);
    for (int arm = 1; arm <= n; ++arm) {
        HookShape h(n, arm);
        total += f_weight(n, arm) * Rat(chi_hook_general(h, target));
    }
    return total / Rat(factorial(n));
}

Int frobenius_count(const ClassProductLaw& law, int n_limit) {
    int n = law.n();
    if (n > n_limit)
        throw std::domain_error("frobenius_count: group size exceeds limit");
    Rat total(0);
    for (const Partition& shape : partitions_of(n)) {
        Int dim = dimension(shape);
        Rat term(1);
        for (const CycleType& c : law.classes) term *= Rat(mn_character(shape, c));
        // Divide by f^(k-2); for k = 1 this multiplies by f.
        int e = law.k() - 2;
        if (e >= 0) {
            Int denom = 1;
            for (int j = 0; j < e; ++j) denom *= dim;
            term /= Rat(denom);
        } else {
            term *= Rat(dim);
        }
        total += term;
    }
    Rat scale(1);
    for (const CycleType& c : law.classes) scale *= Rat(class_size(c));
    total = total * scale / Rat(factorial(n));
    if (!is_integer(total) || total < 0)
        throw std::logic_error("frobenius_count: result is not a nonnegative integer");
    return to_integer(total);
}

namespace {

void bruteforce_rec(const std::vector<std::vector<Permutation>>& classes, size_t idx,
                    const std::vector<int>& prefix_word,
                    std::map<CycleType, Int>& tally) {
    if (idx == classes.size()) {
        CycleType t = cycle_type(Permutation(prefix_word));
        tally[t] += 1;
        return;
    }
    for (const Permutation& sigma : classes[idx]) {
        // Extend the partial product: new(i) = prefix(sigma(i)), so the new
        // factor acts first and the accumulated product acts last, matching
        // left-to-right products sigma_1 ... sigma_k under (a*b)(i) = a(b(i)).
        std::vector<int> w(prefix_word.size());
        for (size_t i = 0; i < w.size(); ++i)
            w[i] = prefix_word[static_cast<size_t>(sigma(static_cast<int>(i)))];
        bruteforce_rec(classes, idx + 1, w, tally);
    }
}

}  // namespace

std::map<CycleType, Rat> bruteforce_law(const ClassProductLaw& law, long long budget) {
    int n = law.n();
    Int tuples = 1;
    for (const CycleType& c : law.classes) tuples *= class_size(c);
    if (tuples > Int(static_cast<long>(budget)))
        throw std::domain_error("bruteforce_law: tuple count exceeds budget");

    std::vector<std::vector<Permutation>> classes;
    classes.reserve(law.classes.size());
    for (const CycleType& c : law.classes) classes.push_back(conjugacy_class_elements(c));

    std::map<CycleType, Int> tally;
    std::vector<int> id(static_cast<size_t>(n));
    std::iota(id.begin(), id.end(), 0);
    bruteforce_rec(classes, 0, id, tally);

    std::map<CycleType, Rat> out;
    for (const auto& [t, count] : tally) out.emplace(t, make_rat(count, tuples));
    return out;
}

std::vector<Permutation> conjugacy_class_elements(const CycleType& t) {
    int n = t.n();
    std::vector<int> word(static_cast<size_t>(n));
    std::iota(word.begin(), word.end(), 0);
    std::vector<Permutation> out;
    do {
        Permutation p(word);
        if (cycle_type(p) == t) out.push_back(p);
    } while (std::next_permutation(word.begin(), word.end()));
    return out;
}

}  // namespace genusforge
