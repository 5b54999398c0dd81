#include "genusforge/permutation.hpp"

#include "genusforge/numbers.hpp"

#include <algorithm>
#include <numeric>

namespace genusforge {

Permutation::Permutation(std::vector<int> word) : word_(std::move(word)) {
    int n = static_cast<int>(word_.size());
    std::vector<char> seen(static_cast<size_t>(n), 0);
    for (int v : word_) {
        if (v < 0 || v >= n || seen[static_cast<size_t>(v)])
            throw std::domain_error("Permutation: word is not a bijection");
        seen[static_cast<size_t>(v)] = 1;
    }
}

Permutation Permutation::identity(int n) {
    if (n < 0) throw std::domain_error("Permutation::identity: negative size");
    std::vector<int> w(static_cast<size_t>(n));
    std::iota(w.begin(), w.end(), 0);
    return Permutation(std::move(w));
}

Permutation Permutation::rotation(int n) {
    if (n <= 0) throw std::domain_error("Permutation::rotation: size must be positive");
    std::vector<int> w(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) w[static_cast<size_t>(i)] = (i + 1) % n;
    return Permutation(std::move(w));
}

bool Permutation::is_identity() const {
    for (int i = 0; i < size(); ++i)
        if (word_[static_cast<size_t>(i)] != i) return false;
    return true;
}

Permutation compose(const Permutation& a, const Permutation& b) {
    if (a.size() != b.size()) throw std::domain_error("compose: size mismatch");
    std::vector<int> w(static_cast<size_t>(a.size()));
    for (int i = 0; i < a.size(); ++i) w[static_cast<size_t>(i)] = a(b(i));
    return Permutation(std::move(w));
}

Permutation inverse(const Permutation& p) {
    std::vector<int> w(static_cast<size_t>(p.size()));
    for (int i = 0; i < p.size(); ++i) w[static_cast<size_t>(p(i))] = i;
    return Permutation(std::move(w));
}

CycleType::CycleType(int n, std::vector<long> counts) : n_(n), counts_(std::move(counts)) {
    if (n < 0) throw std::domain_error("CycleType: negative n");
    if (static_cast<int>(counts_.size()) != n + 1)
        throw std::domain_error("CycleType: counts must have size n + 1");
    long total = 0;
    if (!counts_.empty() && counts_[0] != 0)
        throw std::domain_error("CycleType: counts[0] must be zero");
    for (int j = 1; j <= n; ++j) {
        if (counts_[static_cast<size_t>(j)] < 0)
            throw std::domain_error("CycleType: negative multiplicity");
        total += j * counts_[static_cast<size_t>(j)];
    }
    if (total != n) throw std::domain_error("CycleType: parts do not sum to n");
}

CycleType CycleType::from_parts(int n, const std::vector<int>& parts) {
    std::vector<long> counts(static_cast<size_t>(n) + 1, 0);
    for (int p : parts) {
        if (p < 1 || p > n) throw std::domain_error("CycleType::from_parts: part out of range");
        ++counts[static_cast<size_t>(p)];
    }
    return CycleType(n, std::move(counts));
}

CycleType CycleType::identity(int n) {
    std::vector<long> counts(static_cast<size_t>(n) + 1, 0);
    if (n > 0) counts[1] = n;
    return CycleType(n, std::move(counts));
}

CycleType CycleType::single_cycle(int n) {
    if (n < 1) throw std::domain_error("CycleType::single_cycle: n must be positive");
    std::vector<long> counts(static_cast<size_t>(n) + 1, 0);
    counts[static_cast<size_t>(n)] = 1;
    return CycleType(n, std::move(counts));
}

CycleType CycleType::fixed_point_free(int n) {
    if (n < 2 || n % 2 != 0)
        throw std::domain_error("CycleType::fixed_point_free: n must be even and positive");
    std::vector<long> counts(static_cast<size_t>(n) + 1, 0);
    counts[2] = n / 2;
    return CycleType(n, std::move(counts));
}

long CycleType::count(int length) const {
    if (length < 1 || length > n_) return 0;
    return counts_[static_cast<size_t>(length)];
}

long CycleType::total_cycles() const {
    long total = 0;
    for (int j = 1; j <= n_; ++j) total += counts_[static_cast<size_t>(j)];
    return total;
}

int CycleType::min_part() const {
    for (int j = 1; j <= n_; ++j)
        if (counts_[static_cast<size_t>(j)] > 0) return j;
    return 0;
}

std::vector<int> CycleType::support() const {
    std::vector<int> out;
    for (int j = 1; j <= n_; ++j)
        if (counts_[static_cast<size_t>(j)] > 0) out.push_back(j);
    return out;
}

std::vector<int> CycleType::parts() const {
    std::vector<int> out;
    for (int j = n_; j >= 1; --j)
        for (long c = 0; c < counts_[static_cast<size_t>(j)]; ++c) out.push_back(j);
    return out;
}

CycleType cycle_type(const Permutation& p) {
    int n = p.size();
    std::vector<long> counts(static_cast<size_t>(n) + 1, 0);
    std::vector<char> seen(static_cast<size_t>(n), 0);
    for (int i = 0; i < n; ++i) {
        if (seen[static_cast<size_t>(i)]) continue;
        int len = 0;
        int j = i;
        while (!seen[static_cast<size_t>(j)]) {
            seen[static_cast<size_t>(j)] = 1;
            j = p(j);
            ++len;
        }
        ++counts[static_cast<size_t>(len)];
    }
    return CycleType(n, std::move(counts));
}

long cycle_count(const Permutation& p) {
    return cycle_type(p).total_cycles();
}

Int class_size(const CycleType& t) {
    Int out = factorial(t.n());
    for (int j : t.support()) {
        Int denom;
        mpz_ui_pow_ui(denom.get_mpz_t(), static_cast<unsigned long>(j),
                      static_cast<unsigned long>(t.count(j)));
        denom *= factorial(t.count(j));
        mpz_divexact(out.get_mpz_t(), out.get_mpz_t(), denom.get_mpz_t());
    }
    return out;
}

namespace {

void matchings_rec(std::vector<int>& word, std::vector<char>& used, int n,
                   const std::function<void(const Permutation&)>& fn) {
    int first = -1;
    for (int i = 0; i < n; ++i) {
        if (!used[static_cast<size_t>(i)]) {
            first = i;
            break;
        }
    }
    if (first < 0) {
        fn(Permutation(word));
        return;
    }
    used[static_cast<size_t>(first)] = 1;
    for (int j = first + 1; j < n; ++j) {
        if (used[static_cast<size_t>(j)]) continue;
        used[static_cast<size_t>(j)] = 1;
        word[static_cast<size_t>(first)] = j;
        word[static_cast<size_t>(j)] = first;
        matchings_rec(word, used, n, fn);
        used[static_cast<size_t>(j)] = 0;
    }
    used[static_cast<size_t>(first)] = 0;
}

}  // namespace

void for_each_matching(int n, const std::function<void(const Permutation&)>& fn, int limit) {
    if (n < 2 || n % 2 != 0)
        throw std::domain_error("for_each_matching: n must be even and positive");
    if (n > limit) throw std::domain_error("for_each_matching: n exceeds enumeration limit");
    std::vector<int> word(static_cast<size_t>(n), -1);
    std::vector<char> used(static_cast<size_t>(n), 0);
    matchings_rec(word, used, n, fn);
}

std::vector<Permutation> enumerate_matchings(int n, int limit) {
    std::vector<Permutation> out;
    for_each_matching(n, [&](const Permutation& p) { out.push_back(p); }, limit);
    return out;
}

Permutation sample_matching(int n, RngState& rng) {
    if (n < 2 || n % 2 != 0)
        throw std::domain_error("sample_matching: n must be even and positive");
    std::vector<int> word(static_cast<size_t>(n), -1);
    std::vector<int> free_list(static_cast<size_t>(n));
    std::iota(free_list.begin(), free_list.end(), 0);
    while (!free_list.empty()) {
        int a = free_list.front();
        size_t pick = 1 + static_cast<size_t>(rng.below(free_list.size() - 1));
        int b = free_list[pick];
        word[static_cast<size_t>(a)] = b;
        word[static_cast<size_t>(b)] = a;
        free_list.erase(free_list.begin() + static_cast<std::ptrdiff_t>(pick));
        free_list.erase(free_list.begin());
    }
    return Permutation(std::move(word));
}

Permutation sample_unicyclic(int n, RngState& rng) {
    if (n < 1) throw std::domain_error("sample_unicyclic: n must be positive");
    // Random cycle (0, a_1, ..., a_{n-1}) from a Fisher-Yates shuffle of the
    // remaining points; every n-cycle arises from exactly one arrangement.
    std::vector<int> rest(static_cast<size_t>(n) - 1);
    std::iota(rest.begin(), rest.end(), 1);
    for (size_t i = rest.size(); i > 1; --i) {
        size_t j = static_cast<size_t>(rng.below(i));
        std::swap(rest[i - 1], rest[j]);
    }
    std::vector<int> word(static_cast<size_t>(n));
    int prev = 0;
    for (int v : rest) {
        word[static_cast<size_t>(prev)] = v;
        prev = v;
    }
    word[static_cast<size_t>(prev)] = 0;
    return Permutation(std::move(word));
}

Permutation sample_class(const CycleType& t, RngState& rng) {
    int n = t.n();
    std::vector<int> points(static_cast<size_t>(n));
    std::iota(points.begin(), points.end(), 0);
    for (size_t i = points.size(); i > 1; --i) {
        size_t j = static_cast<size_t>(rng.below(i));
        std::swap(points[i - 1], points[j]);
    }
    // Fill cycles from consecutive blocks of the shuffled points. Each
    // permutation of the class arises from the same number of arrangements,
    // so the result is uniform on the class.
    std::vector<int> word(static_cast<size_t>(n));
    size_t pos = 0;
    for (int len : t.parts()) {
        size_t start = pos;
        for (int k = 0; k < len - 1; ++k) {
            word[static_cast<size_t>(points[pos])] = points[pos + 1];
            ++pos;
        }
        word[static_cast<size_t>(points[pos])] = points[start];
        ++pos;
    }
    return Permutation(std::move(word));
}

}  // namespace genusforge
