#include "genusforge/distribution.hpp"

#include "genusforge/characters.hpp"
#include "genusforge/numbers.hpp"
#include "genusforge/series.hpp"

namespace genusforge {

GenusDistribution::GenusDistribution(int n, std::vector<Rat> prob)
    : n_(n), prob_(std::move(prob)) {
    if (n < 0) throw std::domain_error("GenusDistribution: negative n");
    if (static_cast<int>(prob_.size()) != n + 2)
        throw std::domain_error("GenusDistribution: probability vector must have size n + 2");
    if (prob_[0] != 0)
        throw std::logic_error("GenusDistribution: mass at nu = 0");
    Rat total(0);
    for (int nu = 1; nu <= n + 1; ++nu) {
        const Rat& p = prob_[static_cast<size_t>(nu)];
        if (p < 0) throw std::logic_error("GenusDistribution: negative probability");
        if ((nu - (n + 1)) % 2 != 0 && p != 0)
            throw std::logic_error("GenusDistribution: mass at parity-forbidden value");
        total += p;
    }
    if (total != 1) throw std::logic_error("GenusDistribution: total mass is not one");
}

Rat GenusDistribution::prob(long nu) const {
    if (nu < 1 || nu > n_ + 1) return Rat(0);
    return prob_[static_cast<size_t>(nu)];
}

std::vector<long> GenusDistribution::support() const {
    std::vector<long> out;
    long start = (n_ + 1) % 2 == 0 ? 2 : 1;
    for (long nu = start; nu <= n_ + 1; nu += 2) out.push_back(nu);
    return out;
}

std::map<long, Int> GenusDistribution::epsilon_counts() const {
    Int matchings = double_factorial(2L * n_ - 1);
    std::map<long, Int> out;
    for (long g = 0; g <= n_ / 2; ++g) {
        Rat count = Rat(matchings) * prob(n_ + 1 - 2 * g);
        if (!is_integer(count) || count < 0)
            throw std::logic_error("epsilon_counts: count is not a nonnegative integer");
        out.emplace(g, to_integer(count));
    }
    return out;
}

Rat GenusDistribution::expected_value() const {
    Rat total(0);
    for (long nu = 1; nu <= n_ + 1; ++nu) total += Rat(nu) * prob(nu);
    return total;
}

Rat GenusDistribution::variance() const {
    Rat mean = expected_value();
    Rat total(0);
    for (long nu = 1; nu <= n_ + 1; ++nu) {
        Rat d = Rat(nu) - mean;
        total += d * d * prob(nu);
    }
    return total;
}

Rat a_coefficient(int n, long nu, int lambda1) {
    if (n < 1) throw std::domain_error("a_coefficient: n must be positive");
    if (lambda1 < 1 || lambda1 > 2 * n)
        throw std::domain_error("a_coefficient: lambda1 out of range");
    if (nu < 1) throw std::domain_error("a_coefficient: nu must be positive");
    if (nu > 2 * n) return Rat(0);
    long N = 2L * n;
    Rat sum(0);
    for (long l = std::max(nu, static_cast<long>(lambda1)); l <= N; ++l) {
        Int s = stirling_cycle(l, nu);
        if (s == 0) continue;
        Int b = binomial(N - lambda1, N - l);
        if (b == 0) continue;
        Rat term = make_rat(s * b, factorial(l));
        if (l % 2 == 0)
            sum += term;
        else
            sum -= term;
    }
    sum *= Rat(binomial(N - 1, N - lambda1));
    // Prefactor (-1)^(lambda1 - 1).
    return (lambda1 % 2 == 1) ? sum : -sum;
}

GenusDistribution dist_via_theorem(int n) {
    if (n < 0) throw std::domain_error("dist_via_theorem: negative n");
    std::vector<Rat> prob(static_cast<size_t>(n) + 2, Rat(0));
    if (n == 0) {
        prob[1] = 1;
        return GenusDistribution(n, std::move(prob));
    }
    for (long nu = 1; nu <= n + 1; ++nu) {
        Rat total(0);
        for (int lambda1 = 1; lambda1 <= 2 * n; ++lambda1)
            total += signed_f_weight(2 * n, lambda1) * a_coefficient(n, nu, lambda1);
        prob[static_cast<size_t>(nu)] = total;
    }
    return GenusDistribution(n, std::move(prob));
}

GenusDistribution dist_via_stirling(int n) {
    if (n < 0) throw std::domain_error("dist_via_stirling: negative n");
    std::vector<Rat> prob(static_cast<size_t>(n) + 2, Rat(0));
    if (n == 0) {
        prob[1] = 1;
        return GenusDistribution(n, std::move(prob));
    }
    for (long nu = 1; nu <= n + 1; ++nu) {
        Rat total(0);
        for (long l = nu; l <= n + 1; ++l) {
            Int s = stirling_cycle(l, nu);
            if (s == 0) continue;
            Int b = binomial(n, l - 1);
            if (b == 0) continue;
            Rat term = make_rat(s * b, factorial(l)) * pow2(l - 1);
            if ((l + n - 1) % 2 == 0)
                total += term;
            else
                total -= term;
        }
        prob[static_cast<size_t>(nu)] = total;
    }
    return GenusDistribution(n, std::move(prob));
}

GenusDistribution dist_via_hz(int n) {
    if (n < 0) throw std::domain_error("dist_via_hz: negative n");
    std::vector<Rat> prob(static_cast<size_t>(n) + 2, Rat(0));
    if (n == 0) {
        prob[1] = 1;
        return GenusDistribution(n, std::move(prob));
    }
    BivariateSeries series = hz_series(n);
    for (long nu = 1; nu <= n + 1; ++nu)
        prob[static_cast<size_t>(nu)] =
            series.coeff(n + 1, static_cast<int>(nu)) / Rat(2);
    return GenusDistribution(n, std::move(prob));
}

std::map<long, Int> epsilon_counts(int n) {
    return dist_via_stirling(n).epsilon_counts();
}

std::pair<Rat, Rat> even_odd_split(int n, long nu) {
    if (n < 1) throw std::domain_error("even_odd_split: n must be positive");
    if (nu < 1) throw std::domain_error("even_odd_split: nu must be positive");
    Rat even(0);
    Rat odd(0);
    for (int lambda1 = 1; lambda1 <= 2 * n; ++lambda1) {
        Rat term = signed_f_weight(2 * n, lambda1) * a_coefficient(n, nu, lambda1);
        if (lambda1 % 2 == 0)
            even += term;
        else
            odd += term;
    }
    return {even, odd};
}

}  // namespace genusforge
