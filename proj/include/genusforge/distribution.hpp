#pragma once

// The distribution of the vertex count X_n of the surface obtained by gluing
// the sides of a 2n-gon in pairs: X_n is the cycle count of (matching) *
// (rotation) on 2n points, takes values nu in {1, ..., n+1} with
// nu = n + 1 (mod 2), and determines the genus via nu = n + 1 - 2g.
// Three independent exact routes compute it:
//   dist_via_theorem  - hook character expansion with A(n, nu, lambda1) weights
//   dist_via_stirling - explicit Stirling cycle number formula
//   dist_via_hz       - coefficient extraction from ((1+x)/(1-x))^y

#include "genusforge/exact.hpp"

#include <map>
#include <utility>
#include <vector>

namespace genusforge {

class GenusDistribution {
  public:
    // prob[nu] = P(X_n = nu) for nu in [0, n+1]; prob[0] must be zero, the
    // parity-forbidden entries must be zero, and the total mass must be one.
    GenusDistribution(int n, std::vector<Rat> prob);

    int n() const { return n_; }

    // P(X_n = nu); zero outside [1, n+1].
    Rat prob(long nu) const;

    // Parity-admissible values nu = n+1, n-1, ..., ascending.
    std::vector<long> support() const;

    // epsilon_g = (2n-1)!! P(X_n = n + 1 - 2g): the number of gluings of
    // genus g, for g = 0, ..., floor(n/2). Integrality is asserted.
    std::map<long, Int> epsilon_counts() const;

    Rat expected_value() const;
    Rat variance() const;

    bool operator==(const GenusDistribution&) const = default;

  private:
    int n_;
    std::vector<Rat> prob_;
};

// Weight A(n, nu, lambda1) multiplying the signed hook weight in the theorem
// route:
//   (-1)^(lambda1 - 1) C(2n-1, 2n-lambda1)
//     * sum_{l = max(nu, lambda1)}^{2n} (-1)^l s(l, nu)/l! C(2n-lambda1, 2n-l).
// lambda1 must lie in [1, 2n] and nu must be positive; nu > 2n gives zero.
Rat a_coefficient(int n, long nu, int lambda1);

// P(X_n = nu) = sum_{lambda1} signed_f_weight(2n, lambda1) A(n, nu, lambda1).
GenusDistribution dist_via_theorem(int n);

// P(X_n = nu) = sum_{l = nu}^{n+1} (-1)^(l + n - 1) 2^(l-1) s(l, nu)/l! C(n, l-1).
GenusDistribution dist_via_stirling(int n);

// P(X_n = nu) = [x^(n+1) y^nu] ((1+x)/(1-x))^y / 2.
GenusDistribution dist_via_hz(int n);

// Gluing counts by genus, epsilon_g(n), via the cheapest exact route.
std::map<long, Int> epsilon_counts(int n);

// The theorem-route sum split by arm parity: (even-arm part, odd-arm part).
// Each piece has its own closed form and they sum to P(X_n = nu).
std::pair<Rat, Rat> even_odd_split(int n, long nu);

}  // namespace genusforge
