#pragma once

// Bivariate power series in x (marking the polygon size) and y (marking the
// cycle count), truncated in x. The generating function of interest is
//
//   ((1+x)/(1-x))^y = 1 + 2 * sum_{n>=0} x^(n+1) E[y^(X_n)]
//
// where X_n is the number of cycles of (matching) * (rotation) on 2n points.
// The coefficient array is triangular: [x^i y^j] vanishes for j > i.

#include "genusforge/exact.hpp"

#include <vector>

namespace genusforge {

class BivariateSeries {
  public:
    explicit BivariateSeries(int order) : order_(order) {
        if (order < 0) throw std::domain_error("BivariateSeries: negative order");
        coeffs_.resize(static_cast<size_t>(order) + 1);
        for (int i = 0; i <= order; ++i)
            coeffs_[static_cast<size_t>(i)].assign(static_cast<size_t>(i) + 1, Rat(0));
    }

    int order() const { return order_; }

    // Coefficient of x^i y^j. Exploits triangularity: j > i gives exact zero.
    const Rat& coeff(int i, int j) const {
        if (i < 0 || j < 0 || i > order_)
            throw std::domain_error("BivariateSeries::coeff: index out of range");
        if (j > i) return zero_;
        return coeffs_[static_cast<size_t>(i)][static_cast<size_t>(j)];
    }

    void add_to_coeff(int i, int j, const Rat& c) {
        if (i < 0 || j < 0 || j > i || i > order_)
            throw std::domain_error("BivariateSeries::add_to_coeff: index out of range");
        coeffs_[static_cast<size_t>(i)][static_cast<size_t>(j)] += c;
    }

  private:
    int order_;
    std::vector<std::vector<Rat>> coeffs_;
    Rat zero_ = Rat(0);
};

// Expands ((1+x)/(1-x))^y = exp(y * L(x)) with L(x) = 2 * sum_{odd k} x^k / k,
// keeping x-degrees through order_n + 1 so that the coefficient of x^(n+1)
// is available for every n <= order_n. Requires order_n >= 1.
BivariateSeries hz_series(int order_n);

}  // namespace genusforge
