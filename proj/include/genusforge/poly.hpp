#pragma once

// Truncated univariate polynomials (power series prefixes) with exact rational
// coefficients. Every instance carries its truncation order; coefficients of
// x^k for k > truncation are not represented and asking for them throws.

#include "genusforge/exact.hpp"

#include <vector>

namespace genusforge {

class ExactPoly {
  public:
    explicit ExactPoly(int truncation)
        : trunc_(truncation), coeff_(static_cast<size_t>(truncation) + 1, Rat(0)) {
        if (truncation < 0) throw std::domain_error("ExactPoly: negative truncation");
    }

    static ExactPoly constant(int truncation, const Rat& c) {
        ExactPoly p(truncation);
        p.coeff_[0] = c;
        return p;
    }

    // c * x^k (zero polynomial if k exceeds the truncation).
    static ExactPoly monomial(int truncation, int k, const Rat& c) {
        ExactPoly p(truncation);
        if (k < 0) throw std::domain_error("ExactPoly::monomial: negative degree");
        if (k <= truncation) p.coeff_[static_cast<size_t>(k)] = c;
        return p;
    }

    // 1 + x + ... + x^(length-1), truncated.
    static ExactPoly geometric_prefix(int truncation, int length) {
        ExactPoly p(truncation);
        for (int k = 0; k < length && k <= truncation; ++k) p.coeff_[static_cast<size_t>(k)] = 1;
        return p;
    }

    // 1/(1-x) as a series prefix: all coefficients equal to one.
    static ExactPoly geometric_series(int truncation) {
        return geometric_prefix(truncation, truncation + 1);
    }

    // log(1/(1-x)) = sum_{k>=1} x^k / k, truncated.
    static ExactPoly log_geometric(int truncation) {
        ExactPoly p(truncation);
        for (int k = 1; k <= truncation; ++k) p.coeff_[static_cast<size_t>(k)] = make_rat(1L, k);
        return p;
    }

    int truncation() const { return trunc_; }

    const Rat& coeff(int k) const {
        if (k < 0 || k > trunc_) throw std::domain_error("ExactPoly::coeff: degree out of range");
        return coeff_[static_cast<size_t>(k)];
    }

    void set_coeff(int k, const Rat& c) {
        if (k < 0 || k > trunc_) throw std::domain_error("ExactPoly::set_coeff: degree out of range");
        coeff_[static_cast<size_t>(k)] = c;
    }

    ExactPoly& operator+=(const ExactPoly& o) {
        require_same_truncation(o);
        for (size_t k = 0; k < coeff_.size(); ++k) coeff_[k] += o.coeff_[k];
        return *this;
    }

    ExactPoly& operator-=(const ExactPoly& o) {
        require_same_truncation(o);
        for (size_t k = 0; k < coeff_.size(); ++k) coeff_[k] -= o.coeff_[k];
        return *this;
    }

    friend ExactPoly operator+(ExactPoly a, const ExactPoly& b) { return a += b; }
    friend ExactPoly operator-(ExactPoly a, const ExactPoly& b) { return a -= b; }

    ExactPoly operator-() const {
        ExactPoly out(trunc_);
        for (size_t k = 0; k < coeff_.size(); ++k) out.coeff_[k] = -coeff_[k];
        return out;
    }

    friend ExactPoly operator*(const ExactPoly& a, const ExactPoly& b) {
        a.require_same_truncation(b);
        ExactPoly out(a.trunc_);
        for (int i = 0; i <= a.trunc_; ++i) {
            if (a.coeff_[static_cast<size_t>(i)] == 0) continue;
            for (int j = 0; i + j <= a.trunc_; ++j) {
                if (b.coeff_[static_cast<size_t>(j)] == 0) continue;
                out.coeff_[static_cast<size_t>(i + j)] +=
                    a.coeff_[static_cast<size_t>(i)] * b.coeff_[static_cast<size_t>(j)];
            }
        }
        return out;
    }

    ExactPoly pow(long e) const {
        if (e < 0) throw std::domain_error("ExactPoly::pow: negative exponent");
        ExactPoly out = constant(trunc_, Rat(1));
        ExactPoly base = *this;
        while (e > 0) {
            if (e & 1) out = out * base;
            base = base * base;
            e >>= 1;
        }
        return out;
    }

    bool operator==(const ExactPoly&) const = default;

  private:
    void require_same_truncation(const ExactPoly& o) const {
        if (trunc_ != o.trunc_)
            throw std::domain_error("ExactPoly: mixed truncation orders");
    }

    int trunc_;
    std::vector<Rat> coeff_;
};

}  // namespace genusforge
