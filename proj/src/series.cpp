#include "genusforge/series.hpp"

#include "genusforge/numbers.hpp"
#include "genusforge/poly.hpp"

namespace genusforge {

BivariateSeries hz_series(int order_n) {
    if (order_n < 1) throw std::domain_error("hz_series: order must be at least 1");
    int xmax = order_n + 1;

    // log((1+x)/(1-x)) = 2 * (x + x^3/3 + x^5/5 + ...)
    ExactPoly ell(xmax);
    for (int k = 1; k <= xmax; k += 2) ell.set_coeff(k, make_rat(2L, k));

    // exp(y * L) = sum_m y^m L^m / m!; L has no constant term, so L^m only
    // contributes to x-degrees >= m and the y-degree never exceeds the
    // x-degree (triangularity).
    BivariateSeries out(xmax);
    out.add_to_coeff(0, 0, Rat(1));
    ExactPoly power = ExactPoly::constant(xmax, Rat(1));
    for (int m = 1; m <= xmax; ++m) {
        power = power * ell;
        Rat inv_fact = make_rat(Int(1), factorial(m));
        for (int i = m; i <= xmax; ++i) {
            const Rat& c = power.coeff(i);
            if (c == 0) continue;
            out.add_to_coeff(i, m, c * inv_fact);
        }
    }
    return out;
}

}  // namespace genusforge
