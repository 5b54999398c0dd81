#pragma once

// Combinatorial number families: factorials, double factorials, binomial
// coefficients (with the generalized negative-upper-index convention), Stirling
// cycle numbers, and Catalan numbers.

#include "genusforge/exact.hpp"

namespace genusforge {

// n! for n >= 0. Cached, thread safe.
Int factorial(long n);

// k!! with the conventions (-1)!! = 0!! = 1; defined for k >= -1.
Int double_factorial(long k);

// Generalized binomial coefficient C(a, b) for any integer a and b:
// zero when b < 0, and for negative a the reflection
// C(-l, k) = (-1)^k C(l+k-1, k) (which mpz_bin_ui implements natively).
Int binomial(long a, long b);

// Unsigned Stirling cycle number [l choose v]: permutations of l elements with
// exactly v cycles. Recurrence s(l+1, v) = s(l, v-1) + l * s(l, v). Cached.
Int stirling_cycle(long l, long v);

// Catalan number C(2n, n) / (n + 1).
Int catalan(long n);

}  // namespace genusforge
