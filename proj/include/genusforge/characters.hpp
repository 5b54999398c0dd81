#pragma once

// Symmetric group characters: a general Murnaghan-Nakayama rim hook engine,
// closed forms for hook shape characters on the classes that drive the gluing
// model (full cycles and fixed-point-free involutions), and the hook weights
// F(N, arm) appearing in the spectral expansion of the gluing law.

#include "genusforge/exact.hpp"
#include "genusforge/partition.hpp"
#include "genusforge/permutation.hpp"

#include <vector>

namespace genusforge {

// Hook shape (arm, 1^(leg-1)) with arm + leg - 1 = n cells; arm in [1, n].
struct HookShape {
    int n;
    int arm;

    HookShape(int n_, int arm_) : n(n_), arm(arm_) {
        if (n < 1 || arm < 1 || arm > n)
            throw std::domain_error("HookShape: arm must lie in [1, n]");
    }

    int leg() const { return n + 1 - arm; }

    Partition to_partition() const {
        std::vector<int> parts(static_cast<size_t>(leg()), 1);
        parts[0] = arm;
        return Partition(std::move(parts));
    }
};

// Character chi^shape evaluated on the class of the given cycle type, by the
// Murnaghan-Nakayama rule (rim hook removal, largest part first).
Int mn_character(const Partition& shape, const CycleType& type);

// Same, removing rim hooks in the order given by the composition. The value
// is independent of the order; exposing it makes that testable.
Int mn_character(const Partition& shape, const std::vector<int>& composition);

// chi^(arm, 1^(leg-1)) on the single n-cycle class: (-1)^(leg - 1).
Int chi_hook_on_ncycle(const HookShape& h);

// chi^(arm, 1^(leg-1)) on the fixed-point-free involution class (n even):
//   arm even: (-1)^((leg-1)/2) C((n-2)/2, (arm-2)/2)
//   arm odd:  (-1)^(leg/2)     C((n-2)/2, (arm-1)/2)
Int chi_hook_on_involution(const HookShape& h);

// chi^(arm, 1^(leg-1)) on an arbitrary class, via the generating function
//   (-1)^(leg + cycles(type)) [xi^arm] xi/(1-xi) * prod_r (1 - xi^r)^(m_r)
// where m_r is the multiplicity of part r in the type.
Int chi_hook_general(const HookShape& h, const CycleType& type);

// Hook weight F(N, arm) = chi_hook_on_involution * chi_hook_on_ncycle / dim,
// in the closed form (N = n_points even, arm in [1, N], leg = N + 1 - arm)
//   arm even: (-1)^((leg-1)/2)  C((N-2)/2, (arm-2)/2) / C(N-1, arm-1)
//   arm odd:  (-1)^((leg+2)/2)  C((N-2)/2, (arm-1)/2) / C(N-1, arm-1)
Rat f_weight(int n_points, int arm);

// (-1)^leg F(N, arm); equals (-1)^(n - m + 1) Q(n, m) with N = 2n and
// m = floor(arm / 2), valid for every arm in [1, N].
Rat signed_f_weight(int n_points, int arm);

// Q(n, m) = (2m-1)!! (2(n-m)-1)!! / (2n-1)!! for 0 <= m <= n; half_n is n.
Rat q_weight(int half_n, int m);

}  // namespace genusforge
