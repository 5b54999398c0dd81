#include "genusforge/verify.hpp"

#include "genusforge/characters.hpp"
#include "genusforge/distribution.hpp"
#include "genusforge/fourier.hpp"
#include "genusforge/numbers.hpp"
#include "genusforge/oracle.hpp"
#include "genusforge/poly.hpp"
#include "genusforge/rng.hpp"
#include "genusforge/series.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace genusforge {

namespace {

void run_check(std::vector<CheckResult>& out, const std::string& suite,
               const std::string& name, const std::string& params,
               const std::function<bool()>& body) {
    CheckResult r{suite, name, params, false};
    try {
        r.pass = body();
    } catch (const std::exception&) {
        r.pass = false;
    }
    out.push_back(std::move(r));
}

}  // namespace

std::vector<CheckResult> verify_identities() {
    std::vector<CheckResult> out;
    const std::string suite = "identities";

    // sum_j (-1)^j C(a,j) C(2j,b) = (-1)^a C(a, b-a) 2^(2a-b)
    run_check(out, suite, "gould_even_sum", "a<=12", [] {
        for (long a = 0; a <= 12; ++a) {
            for (long b = 0; b <= 2 * a; ++b) {
                Rat lhs(0);
                for (long j = 0; j <= a; ++j) {
                    Rat term(binomial(a, j) * binomial(2 * j, b));
                    lhs += (j % 2 == 0) ? term : -term;
                }
                Rat rhs = Rat(binomial(a, b - a)) * pow2(2 * a - b);
                if (a % 2 == 1) rhs = -rhs;
                if (lhs != rhs) return false;
            }
        }
        return true;
    });

    // sum_j (-1)^j C(a,j) C(2j+1,b)
    //   = (-1)^a [C(a, b-a) 2^(2a-b) + C(a, b-a-1) 2^(2a+1-b)]
    run_check(out, suite, "gould_odd_sum", "a<=12", [] {
        for (long a = 0; a <= 12; ++a) {
            for (long b = 0; b <= 2 * a + 1; ++b) {
                Rat lhs(0);
                for (long j = 0; j <= a; ++j) {
                    Rat term(binomial(a, j) * binomial(2 * j + 1, b));
                    lhs += (j % 2 == 0) ? term : -term;
                }
                Rat rhs = Rat(binomial(a, b - a)) * pow2(2 * a - b) +
                          Rat(binomial(a, b - a - 1)) * pow2(2 * a + 1 - b);
                if (a % 2 == 1) rhs = -rhs;
                if (lhs != rhs) return false;
            }
        }
        return true;
    });

    // Row sums of Stirling cycle numbers are factorials.
    run_check(out, suite, "stirling_row_sum", "l<=10", [] {
        for (long l = 0; l <= 10; ++l) {
            Int total = 0;
            for (long v = 0; v <= l; ++v) total += stirling_cycle(l, v);
            if (total != factorial(l)) return false;
        }
        return true;
    });

    // (1/v!) log(1/(1-x))^v = sum_l x^l s(l,v)/l!, as truncated series.
    run_check(out, suite, "stirling_log_series", "truncation=10", [] {
        const int T = 10;
        ExactPoly log_term = ExactPoly::log_geometric(T);
        for (long v = 0; v <= T; ++v) {
            ExactPoly lhs = log_term.pow(v);
            ExactPoly expect(T);
            for (long l = 0; l <= T; ++l) {
                Int s = stirling_cycle(l, v);
                if (s != 0)
                    expect.set_coeff(static_cast<int>(l),
                                     make_rat(s * factorial(v), factorial(l)));
            }
            if (lhs != expect) return false;
        }
        return true;
    });

    // (-1)^leg F(N, arm) = (-1)^(n-m+1) Q(n, m), m = floor(arm/2), all arms.
    run_check(out, suite, "f_weight_q_identity", "N<=20", [] {
        for (int N = 2; N <= 20; N += 2) {
            int half = N / 2;
            for (int arm = 1; arm <= N; ++arm) {
                int m = arm / 2;
                Rat rhs = q_weight(half, m);
                if ((half - m + 1) % 2 != 0) rhs = -rhs;
                if (signed_f_weight(N, arm) != rhs) return false;
            }
        }
        return true;
    });

    return out;
}

std::vector<CheckResult> verify_characters(int n_max) {
    std::vector<CheckResult> out;
    const std::string suite = "characters";

    // sum over shapes of f^2 = N!.
    run_check(out, suite, "dimension_square_sum", "N<=10", [] {
        for (int N = 1; N <= 10; ++N) {
            Int total = 0;
            for (const Partition& shape : partitions_of(N)) {
                Int d = dimension(shape);
                total += d * d;
            }
            if (total != factorial(N)) return false;
        }
        return true;
    });

    // chi(identity) equals the dimension.
    run_check(out, suite, "character_at_identity", "N<=8", [] {
        for (int N = 1; N <= 8; ++N)
            for (const Partition& shape : partitions_of(N))
                if (mn_character(shape, CycleType::identity(N)) != dimension(shape))
                    return false;
        return true;
    });

    // Hook dimension is C(N-1, arm-1).
    run_check(out, suite, "hook_dimension", "N<=12", [] {
        for (int N = 1; N <= 12; ++N)
            for (int arm = 1; arm <= N; ++arm)
                if (dimension(HookShape(N, arm).to_partition()) != binomial(N - 1, arm - 1))
                    return false;
        return true;
    });

    // On the full cycle class, hooks give (-1)^(leg-1) and all other shapes
    // vanish.
    run_check(out, suite, "ncycle_character", "N<=8", [] {
        for (int N = 1; N <= 8; ++N) {
            CycleType full = CycleType::single_cycle(N);
            for (const Partition& shape : partitions_of(N)) {
                Int chi = mn_character(shape, full);
                if (shape.is_hook()) {
                    HookShape h(N, shape.part(0));
                    if (chi != chi_hook_on_ncycle(h)) return false;
                } else if (chi != 0) {
                    return false;
                }
            }
        }
        return true;
    });

    run_check(out, suite, "hook_involution_closed_form", "N<=10", [] {
        for (int N = 2; N <= 10; N += 2) {
            CycleType inv = CycleType::fixed_point_free(N);
            for (int arm = 1; arm <= N; ++arm) {
                HookShape h(N, arm);
                if (mn_character(h.to_partition(), inv) != chi_hook_on_involution(h))
                    return false;
            }
        }
        return true;
    });

    run_check(out, suite, "hook_general_closed_form", "N<=" + std::to_string(n_max), [n_max] {
        for (int N = 1; N <= n_max; ++N)
            for (const Partition& type_shape : partitions_of(N))
                for (int arm = 1; arm <= N; ++arm) {
                    HookShape h(N, arm);
                    CycleType t = CycleType::from_parts(N, type_shape.parts());
                    if (chi_hook_general(h, t) != mn_character(h.to_partition(), t))
                        return false;
                }
        return true;
    });

    // Rim hook removal order does not change the character value.
    run_check(out, suite, "mn_order_independence", "N<=8", [] {
        for (int N = 2; N <= 8; ++N) {
            for (const Partition& shape : partitions_of(N)) {
                for (const Partition& type_shape : partitions_of(N)) {
                    std::vector<int> desc = type_shape.parts();
                    std::vector<int> asc(desc.rbegin(), desc.rend());
                    if (mn_character(shape, desc) != mn_character(shape, asc)) return false;
                }
            }
        }
        return true;
    });

    // Column orthogonality: sum_lambda chi(C) chi(C') = delta N!/|C|.
    run_check(out, suite, "column_orthogonality", "N<=6", [] {
        for (int N = 1; N <= 6; ++N) {
            std::vector<CycleType> classes;
            for (const Partition& p : partitions_of(N))
                classes.push_back(CycleType::from_parts(N, p.parts()));
            std::vector<Partition> shapes = partitions_of(N);
            for (const CycleType& c1 : classes) {
                for (const CycleType& c2 : classes) {
                    Int total = 0;
                    for (const Partition& shape : shapes)
                        total += mn_character(shape, c1) * mn_character(shape, c2);
                    Int expect = 0;
                    if (c1 == c2) {
                        Int sz = class_size(c1);
                        Int f = factorial(N);
                        mpz_divexact(expect.get_mpz_t(), f.get_mpz_t(), sz.get_mpz_t());
                    }
                    if (total != expect) return false;
                }
            }
        }
        return true;
    });

    return out;
}

std::vector<CheckResult> verify_fourier(int n_max, uint64_t seed) {
    std::vector<CheckResult> out;
    const std::string suite = "fourier";

    // Class masses sum to one: sum_t |t| P(product has some fixed element of
    // type t) over representatives covers the group.
    run_check(out, suite, "pointmass_total_mass", "N<=" + std::to_string(std::min(n_max, 6)),
              [n_max] {
        int cap = std::min(n_max, 6);
        for (int N = 2; N <= cap; ++N) {
            std::vector<ClassProductLaw> laws;
            laws.emplace_back(std::vector<CycleType>{CycleType::single_cycle(N)});
            if (N % 2 == 0)
                laws.emplace_back(std::vector<CycleType>{CycleType::fixed_point_free(N),
                                                         CycleType::single_cycle(N)});
            laws.emplace_back(std::vector<CycleType>{CycleType::single_cycle(N),
                                                     CycleType::single_cycle(N)});
            for (const ClassProductLaw& law : laws) {
                Rat total(0);
                for (const Partition& p : partitions_of(N)) {
                    CycleType t = CycleType::from_parts(N, p.parts());
                    total += Rat(class_size(t)) * product_law_pointmass(law, t);
                }
                if (total != 1) return false;
            }
        }
        return true;
    });

    // Character route vs exhaustive convolution.
    run_check(out, suite, "pointmass_vs_bruteforce", "k<=3;N<=" + std::to_string(std::min(n_max, 6)),
              [n_max] {
        int cap2 = std::min(n_max, 6);
        int cap3 = std::min(n_max, 5);
        for (int N = 2; N <= cap2; ++N) {
            std::vector<std::vector<CycleType>> laws;
            std::vector<CycleType> classes;
            for (const Partition& p : partitions_of(N))
                classes.push_back(CycleType::from_parts(N, p.parts()));
            for (const CycleType& c : classes) laws.push_back({c});
            for (const CycleType& c1 : classes)
                for (const CycleType& c2 : classes) laws.push_back({c1, c2});
            if (N <= cap3) {
                laws.push_back({CycleType::single_cycle(N), CycleType::single_cycle(N),
                                CycleType::single_cycle(N)});
                if (N % 2 == 0)
                    laws.push_back({CycleType::fixed_point_free(N),
                                    CycleType::fixed_point_free(N),
                                    CycleType::single_cycle(N)});
            }
            for (const std::vector<CycleType>& cls : laws) {
                ClassProductLaw law(cls);
                std::map<CycleType, Rat> brute = bruteforce_law(law);
                for (const Partition& p : partitions_of(N)) {
                    CycleType t = CycleType::from_parts(N, p.parts());
                    Rat mass = Rat(class_size(t)) * product_law_pointmass(law, t);
                    auto it = brute.find(t);
                    Rat expect = (it == brute.end()) ? Rat(0) : it->second;
                    if (mass != expect) return false;
                }
            }
        }
        return true;
    });

    // Hook-only expansion agrees with the full partition sweep on the gluing
    // law (involution times rotation class).
    run_check(out, suite, "hook_law_agreement", "N<=" + std::to_string(std::min(n_max, 8)),
              [n_max] {
        int cap = std::min(n_max, 8);
        for (int N = 2; N <= cap; N += 2) {
            ClassProductLaw law(std::vector<CycleType>{CycleType::fixed_point_free(N),
                                                       CycleType::single_cycle(N)});
            for (const Partition& p : partitions_of(N)) {
                CycleType t = CycleType::from_parts(N, p.parts());
                if (hook_only_law(t) != product_law_pointmass(law, t)) return false;
            }
        }
        return true;
    });

    // Frobenius counts agree with direct enumeration of identity products.
    run_check(out, suite, "frobenius_vs_enumeration", "k<=3;N<=5", [] {
        for (int N = 2; N <= 5; ++N) {
            std::vector<CycleType> classes;
            for (const Partition& p : partitions_of(N))
                classes.push_back(CycleType::from_parts(N, p.parts()));
            std::vector<std::vector<CycleType>> laws;
            for (const CycleType& c1 : classes)
                for (const CycleType& c2 : classes) {
                    laws.push_back({c1, c2});
                    laws.push_back({c1, c2, CycleType::single_cycle(N)});
                }
            for (const std::vector<CycleType>& cls : laws) {
                ClassProductLaw law(cls);
                std::map<CycleType, Rat> brute = bruteforce_law(law);
                Int tuples = 1;
                for (const CycleType& c : cls) tuples *= class_size(c);
                auto it = brute.find(CycleType::identity(N));
                Rat id_mass = (it == brute.end()) ? Rat(0) : it->second;
                Rat expect_count = id_mass * Rat(tuples);
                if (Rat(frobenius_count(law)) != expect_count) return false;
            }
        }
        return true;
    });

    // Frobenius counts are nonnegative integers on random laws (the function
    // itself throws otherwise).
    run_check(out, suite, "frobenius_integrality", "laws=50;N<=8", [seed] {
        RngState rng(seed);
        for (int trial = 0; trial < 50; ++trial) {
            int N = 2 + static_cast<int>(rng.below(7));
            std::vector<Partition> shapes = partitions_of(N);
            int k = 1 + static_cast<int>(rng.below(3));
            std::vector<CycleType> cls;
            for (int j = 0; j < k; ++j) {
                const Partition& p = shapes[static_cast<size_t>(rng.below(shapes.size()))];
                cls.push_back(CycleType::from_parts(N, p.parts()));
            }
            Int count = frobenius_count(ClassProductLaw(cls));
            if (count < 0) return false;
        }
        return true;
    });

    return out;
}

std::vector<CheckResult> verify_distributions(int n_max, int oracle_limit) {
    std::vector<CheckResult> out;
    const std::string suite = "distributions";

    run_check(out, suite, "four_way_agreement",
              "n<=" + std::to_string(n_max) + ";census<=" + std::to_string(oracle_limit),
              [n_max, oracle_limit] {
        for (int n = 1; n <= n_max; ++n) {
            GenusDistribution a = dist_via_theorem(n);
            GenusDistribution b = dist_via_stirling(n);
            GenusDistribution c = dist_via_hz(n);
            if (!(a == b && b == c)) return false;
            if (n <= oracle_limit) {
                GenusDistribution d = enumerate_census(n, oracle_limit).to_distribution();
                if (!(a == d)) return false;
            }
        }
        return true;
    });

    // Planar gluings are counted by Catalan numbers.
    run_check(out, suite, "catalan_planar", "n<=12", [] {
        for (int n = 1; n <= 12; ++n) {
            std::map<long, Int> eps = epsilon_counts(n);
            if (eps.at(0) != catalan(n)) return false;
        }
        return true;
    });

    // Genus counts total (2n-1)!!.
    run_check(out, suite, "epsilon_total", "n<=20", [] {
        for (int n = 1; n <= 20; ++n) {
            std::map<long, Int> eps = epsilon_counts(n);
            Int total = 0;
            for (const auto& [g, c] : eps) total += c;
            if (total != double_factorial(2L * n - 1)) return false;
        }
        return true;
    });

    // Only nu = n+1 (mod 2) carries mass.
    run_check(out, suite, "parity_support", "n<=20", [] {
        for (int n = 1; n <= 20; ++n) {
            GenusDistribution d = dist_via_stirling(n);
            for (long nu = 1; nu <= n + 1; ++nu)
                if ((nu - (n + 1)) % 2 != 0 && d.prob(nu) != 0) return false;
        }
        return true;
    });

    // E[X_n] both from the law and from the y-derivative of the series.
    run_check(out, suite, "expected_cycles_hz", "n<=12", [] {
        const int order = 12;
        BivariateSeries series = hz_series(order);
        for (int n = 1; n <= order; ++n) {
            Rat from_series(0);
            for (int j = 1; j <= n + 1; ++j)
                from_series += Rat(j) * series.coeff(n + 1, j);
            from_series /= Rat(2);
            if (dist_via_stirling(n).expected_value() != from_series) return false;
        }
        return true;
    });

    // The theorem sum split by arm parity matches the closed forms
    //   even part: sum_l (-1)^(l+n-1) s(l,nu)/l! 2^(l-2) C(n-1, l-2)
    //   odd part:  sum_l (-1)^(l+n-1) s(l,nu)/l!
    //                (2^(l-2) C(n-1, l-2) + 2^(l-1) C(n-1, l-1))
    run_check(out, suite, "even_odd_split", "n<=6", [] {
        for (int n = 1; n <= 6; ++n) {
            GenusDistribution full = dist_via_stirling(n);
            for (long nu = 1; nu <= n + 1; ++nu) {
                auto [even, odd] = even_odd_split(n, nu);
                if (even + odd != full.prob(nu)) return false;
                Rat even_closed(0);
                Rat odd_closed(0);
                for (long l = nu; l <= 2 * n; ++l) {
                    Int s = stirling_cycle(l, nu);
                    if (s == 0) continue;
                    Rat base = make_rat(s, factorial(l));
                    if ((l + n - 1) % 2 != 0) base = -base;
                    even_closed += base * pow2(l - 2) * Rat(binomial(n - 1, l - 2));
                    odd_closed += base * (pow2(l - 2) * Rat(binomial(n - 1, l - 2)) +
                                          pow2(l - 1) * Rat(binomial(n - 1, l - 1)));
                }
                if (even != even_closed || odd != odd_closed) return false;
            }
        }
        return true;
    });

    // 1 + 2 sum_n x^(n+1) E[y^(X_n)] reproduces ((1+x)/(1-x))^y.
    run_check(out, suite, "hz_endgame_identity", "n<=10", [] {
        const int order = 10;
        BivariateSeries series = hz_series(order);
        std::vector<std::vector<Rat>> lhs(static_cast<size_t>(order) + 2);
        for (int i = 0; i <= order + 1; ++i)
            lhs[static_cast<size_t>(i)].assign(static_cast<size_t>(i) + 1, Rat(0));
        lhs[0][0] = 1;
        lhs[1][1] = 2;  // the n = 0 term: X_0 = 1 with probability one
        for (int n = 1; n <= order; ++n) {
            GenusDistribution d = dist_via_stirling(n);
            for (long nu = 1; nu <= n + 1; ++nu)
                lhs[static_cast<size_t>(n + 1)][static_cast<size_t>(nu)] = Rat(2) * d.prob(nu);
        }
        for (int i = 0; i <= order + 1; ++i)
            for (int j = 0; j <= i; ++j)
                if (lhs[static_cast<size_t>(i)][static_cast<size_t>(j)] != series.coeff(i, j))
                    return false;
        return true;
    });

    // The census distribution does not depend on which full cycle glues.
    run_check(out, suite, "census_beta_invariance", "n<=4", [] {
        for (int n = 1; n <= 4; ++n) {
            int N = 2 * n;
            GluingCensus base = enumerate_census(n);
            // Relabeling conjugates the gluing cycle, so every full cycle
            // yields exactly the canonical census.
            long long cycles_seen = 0;
            std::vector<int> word(static_cast<size_t>(N));
            std::iota(word.begin(), word.end(), 0);
            do {
                Permutation p(word);
                if (cycle_type(p) != CycleType::single_cycle(N)) continue;
                ++cycles_seen;
                if (enumerate_census_with_beta(n, p).counts != base.counts) return false;
            } while (std::next_permutation(word.begin(), word.end()));
            if (Int(static_cast<long>(cycles_seen)) != factorial(N - 1)) return false;
        }
        return true;
    });

    return out;
}

}  // namespace genusforge
