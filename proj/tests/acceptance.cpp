// Acceptance suite: one line per criterion, pass/fail plus elapsed seconds.
// Exit code 0 only if every criterion passes.

#include "genusforge/characters.hpp"
#include "genusforge/distribution.hpp"
#include "genusforge/fourier.hpp"
#include "genusforge/montecarlo.hpp"
#include "genusforge/numbers.hpp"
#include "genusforge/oracle.hpp"
#include "genusforge/poly.hpp"
#include "genusforge/rng.hpp"
#include "genusforge/series.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

using namespace genusforge;

namespace {

bool g_all_pass = true;

void criterion(const std::string& name, double budget_seconds,
               const std::function<bool()>& body) {
    auto start = std::chrono::steady_clock::now();
    bool pass = false;
    std::string note;
    try {
        pass = body();
    } catch (const std::exception& e) {
        note = std::string(" (") + e.what() + ")";
    }
    double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (budget_seconds > 0 && elapsed > budget_seconds) {
        pass = false;
        note += " (over time budget)";
    }
    if (!pass) g_all_pass = false;
    std::printf("%-34s %s  %.2fs%s\n", name.c_str(), pass ? "pass" : "FAIL", elapsed,
                note.c_str());
    std::fflush(stdout);
}

}  // namespace

int main() {
    criterion("four_route_agreement", 60.0, [] {
        for (int n = 1; n <= 7; ++n) {
            GenusDistribution theorem = dist_via_theorem(n);
            GenusDistribution stirling = dist_via_stirling(n);
            GenusDistribution hz = dist_via_hz(n);
            GenusDistribution census = enumerate_census(n, 8, 4).to_distribution();
            if (!(theorem == stirling && stirling == hz && hz == census)) return false;
        }
        return true;
    });

    criterion("series_identity_through_x11", 0.0, [] {
        const int order = 10;
        BivariateSeries s = hz_series(order);
        for (int i = 0; i <= order + 1; ++i) {
            for (int j = 0; j <= i; ++j) {
                Rat lhs(0);
                if (i == 0 && j == 0) lhs = 1;
                if (i == 1) lhs = (j == 1) ? Rat(2) : Rat(0);
                if (i >= 2) lhs = Rat(2) * dist_via_stirling(i - 1).prob(j);
                if (lhs != s.coeff(i, j)) return false;
            }
        }
        return true;
    });

    criterion("character_engine", 30.0, [] {
        for (int N = 1; N <= 10; ++N) {
            Int total = 0;
            for (const Partition& shape : partitions_of(N)) {
                Int d = dimension(shape);
                total += d * d;
            }
            if (total != factorial(N)) return false;
        }
        for (int N = 1; N <= 8; ++N) {
            CycleType full = CycleType::single_cycle(N);
            for (const Partition& shape : partitions_of(N)) {
                if (mn_character(shape, CycleType::identity(N)) != dimension(shape))
                    return false;
                Int chi = mn_character(shape, full);
                if (shape.is_hook()) {
                    if (chi != chi_hook_on_ncycle(HookShape(N, shape.part(0)))) return false;
                } else if (chi != 0) {
                    return false;
                }
            }
        }
        for (int N = 1; N <= 10; ++N) {
            for (const Partition& tw : partitions_of(N)) {
                CycleType t = CycleType::from_parts(N, tw.parts());
                for (int arm = 1; arm <= N; ++arm) {
                    HookShape h(N, arm);
                    Int reference = mn_character(h.to_partition(), t);
                    if (chi_hook_general(h, t) != reference) return false;
                    if (t == CycleType::single_cycle(N) && chi_hook_on_ncycle(h) != reference)
                        return false;
                    if (N % 2 == 0 && t == CycleType::fixed_point_free(N) &&
                        chi_hook_on_involution(h) != reference)
                        return false;
                }
            }
        }
        return true;
    });

    criterion("convolution_vs_bruteforce", 0.0, [] {
        for (int N = 2; N <= 5; ++N) {
            std::vector<CycleType> classes;
            for (const Partition& p : partitions_of(N))
                classes.push_back(CycleType::from_parts(N, p.parts()));
            std::vector<std::vector<CycleType>> laws;
            for (const CycleType& c : classes) laws.push_back({c});
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
                for (const Partition& p : partitions_of(N)) {
                    CycleType t = CycleType::from_parts(N, p.parts());
                    Rat mass = Rat(class_size(t)) * product_law_pointmass(law, t);
                    auto it = brute.find(t);
                    Rat expect = (it == brute.end()) ? Rat(0) : it->second;
                    if (mass != expect) return false;
                }
                auto it = brute.find(CycleType::identity(N));
                Rat id_mass = (it == brute.end()) ? Rat(0) : it->second;
                if (Rat(frobenius_count(law)) != id_mass * Rat(tuples)) return false;
            }
        }
        // The gluing law specifically, against enumeration, on larger sizes.
        for (int N = 2; N <= 6; N += 2) {
            ClassProductLaw law({CycleType::fixed_point_free(N), CycleType::single_cycle(N)});
            std::map<CycleType, Rat> brute = bruteforce_law(law);
            for (const Partition& p : partitions_of(N)) {
                CycleType t = CycleType::from_parts(N, p.parts());
                Rat mass = Rat(class_size(t)) * hook_only_law(t);
                auto it = brute.find(t);
                Rat expect = (it == brute.end()) ? Rat(0) : it->second;
                if (mass != expect) return false;
            }
        }
        // Random laws: frobenius_count itself throws if not a nonnegative
        // integer.
        RngState rng(20260815);
        for (int trial = 0; trial < 50; ++trial) {
            int N = 2 + static_cast<int>(rng.below(7));
            std::vector<Partition> shapes = partitions_of(N);
            int k = 1 + static_cast<int>(rng.below(3));
            std::vector<CycleType> cls;
            for (int j = 0; j < k; ++j)
                cls.push_back(CycleType::from_parts(
                    N, shapes[static_cast<size_t>(rng.below(shapes.size()))].parts()));
            (void)frobenius_count(ClassProductLaw(cls));
        }
        return true;
    });

    criterion("genus_count_consequences", 0.0, [] {
        for (int n = 1; n <= 12; ++n)
            if (epsilon_counts(n).at(0) != catalan(n)) return false;
        for (int n = 1; n <= 20; ++n) {
            std::map<long, Int> eps = epsilon_counts(n);
            Int total = 0;
            for (const auto& [g, c] : eps) total += c;
            if (total != double_factorial(2L * n - 1)) return false;
            GenusDistribution d = dist_via_stirling(n);
            for (long nu = 1; nu <= n + 1; ++nu)
                if ((nu - (n + 1)) % 2 != 0 && d.prob(nu) != 0) return false;
        }
        return true;
    });

    criterion("support_identities", 0.0, [] {
        for (long a = 0; a <= 12; ++a) {
            for (long b = 0; b <= 2 * a + 1; ++b) {
                Rat even(0);
                Rat odd(0);
                for (long j = 0; j <= a; ++j) {
                    Rat e(binomial(a, j) * binomial(2 * j, b));
                    Rat o(binomial(a, j) * binomial(2 * j + 1, b));
                    if (j % 2 == 0) {
                        even += e;
                        odd += o;
                    } else {
                        even -= e;
                        odd -= o;
                    }
                }
                Rat even_rhs = Rat(binomial(a, b - a)) * pow2(2 * a - b);
                Rat odd_rhs = Rat(binomial(a, b - a)) * pow2(2 * a - b) +
                              Rat(binomial(a, b - a - 1)) * pow2(2 * a + 1 - b);
                if (a % 2 == 1) {
                    even_rhs = -even_rhs;
                    odd_rhs = -odd_rhs;
                }
                if (even != even_rhs || odd != odd_rhs) return false;
            }
        }
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

    criterion("mc_matches_law", 10.0, [] {
        McReport rep = run_mc(15, 200000, 7, 4);
        if (!(rep.tv < make_rat(2L, 100L))) return false;
        if (!rep.mean_within_band) return false;
        McReport serial = run_mc(15, 200000, 7, 1);
        return serial == rep;
    });

    std::printf("acceptance: %s\n", g_all_pass ? "all criteria pass" : "FAILURES");
    return g_all_pass ? 0 : 1;
}
