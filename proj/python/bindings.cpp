#include "genusforge/characters.hpp"
#include "genusforge/distribution.hpp"
#include "genusforge/fourier.hpp"
#include "genusforge/montecarlo.hpp"
#include "genusforge/numbers.hpp"
#include "genusforge/oracle.hpp"
#include "genusforge/partition.hpp"
#include "genusforge/permutation.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

namespace py = pybind11;
namespace gf = genusforge;

namespace {

py::object to_py_int(const gf::Int& v) {
    return py::module_::import("builtins").attr("int")(v.get_str());
}

py::object to_py_fraction(const gf::Rat& r) {
    py::object fraction = py::module_::import("fractions").attr("Fraction");
    return fraction(to_py_int(r.get_num()), to_py_int(r.get_den()));
}

gf::CycleType type_from_parts(const std::vector<int>& parts) {
    int n = 0;
    for (int p : parts) n += p;
    return gf::CycleType::from_parts(n, parts);
}

py::dict distribution_to_dict(const gf::GenusDistribution& d) {
    py::dict out;
    for (long nu : d.support()) out[py::int_(nu)] = to_py_fraction(d.prob(nu));
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact genus distribution of random polygon gluings";
    m.attr("__version__") = "0.1.0";

    m.def("factorial", [](long n) { return to_py_int(gf::factorial(n)); }, py::arg("n"));
    m.def("double_factorial", [](long k) { return to_py_int(gf::double_factorial(k)); },
          py::arg("k"));
    m.def("binomial", [](long a, long b) { return to_py_int(gf::binomial(a, b)); },
          py::arg("a"), py::arg("b"));
    m.def("stirling_cycle", [](long l, long v) { return to_py_int(gf::stirling_cycle(l, v)); },
          py::arg("l"), py::arg("v"));
    m.def("catalan", [](long n) { return to_py_int(gf::catalan(n)); }, py::arg("n"));

    m.def("partitions_of", [](int n) {
        std::vector<std::vector<int>> out;
        for (const gf::Partition& p : gf::partitions_of(n)) out.push_back(p.parts());
        return out;
    }, py::arg("n"));
    m.def("dimension", [](const std::vector<int>& parts) {
        return to_py_int(gf::dimension(gf::Partition(parts)));
    }, py::arg("shape"));

    m.def("mn_character", [](const std::vector<int>& shape, const std::vector<int>& type) {
        return to_py_int(gf::mn_character(gf::Partition(shape), type_from_parts(type)));
    }, py::arg("shape"), py::arg("cycle_type"));
    m.def("chi_hook_on_ncycle", [](int n, int arm) {
        return to_py_int(gf::chi_hook_on_ncycle(gf::HookShape(n, arm)));
    }, py::arg("n"), py::arg("arm"));
    m.def("chi_hook_on_involution", [](int n, int arm) {
        return to_py_int(gf::chi_hook_on_involution(gf::HookShape(n, arm)));
    }, py::arg("n"), py::arg("arm"));
    m.def("chi_hook_general", [](int n, int arm, const std::vector<int>& type) {
        return to_py_int(gf::chi_hook_general(gf::HookShape(n, arm), type_from_parts(type)));
    }, py::arg("n"), py::arg("arm"), py::arg("cycle_type"));
    m.def("f_weight", [](int n_points, int arm) {
        return to_py_fraction(gf::f_weight(n_points, arm));
    }, py::arg("n_points"), py::arg("arm"));

    m.def("class_size", [](const std::vector<int>& type) {
        return to_py_int(gf::class_size(type_from_parts(type)));
    }, py::arg("cycle_type"));

    m.def("product_law_pointmass",
          [](const std::vector<std::vector<int>>& classes, const std::vector<int>& target,
             int n_limit) {
              std::vector<gf::CycleType> cls;
              for (const auto& c : classes) cls.push_back(type_from_parts(c));
              return to_py_fraction(gf::product_law_pointmass(gf::ClassProductLaw(cls),
                                                              type_from_parts(target), n_limit));
          },
          py::arg("classes"), py::arg("target"), py::arg("n_limit") = 10);
    m.def("hook_only_law", [](const std::vector<int>& target) {
        return to_py_fraction(gf::hook_only_law(type_from_parts(target)));
    }, py::arg("target"));
    m.def("frobenius_count",
          [](const std::vector<std::vector<int>>& classes, int n_limit) {
              std::vector<gf::CycleType> cls;
              for (const auto& c : classes) cls.push_back(type_from_parts(c));
              return to_py_int(gf::frobenius_count(gf::ClassProductLaw(cls), n_limit));
          },
          py::arg("classes"), py::arg("n_limit") = 10);
    m.def("bruteforce_law",
          [](const std::vector<std::vector<int>>& classes, long long budget) {
              std::vector<gf::CycleType> cls;
              for (const auto& c : classes) cls.push_back(type_from_parts(c));
              py::dict out;
              for (const auto& [t, mass] : gf::bruteforce_law(gf::ClassProductLaw(cls), budget)) {
                  py::tuple key = py::cast(t.parts());
                  out[key] = to_py_fraction(mass);
              }
              return out;
          },
          py::arg("classes"), py::arg("budget") = 10000000LL);

    m.def("genus_distribution",
          [](int n, const std::string& method, int oracle_limit) {
              if (method == "theorem") return distribution_to_dict(gf::dist_via_theorem(n));
              if (method == "stirling") return distribution_to_dict(gf::dist_via_stirling(n));
              if (method == "hz") return distribution_to_dict(gf::dist_via_hz(n));
              if (method == "oracle")
                  return distribution_to_dict(
                      gf::enumerate_census(n, oracle_limit).to_distribution());
              throw std::domain_error("genus_distribution: unknown method");
          },
          py::arg("n"), py::arg("method") = "stirling", py::arg("oracle_limit") = 8);
    m.def("epsilon_counts", [](int n) {
        py::dict out;
        for (const auto& [g, c] : gf::epsilon_counts(n)) out[py::int_(g)] = to_py_int(c);
        return out;
    }, py::arg("n"));
    m.def("enumerate_census", [](int n, int limit, int threads) {
        py::dict out;
        for (const auto& [nu, c] : gf::enumerate_census(n, limit, threads).counts)
            out[py::int_(nu)] = to_py_int(c);
        return out;
    }, py::arg("n"), py::arg("limit") = 8, py::arg("threads") = 1);

    m.def("run_mc",
          [](int n, long long samples, uint64_t seed, int threads, const std::string& beta) {
              gf::BetaMode mode = beta == "random" ? gf::BetaMode::random_unicyclic
                                                   : gf::BetaMode::canonical;
              gf::McReport rep = gf::run_mc(n, samples, seed, threads, mode);
              py::dict out;
              out["n"] = rep.n;
              out["samples"] = rep.samples;
              out["seed"] = rep.seed;
              out["beta"] = beta;
              py::dict freq;
              for (const auto& [nu, c] : rep.frequencies) freq[py::int_(nu)] = c;
              out["frequencies"] = freq;
              out["tv"] = to_py_fraction(rep.tv);
              out["chi_square"] = to_py_fraction(rep.chi_square);
              out["chi_square_p_value"] = rep.chi_square_p_value;
              out["mean"] = to_py_fraction(rep.empirical_mean);
              out["expected_mean"] = to_py_fraction(rep.expected_mean);
              out["mean_within_band"] = rep.mean_within_band;
              return out;
          },
          py::arg("n"), py::arg("samples") = 100000, py::arg("seed") = 0,
          py::arg("threads") = 1, py::arg("beta") = "canonical");

    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const std::domain_error& e) {
            PyErr_SetString(PyExc_ValueError, e.what());
        } catch (const std::logic_error& e) {
            PyErr_SetString(PyExc_RuntimeError, e.what());
        }
    });
}
