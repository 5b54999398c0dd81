// genus-forge: exact distribution of the vertex count (equivalently, genus)
// of the random surface obtained by gluing the sides of a 2n-gon in pairs.
//
// Subcommands:
//   genus-table  counts of gluings by genus, per n
//   dist         exact probabilities P(X_n = nu)
//   verify       internal cross-validation suites
//   mc           Monte Carlo sampler with exact diagnostics

#include "genusforge/distribution.hpp"
#include "genusforge/montecarlo.hpp"
#include "genusforge/oracle.hpp"
#include "genusforge/records.hpp"
#include "genusforge/verify.hpp"

#include <CLI11.hpp>

#include <atomic>
#include <cstdlib>
#include <iostream>
#include <mutex>
#include <optional>
#include <thread>

namespace gf = genusforge;

namespace {

const std::vector<std::string> kMethods = {"theorem", "stirling", "hz", "oracle"};

int env_oracle_limit() {
    const char* raw = std::getenv("GENUS_FORGE_ORACLE_LIMIT");
    if (raw == nullptr || *raw == '\0') return 8;
    try {
        int v = std::stoi(raw);
        if (v >= 1) return v;
    } catch (const std::exception&) {
    }
    throw CLI::ValidationError("GENUS_FORGE_ORACLE_LIMIT must be a positive integer");
}

gf::GenusDistribution compute_one(const std::string& method, int n, int oracle_limit,
                                  int census_threads) {
    if (method == "theorem") return gf::dist_via_theorem(n);
    if (method == "stirling") return gf::dist_via_stirling(n);
    if (method == "hz") return gf::dist_via_hz(n);
    return gf::enumerate_census(n, oracle_limit, census_threads).to_distribution();
}

struct MethodResult {
    std::string method;
    int n = 0;
    std::optional<gf::GenusDistribution> dist;
};

// Computes the requested (method, n) grid, spreading the work over a thread
// pool. Results are ordered deterministically regardless of thread count.
std::vector<MethodResult> compute_grid(const std::vector<std::string>& methods, int n_max,
                                       int oracle_limit, int threads) {
    std::vector<MethodResult> jobs;
    for (int n = 1; n <= n_max; ++n)
        for (const std::string& m : methods) {
            if (m == "oracle" && n > oracle_limit) continue;
            jobs.push_back({m, n, std::nullopt});
        }
    std::atomic<size_t> next{0};
    std::mutex err_mu;
    std::optional<std::string> error;
    auto worker = [&]() {
        for (;;) {
            size_t i = next.fetch_add(1);
            if (i >= jobs.size()) return;
            try {
                // The census has its own sharded parallelism; give it the
                // whole machine only when the outer pool is serial.
                int census_threads = threads > 1 ? 1 : threads;
                jobs[i].dist = compute_one(jobs[i].method, jobs[i].n, oracle_limit,
                                           census_threads);
            } catch (const std::exception& e) {
                std::lock_guard<std::mutex> lock(err_mu);
                if (!error) error = e.what();
                return;
            }
        }
    };
    int pool = std::min<size_t>(static_cast<size_t>(std::max(threads, 1)), jobs.size());
    if (pool <= 1) {
        worker();
    } else {
        std::vector<std::thread> ts;
        for (int i = 0; i < pool; ++i) ts.emplace_back(worker);
        for (std::thread& t : ts) t.join();
    }
    if (error) throw std::runtime_error(*error);
    return jobs;
}

void emit(const gf::OutputTable& table, const std::string& format) {
    std::cout << (format == "json" ? gf::to_json(table) : gf::to_csv(table));
}

std::vector<std::string> expand_methods(const std::string& method) {
    if (method == "all") return kMethods;
    return {method};
}

// Shared driver for genus-table and dist; `per_value` appends the rows of one
// computed distribution.
int run_table_command(const std::string& method, int n_max, int oracle_limit, int threads,
                      const std::string& format, bool genus_rows, int decimal_digits) {
    std::vector<std::string> methods = expand_methods(method);
    if (method == "oracle" && n_max > oracle_limit) {
        std::cerr << "genus-forge: --method oracle supports n only up to the oracle limit ("
                  << oracle_limit << "); got --n-max " << n_max << "\n";
        return 2;
    }
    std::vector<MethodResult> grid = compute_grid(methods, n_max, oracle_limit, threads);

    bool check_agreement = method == "all";
    bool all_agree = true;

    gf::OutputTable table;
    if (genus_rows)
        table.columns = {"method", "n", "g", "epsilon"};
    else
        table.columns = {"method", "n", "nu", "probability_num", "probability_den"};
    if (!genus_rows && decimal_digits > 0) table.columns.push_back("probability_decimal");
    if (check_agreement) table.columns.push_back("agree");

    for (int n = 1; n <= n_max; ++n) {
        // All methods computed for this n, in canonical method order.
        std::vector<const MethodResult*> present;
        for (const std::string& m : kMethods)
            for (const MethodResult& r : grid)
                if (r.n == n && r.method == m) present.push_back(&r);
        bool agree_here = true;
        for (const MethodResult* r : present)
            if (!(*r->dist == *present.front()->dist)) agree_here = false;
        if (!agree_here) all_agree = false;

        for (const MethodResult* r : present) {
            const gf::GenusDistribution& d = *r->dist;
            if (genus_rows) {
                for (const auto& [g, count] : d.epsilon_counts()) {
                    std::map<std::string, std::string> row;
                    row["method"] = r->method;
                    row["n"] = std::to_string(n);
                    row["g"] = std::to_string(g);
                    row["epsilon"] = count.get_str();
                    if (check_agreement) row["agree"] = agree_here ? "yes" : "no";
                    table.rows.push_back(std::move(row));
                }
            } else {
                for (long nu : d.support()) {
                    std::map<std::string, std::string> row;
                    row["method"] = r->method;
                    row["n"] = std::to_string(n);
                    row["nu"] = std::to_string(nu);
                    gf::Rat p = d.prob(nu);
                    row["probability_num"] = p.get_num().get_str();
                    row["probability_den"] = p.get_den().get_str();
                    if (decimal_digits > 0)
                        row["probability_decimal"] = gf::decimal_string(p, decimal_digits);
                    if (check_agreement) row["agree"] = agree_here ? "yes" : "no";
                    table.rows.push_back(std::move(row));
                }
            }
        }
    }

    emit(table, format);
    if (check_agreement && !all_agree) return 1;
    return 0;
}

int run_verify(const std::string& suite, int n_max, int N_max, uint64_t seed,
               int oracle_limit, const std::string& format) {
    std::vector<gf::CheckResult> results;
    auto extend = [&](std::vector<gf::CheckResult> v) {
        results.insert(results.end(), v.begin(), v.end());
    };
    if (suite == "identities" || suite == "all") extend(gf::verify_identities());
    if (suite == "characters" || suite == "all")
        extend(gf::verify_characters(N_max > 0 ? N_max : 10));
    if (suite == "fourier" || suite == "all")
        extend(gf::verify_fourier(N_max > 0 ? N_max : 6, seed));
    if (suite == "distributions" || suite == "all")
        extend(gf::verify_distributions(n_max, oracle_limit));

    gf::OutputTable table;
    table.columns = {"suite", "check_name", "params", "status"};
    bool all_pass = true;
    for (const gf::CheckResult& r : results) {
        if (!r.pass) all_pass = false;
        table.rows.push_back({{"suite", r.suite},
                              {"check_name", r.name},
                              {"params", r.params},
                              {"status", r.pass ? "pass" : "fail"}});
    }
    emit(table, format);
    return all_pass ? 0 : 1;
}

int run_mc_command(int n, long long samples, uint64_t seed, int threads,
                   const std::string& beta, const std::string& format) {
    gf::BetaMode mode =
        beta == "random" ? gf::BetaMode::random_unicyclic : gf::BetaMode::canonical;
    gf::McReport rep = gf::run_mc(n, samples, seed, threads, mode);

    gf::OutputTable table;
    table.columns = {"kind", "n", "samples", "seed", "beta", "nu", "count",
                     "tv", "tv_decimal", "chi_square", "chi_square_p_value",
                     "mean", "expected_mean", "mean_within_band"};
    auto base_row = [&]() {
        std::map<std::string, std::string> row;
        row["n"] = std::to_string(rep.n);
        row["samples"] = std::to_string(rep.samples);
        row["seed"] = std::to_string(rep.seed);
        row["beta"] = beta;
        return row;
    };
    for (const auto& [nu, count] : rep.frequencies) {
        auto row = base_row();
        row["kind"] = "freq";
        row["nu"] = std::to_string(nu);
        row["count"] = std::to_string(count);
        table.rows.push_back(std::move(row));
    }
    auto row = base_row();
    row["kind"] = "summary";
    row["tv"] = gf::fraction_string(rep.tv);
    row["tv_decimal"] = gf::decimal_string(rep.tv, 6);
    row["chi_square"] = gf::fraction_string(rep.chi_square);
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6f", rep.chi_square_p_value);
    row["chi_square_p_value"] = buf;
    row["mean"] = gf::fraction_string(rep.empirical_mean);
    row["expected_mean"] = gf::fraction_string(rep.expected_mean);
    row["mean_within_band"] = rep.mean_within_band ? "yes" : "no";
    table.rows.push_back(std::move(row));

    emit(table, format);
    return rep.mean_within_band ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact genus distribution of random polygon gluings"};
    app.require_subcommand(1);

    int default_limit;
    try {
        default_limit = env_oracle_limit();
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }
    const std::string format_doc = "output format";
    const std::vector<std::string> formats = {"csv", "json"};

    // genus-table
    auto* table_cmd = app.add_subcommand("genus-table", "gluing counts by genus");
    int gt_nmax = 0;
    std::string gt_method = "stirling";
    std::string gt_format = "csv";
    int gt_limit = default_limit;
    int gt_threads = 1;
    table_cmd->add_option("--n-max", gt_nmax, "largest n to tabulate")
        ->required()
        ->check(CLI::PositiveNumber);
    table_cmd->add_option("--method", gt_method, "computation route")
        ->check(CLI::IsMember({"theorem", "stirling", "hz", "oracle", "all"}));
    table_cmd->add_option("--format", gt_format, format_doc)->check(CLI::IsMember(formats));
    table_cmd->add_option("--oracle-limit", gt_limit, "largest n the census may enumerate")
        ->check(CLI::PositiveNumber);
    table_cmd->add_option("--threads", gt_threads, "worker threads")
        ->check(CLI::PositiveNumber);

    // dist
    auto* dist_cmd = app.add_subcommand("dist", "exact probabilities P(X_n = nu)");
    int d_nmax = 0;
    std::string d_method = "stirling";
    std::string d_format = "csv";
    int d_limit = default_limit;
    int d_threads = 1;
    int d_decimal = 0;
    dist_cmd->add_option("--n-max", d_nmax, "largest n to tabulate")
        ->required()
        ->check(CLI::PositiveNumber);
    dist_cmd->add_option("--method", d_method, "computation route")
        ->check(CLI::IsMember({"theorem", "stirling", "hz", "oracle", "all"}));
    dist_cmd->add_option("--format", d_format, format_doc)->check(CLI::IsMember(formats));
    dist_cmd->add_option("--oracle-limit", d_limit, "largest n the census may enumerate")
        ->check(CLI::PositiveNumber);
    dist_cmd->add_option("--threads", d_threads, "worker threads")
        ->check(CLI::PositiveNumber);
    dist_cmd->add_option("--decimal", d_decimal, "append a decimal column with this many digits")
        ->check(CLI::Range(1, 50));

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "run internal cross-checks");
    std::string v_suite = "all";
    int v_nmax = 7;
    int v_Nmax = 0;
    uint64_t v_seed = 1234;
    int v_limit = default_limit;
    std::string v_format = "csv";
    verify_cmd->add_option("--suite", v_suite, "which check suite to run")
        ->check(CLI::IsMember({"identities", "characters", "fourier", "distributions", "all"}));
    verify_cmd->add_option("--n-max", v_nmax, "largest n for distribution checks")
        ->check(CLI::PositiveNumber);
    verify_cmd->add_option("--N-max", v_Nmax, "largest group size for character/fourier sweeps")
        ->check(CLI::PositiveNumber);
    verify_cmd->add_option("--seed", v_seed, "seed for randomized checks");
    verify_cmd->add_option("--oracle-limit", v_limit, "largest n the census may enumerate")
        ->check(CLI::PositiveNumber);
    verify_cmd->add_option("--format", v_format, format_doc)->check(CLI::IsMember(formats));

    // mc
    auto* mc_cmd = app.add_subcommand("mc", "Monte Carlo gluing sampler");
    int m_n = 0;
    long long m_samples = 100000;
    uint64_t m_seed = 0;
    int m_threads = 1;
    std::string m_beta = "canonical";
    std::string m_format = "csv";
    mc_cmd->add_option("--n", m_n, "polygon half-size n")->required()->check(CLI::PositiveNumber);
    mc_cmd->add_option("--samples", m_samples, "number of gluings to sample")
        ->check(CLI::PositiveNumber);
    mc_cmd->add_option("--seed", m_seed, "random seed");
    mc_cmd->add_option("--threads", m_threads, "worker threads")->check(CLI::PositiveNumber);
    mc_cmd->add_option("--beta", m_beta, "gluing cycle: fixed rotation or fresh random cycle")
        ->check(CLI::IsMember({"canonical", "random"}));
    mc_cmd->add_option("--format", m_format, format_doc)->check(CLI::IsMember(formats));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (table_cmd->parsed())
            return run_table_command(gt_method, gt_nmax, gt_limit, gt_threads, gt_format,
                                     /*genus_rows=*/true, 0);
        if (dist_cmd->parsed())
            return run_table_command(d_method, d_nmax, d_limit, d_threads, d_format,
                                     /*genus_rows=*/false, d_decimal);
        if (verify_cmd->parsed())
            return run_verify(v_suite, v_nmax, v_Nmax, v_seed, v_limit, v_format);
        if (mc_cmd->parsed())
            return run_mc_command(m_n, m_samples, m_seed, m_threads, m_beta, m_format);
    } catch (const std::exception& e) {
        std::cerr << "genus-forge: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
