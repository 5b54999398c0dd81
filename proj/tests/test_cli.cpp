#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

// End-to-end tests against the built binary; GENUS_FORGE_BIN is injected by
// the build. Golden outputs are frozen byte-for-byte.

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;  // stdout only
};

RunResult run_cli(const std::string& args, const std::string& env = "") {
    std::string cmd = env + " " + std::string(GENUS_FORGE_BIN) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    std::array<char, 4096> buf;
    size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.output.append(buf.data(), got);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

}  // namespace

TEST_CASE("genus-table oracle golden csv") {
    RunResult r = run_cli("genus-table --n-max 2 --method oracle");
    CHECK(r.exit_code == 0);
    CHECK(r.output ==
          "method,n,g,epsilon\n"
          "oracle,1,0,1\n"
          "oracle,2,0,2\n"
          "oracle,2,1,1\n");
}

TEST_CASE("genus-table all methods agree") {
    RunResult r = run_cli("genus-table --n-max 3 --method all");
    CHECK(r.exit_code == 0);
    // 4 methods x (1 + 2 + 2) genus rows, all flagged agree=yes.
    std::string expected_header = "method,n,g,epsilon,agree\n";
    CHECK(r.output.substr(0, expected_header.size()) == expected_header);
    size_t rows = 0;
    for (char c : r.output)
        if (c == '\n') ++rows;
    CHECK(rows == 1 + 4 * 5);
    CHECK(r.output.find(",no") == std::string::npos);
    CHECK(r.output.find("theorem,1,0,1,yes\n") != std::string::npos);
    CHECK(r.output.find("hz,3,1,10,yes\n") != std::string::npos);
    CHECK(r.output.find("oracle,3,0,5,yes\n") != std::string::npos);
}

TEST_CASE("dist golden csv with decimals") {
    RunResult r = run_cli("dist --n-max 2 --method stirling --decimal 4");
    CHECK(r.exit_code == 0);
    CHECK(r.output ==
          "method,n,nu,probability_num,probability_den,probability_decimal\n"
          "stirling,1,2,1,1,1.0000\n"
          "stirling,2,1,1,3,0.3333\n"
          "stirling,2,3,2,3,0.6667\n");
}

TEST_CASE("dist json matches csv data") {
    RunResult csv = run_cli("dist --n-max 3 --method hz");
    RunResult js = run_cli("dist --n-max 3 --method hz --format json");
    CHECK(csv.exit_code == 0);
    CHECK(js.exit_code == 0);
    nlohmann::json doc = nlohmann::json::parse(js.output);
    CHECK(doc["schema"] == "genus-forge/1");
    // Rebuild the CSV from the JSON rows and compare byte for byte.
    std::string rebuilt = "method,n,nu,probability_num,probability_den\n";
    for (const auto& row : doc["rows"]) {
        rebuilt += row["method"].get<std::string>() + "," + row["n"].get<std::string>() + "," +
                   row["nu"].get<std::string>() + "," +
                   row["probability_num"].get<std::string>() + "," +
                   row["probability_den"].get<std::string>() + "\n";
    }
    CHECK(rebuilt == csv.output);
    // Probabilities are exact integer strings, never floats.
    for (const auto& row : doc["rows"]) {
        CHECK(row["probability_num"].is_string());
        CHECK(row["probability_den"].is_string());
    }
}

TEST_CASE("verify identities golden csv") {
    RunResult r = run_cli("verify --suite identities");
    CHECK(r.exit_code == 0);
    CHECK(r.output ==
          "suite,check_name,params,status\n"
          "identities,gould_even_sum,a<=12,pass\n"
          "identities,gould_odd_sum,a<=12,pass\n"
          "identities,stirling_row_sum,l<=10,pass\n"
          "identities,stirling_log_series,truncation=10,pass\n"
          "identities,f_weight_q_identity,N<=20,pass\n");
}

TEST_CASE("verify all suites pass") {
    RunResult r = run_cli("verify --n-max 5 --N-max 6");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find(",fail") == std::string::npos);
    // Every suite contributes rows.
    for (const char* name : {"identities,", "characters,", "fourier,", "distributions,"})
        CHECK(r.output.find(name) != std::string::npos);
}

TEST_CASE("mc golden summary for the deterministic case") {
    RunResult r = run_cli("mc --n 1 --samples 64 --seed 5");
    CHECK(r.exit_code == 0);
    CHECK(r.output ==
          "kind,n,samples,seed,beta,nu,count,tv,tv_decimal,chi_square,chi_square_p_value,"
          "mean,expected_mean,mean_within_band\n"
          "freq,1,64,5,canonical,2,64,,,,,,,\n"
          "summary,1,64,5,canonical,,,0/1,0.000000,0/1,1.000000,2/1,2/1,yes\n");
}

TEST_CASE("mc is deterministic across runs and thread counts") {
    RunResult a = run_cli("mc --n 4 --samples 2000 --seed 17 --threads 1");
    RunResult b = run_cli("mc --n 4 --samples 2000 --seed 17 --threads 4");
    CHECK(a.exit_code == 0);
    CHECK(a.output == b.output);
    RunResult c = run_cli("mc --n 4 --samples 2000 --seed 18");
    CHECK(c.output != a.output);
}

TEST_CASE("genus-table json round trip") {
    RunResult js = run_cli("genus-table --n-max 4 --method theorem --format json");
    CHECK(js.exit_code == 0);
    nlohmann::json doc = nlohmann::json::parse(js.output);
    CHECK(doc["schema"] == "genus-forge/1");
    CHECK(doc["rows"].size() == 1 + 2 + 2 + 3);
    for (const auto& row : doc["rows"]) CHECK(row["method"] == "theorem");
    CHECK(doc["rows"][0]["epsilon"] == "1");
}

TEST_CASE("usage errors exit 2") {
    CHECK(run_cli("genus-table --n-max 0").exit_code == 2);
    CHECK(run_cli("genus-table").exit_code == 2);
    CHECK(run_cli("mc").exit_code == 2);
    CHECK(run_cli("dist --n-max 3 --method bogus").exit_code == 2);
    CHECK(run_cli("bogus-subcommand").exit_code == 2);
    CHECK(run_cli("").exit_code == 2);
    CHECK(run_cli("dist --n-max 9 --method oracle").exit_code == 2);
    CHECK(run_cli("dist --n-max 4 --method oracle --oracle-limit 3").exit_code == 2);
}

TEST_CASE("oracle limit environment variable") {
    RunResult ok = run_cli("dist --n-max 2 --method oracle", "GENUS_FORGE_ORACLE_LIMIT=2");
    CHECK(ok.exit_code == 0);
    RunResult beyond = run_cli("dist --n-max 3 --method oracle", "GENUS_FORGE_ORACLE_LIMIT=2");
    CHECK(beyond.exit_code == 2);
    RunResult flag_override =
        run_cli("dist --n-max 3 --method oracle --oracle-limit 3", "GENUS_FORGE_ORACLE_LIMIT=2");
    CHECK(flag_override.exit_code == 0);
    RunResult bad = run_cli("dist --n-max 2 --method oracle", "GENUS_FORGE_ORACLE_LIMIT=zero");
    CHECK(bad.exit_code == 2);
}

TEST_CASE("help exits 0") {
    CHECK(run_cli("--help").exit_code == 0);
    CHECK(run_cli("dist --help").exit_code == 0);
}

TEST_CASE("method all skips oracle rows beyond the limit") {
    RunResult r = run_cli("genus-table --n-max 3 --method all --oracle-limit 2");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("oracle,2,") != std::string::npos);
    CHECK(r.output.find("oracle,3,") == std::string::npos);
    CHECK(r.output.find("theorem,3,") != std::string::npos);
}

TEST_CASE("table output is deterministic across threads") {
    RunResult a = run_cli("dist --n-max 6 --method all --threads 1");
    RunResult b = run_cli("dist --n-max 6 --method all --threads 4");
    CHECK(a.exit_code == 0);
    CHECK(b.exit_code == 0);
    CHECK(a.output == b.output);
}
