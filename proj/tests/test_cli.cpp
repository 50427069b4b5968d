#include <sys/wait.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "homrates/cli.hpp"
#include "homrates/errors.hpp"

using namespace homrates;

TEST_CASE("value specs: single values and comma lists") {
    CHECK(parse_value_spec("1.5", "t") == std::vector<double>{1.5});
    CHECK(parse_value_spec("1,2,3", "t") == std::vector<double>{1.0, 2.0, 3.0});
    CHECK(parse_value_spec("0.5,0.25", "t") == std::vector<double>{0.5, 0.25});
}

TEST_CASE("value specs: inclusive ranges land exactly on both ends") {
    const auto r = parse_value_spec("0:1:0.25", "t");
    REQUIRE(r.size() == 5);
    CHECK(r.front() == 0.0);
    CHECK(r.back() == 1.0);

    const auto grid = parse_value_spec("0.1:2.0:0.1", "t");
    REQUIRE(grid.size() == 20);
    CHECK(grid.front() == 0.1);
    CHECK(grid.back() == 2.0);  // snapped, not 1.9999999999999998

    const auto single = parse_value_spec("3:3:1", "t");
    REQUIRE(single.size() == 1);
    CHECK(single[0] == 3.0);
}

TEST_CASE("value specs: malformed input is rejected with the option name") {
    for (const char* bad : {"", "abc", "1:0:1", "1:2:0", "1:2:-1", "1:2:3:4", "1.5x", "1,,2"}) {
        CHECK_THROWS_AS((void)parse_value_spec(bad, "--gamma"), InvalidArgumentError);
    }
    try {
        (void)parse_value_spec("zz", "--gamma");
    } catch (const InvalidArgumentError& e) {
        CHECK(std::string(e.what()).find("--gamma") != std::string::npos);
    }
    CHECK_THROWS_AS((void)parse_value_spec("0:1e9:1e-3", "t"), InvalidArgumentError);
}

// ---- integration through the real binary ------------------------------------

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

std::string slurp(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

RunResult run_tool(const std::string& args) {
    static int counter = 0;
    const std::string tag = std::to_string(counter++);
    const std::string out_file = "cli_test_stdout_" + tag + ".txt";
    const std::string err_file = "cli_test_stderr_" + tag + ".txt";
    const std::string cmd =
        std::string(HOMRATES_BIN_PATH) + " " + args + " > " + out_file + " 2> " + err_file;
    const int raw = std::system(cmd.c_str());
    RunResult r;
    r.exit_code = (raw >= 0 && WIFEXITED(raw)) ? WEXITSTATUS(raw) : -1;
    r.out = slurp(out_file);
    r.err = slurp(err_file);
    std::remove(out_file.c_str());
    std::remove(err_file.c_str());
    return r;
}

std::vector<std::string> data_rows(const std::string& csv) {
    std::vector<std::string> rows;
    std::istringstream ss(csv);
    std::string line;
    bool header_seen = false;
    while (std::getline(ss, line)) {
        if (line.empty() || line[0] == '#') continue;
        if (!header_seen) {
            header_seen = true;
            continue;
        }
        rows.push_back(line);
    }
    return rows;
}

std::vector<std::string> fields(const std::string& row) {
    std::vector<std::string> out;
    std::istringstream ss(row);
    std::string cell;
    while (std::getline(ss, cell, ',')) out.push_back(cell);
    return out;
}

}  // namespace

TEST_CASE("default visibility sweep: 20 gains, both methods, stable byte-for-byte") {
    const auto a = run_tool("visibility");
    CHECK(a.exit_code == 0);
    CHECK(a.out.find("gamma,G_alpha0,G_alphapi2,C_alpha0,C_alphapi2,V_G,V_C,method,status") !=
          std::string::npos);
    CHECK(data_rows(a.out).size() == 40);

    const auto b = run_tool("visibility");
    CHECK(a.out == b.out);  // reruns are byte-identical
}

TEST_CASE("gamma = 0 rows disclose their status instead of printing zeros as physics") {
    const auto r = run_tool("visibility --gamma 0 --method both");
    CHECK(r.exit_code == 0);
    const auto rows = data_rows(r.out);
    REQUIRE(rows.size() == 2);
    CHECK(fields(rows[0]).back() == "undefined");
    CHECK(fields(rows[1]).back() == "limit");
}

TEST_CASE("lossy eta = 1 rows coincide with the visibility fock rows") {
    const auto lossy = run_tool("lossy --gamma 0.5 --eta 1");
    const auto vis = run_tool("visibility --gamma 0.5 --method fock");
    REQUIRE(lossy.exit_code == 0);
    REQUIRE(vis.exit_code == 0);
    const auto lrow = fields(data_rows(lossy.out).at(0));   // gamma,eta,V_G_eta,V_C_eta,status
    const auto vrow = fields(data_rows(vis.out).at(0));     // gamma,...,V_G,V_C,method,status
    CHECK(lrow.at(2) == vrow.at(5));
    CHECK(lrow.at(3) == vrow.at(6));
}

TEST_CASE("dip endpoints match the analytic forms") {
    const auto r = run_tool("dip --gamma 1.0 --alpha 0,90");
    REQUIRE(r.exit_code == 0);
    const auto rows = data_rows(r.out);
    REQUIRE(rows.size() == 2);
    const double g0 = std::stod(fields(rows[0]).at(2));
    const double gpi2 = std::stod(fields(rows[1]).at(2));
    const double c0 = std::stod(fields(rows[0]).at(3));
    const double cpi2 = std::stod(fields(rows[1]).at(3));
    CHECK(std::fabs(g0 - 0.091774721395740038) / 0.091774721395740038 < 1e-8);
    CHECK(std::fabs(gpi2 - 0.21677472139574004) / 0.21677472139574004 < 1e-8);
    CHECK(std::fabs(c0 - 0.026959002626523043) / 0.026959002626523043 < 1e-8);
    CHECK(std::fabs(cpi2 - 0.099462209924769784) / 0.099462209924769784 < 1e-8);
}

TEST_CASE("classical command emits one row per law with the bound verdict") {
    const auto r = run_tool("classical --runs 50000 --seed 7");
    REQUIRE(r.exit_code == 0);
    const auto rows = data_rows(r.out);
    REQUIRE(rows.size() == 2);
    CHECK(fields(rows[0]).at(0) == "fixed-equal");
    CHECK(fields(rows[1]).at(0) == "independent-exponential");
    CHECK(fields(rows[0]).back() == "pass");
    CHECK(fields(rows[1]).back() == "pass");
}

TEST_CASE("validate passes clean and fails loud when the convention is broken") {
    const auto good = run_tool("validate --runs 50000 --gamma 0.5,1.0");
    CHECK(good.exit_code == 0);
    CHECK(good.out.find("overall: pass") != std::string::npos);

    const auto bad = run_tool("validate --runs 50000 --gamma 0.5 --perturb-convention");
    CHECK(bad.exit_code == 1);
    CHECK(bad.out.find("[FAIL]") != std::string::npos);
    CHECK(bad.out.find("overall: FAIL") != std::string::npos);
}

TEST_CASE("exit codes: bad arguments are 2, unwritable output is 3") {
    CHECK(run_tool("visibility --gamma -1").exit_code == 2);
    CHECK(run_tool("visibility --gamma 1:0:1").exit_code == 2);
    CHECK(run_tool("nonsense-command").exit_code == 2);
    CHECK(run_tool("visibility --no-such-flag").exit_code == 2);
    CHECK(run_tool("lossy --eta 0").exit_code == 2);
    CHECK(run_tool("lossy --eta 1.5").exit_code == 2);
    CHECK(run_tool("dip --alpha 91").exit_code == 2);
    CHECK(run_tool("classical --format svg").exit_code == 2);
    CHECK(run_tool("visibility --nmax -3").exit_code == 2);
    CHECK(run_tool("visibility --out /nonexistent_dir/out.csv").exit_code == 3);
}

TEST_CASE("a sweep past the truncation cap still runs but discloses the clamp") {
    const auto r = run_tool("visibility --gamma 5 --method fock");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("(clamped)") != std::string::npos);
}

TEST_CASE("--out writes the same bytes that stdout would carry") {
    const std::string path = "cli_test_outfile.csv";
    const auto direct = run_tool("visibility --gamma 0.5");
    const auto filed = run_tool("visibility --gamma 0.5 --out " + path);
    CHECK(filed.exit_code == 0);
    CHECK(filed.out.empty());
    CHECK(slurp(path) == direct.out);
    std::remove(path.c_str());
}

TEST_CASE("svg output is an svg document") {
    const auto r = run_tool("visibility --gamma 0.2,0.4 --format svg");
    CHECK(r.exit_code == 0);
    CHECK(r.out.rfind("<svg", 0) == 0);
    CHECK(r.out.find("</svg>") != std::string::npos);
    const auto d = run_tool("dip --format svg");
    CHECK(d.exit_code == 0);
    CHECK(d.out.rfind("<svg", 0) == 0);
}

TEST_CASE("config file supplies defaults and the command line overrides it") {
    const std::string cfg = "cli_test_config.ini";
    {
        std::ofstream f(cfg);
        f << "[visibility]\n"
          << "gamma=0.5\n"
          << "method=closed\n";
    }
    const auto from_cfg = run_tool("--config " + cfg + " visibility");
    CHECK(from_cfg.exit_code == 0);
    auto rows = data_rows(from_cfg.out);
    REQUIRE(rows.size() == 1);
    CHECK(fields(rows[0]).at(0) == "0.5");
    CHECK(fields(rows[0]).at(7) == "closed");

    const auto overridden = run_tool("--config " + cfg + " visibility --gamma 1.0");
    CHECK(overridden.exit_code == 0);
    rows = data_rows(overridden.out);
    REQUIRE(rows.size() == 1);
    CHECK(fields(rows[0]).at(0) == "1");
    CHECK(fields(rows[0]).at(7) == "closed");  // untouched config value still applies
    std::remove(cfg.c_str());
}

TEST_CASE("metadata preamble names the tool, the command, and the truncation") {
    const auto r = run_tool("visibility --gamma 0.5");
    CHECK(r.out.find("# homrates 1.0.0") == 0);
    CHECK(r.out.find("# command: visibility") != std::string::npos);
    CHECK(r.out.find("# truncation used:") != std::string::npos);
    const auto c = run_tool("classical --runs 1000");
    CHECK(c.out.find("# truncation used: none (stochastic model)") != std::string::npos);
}
