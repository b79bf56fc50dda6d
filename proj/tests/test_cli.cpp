#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace fs = std::filesystem;

namespace {

const std::string kBin = SU11_BIN_PATH;

struct RunResult {
    int exit_code = -1;
    std::string output;
};

RunResult run(const std::string& args, const std::string& env = "") {
    const fs::path out = fs::path("cli_scratch") / "cmd_output.txt";
    const std::string cmd = env + (env.empty() ? "" : " ") + kBin + " " + args + " > " +
                            out.string() + " 2>&1";
    const int rc = std::system(cmd.c_str());
    RunResult r;
    r.exit_code = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    std::ifstream in(out);
    std::stringstream ss;
    ss << in.rdbuf();
    r.output = ss.str();
    return r;
}

void write_file(const fs::path& p, const std::string& text) {
    std::ofstream out(p);
    out << text;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<std::vector<std::string>> parse_csv(const fs::path& p) {
    std::vector<std::vector<std::string>> rows;
    std::ifstream in(p);
    std::string line;
    while (std::getline(in, line)) {
        std::vector<std::string> cells;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) cells.push_back(cell);
        rows.push_back(cells);
    }
    return rows;
}

struct Scratch {
    Scratch() { fs::create_directories("cli_scratch"); }
} scratch_dir;

const char* kConstantScenario = R"({
  "nu": 5.0,
  "omega_abs": {"family": "constant", "params": [1.0]},
  "phase_rate": {"family": "constant", "params": [0.0]},
  "phi0": 0.0
})";

} // namespace

TEST_CASE("rabi-curve: deterministic output with the documented columns") {
    write_file("cli_scratch/s5.json", kConstantScenario);
    const std::string args =
        "rabi-curve --scenario cli_scratch/s5.json --t-max 12 --samples 2000 --out "
        "cli_scratch/p.csv";
    REQUIRE(run(args).exit_code == 0);
    const std::string first = slurp("cli_scratch/p.csv");

    const auto rows = parse_csv("cli_scratch/p.csv");
    REQUIRE(rows.size() == 2001);
    CHECK(rows[0] == std::vector<std::string>{"tau", "chi", "P", "regime"});
    CHECK(rows[1][3] == "trigonometric");

    // peak of the nu=5 curve is 1/26
    double peak = 0.0;
    for (std::size_t i = 1; i < rows.size(); ++i) peak = std::max(peak, std::stod(rows[i][2]));
    CHECK(peak == doctest::Approx(1.0 / 26.0).epsilon(1e-4));

    // bit-identical rerun
    REQUIRE(run(args).exit_code == 0);
    CHECK(slurp("cli_scratch/p.csv") == first);
}

TEST_CASE("rabi-curve: nu = 0 curve is monotone and saturates near one half") {
    write_file("cli_scratch/s0.json", R"({
      "nu": 0.0,
      "omega_abs": {"family": "constant", "params": [1.0]},
      "phase_rate": {"family": "constant", "params": [0.0]}
    })");
    REQUIRE(run("rabi-curve --scenario cli_scratch/s0.json --t-max 12 --samples 300 --out "
                "cli_scratch/p0.csv")
                .exit_code == 0);
    const auto rows = parse_csv("cli_scratch/p0.csv");
    double prev = -1.0;
    for (std::size_t i = 1; i < rows.size(); ++i) {
        const double p = std::stod(rows[i][2]);
        CHECK(p >= prev - 1e-15);
        prev = p;
    }
    CHECK(prev > 0.499);
    CHECK(rows[1][3] == "zero");
}

TEST_CASE("rabi-curve: non-constant coefficients are rejected naming the field") {
    write_file("cli_scratch/bad.json", R"({
      "nu": 1.0,
      "omega_abs": {"family": "sinusoid", "params": [1.0, 0.5, 1.0, 0.0]},
      "phase_rate": {"family": "constant", "params": [0.0]}
    })");
    const RunResult r = run("rabi-curve --scenario cli_scratch/bad.json --t-max 5 --samples 10 "
                            "--out cli_scratch/x.csv");
    CHECK(r.exit_code == 2);
    CHECK(r.output.find("omega_abs") != std::string::npos);
}

TEST_CASE("rabi-curve: malformed json is rejected with its path") {
    write_file("cli_scratch/broken.json", R"({"nu": 1.0})");
    const RunResult r = run("rabi-curve --scenario cli_scratch/broken.json --t-max 5 "
                            "--samples 10 --out cli_scratch/x.csv");
    CHECK(r.exit_code == 1);
    CHECK(r.output.find("omega_abs") != std::string::npos);

    const RunResult missing = run("rabi-curve --scenario cli_scratch/nope.json --t-max 5 "
                                  "--samples 10 --out cli_scratch/x.csv");
    CHECK(missing.exit_code == 1);
    CHECK(missing.output.find("nope.json") != std::string::npos);
}

TEST_CASE("sampling validation") {
    write_file("cli_scratch/s.json", kConstantScenario);
    CHECK(run("rabi-curve --scenario cli_scratch/s.json --t-max 5 --samples 1 --out "
              "cli_scratch/x.csv")
              .exit_code == 2);
    CHECK(run("rabi-curve --scenario cli_scratch/s.json --samples 10 --out cli_scratch/x.csv")
              .exit_code == 2);
}

TEST_CASE("propagator command emits unit-determinant rows") {
    write_file("cli_scratch/s12.json", R"({
      "nu": 1.2,
      "omega_abs": {"family": "constant", "params": [1.0]},
      "phase_rate": {"family": "constant", "params": [0.3]},
      "phi0": 0.1
    })");
    REQUIRE(run("propagator --scenario cli_scratch/s12.json --t-max 8 --samples 100 --out "
                "cli_scratch/u.csv")
                .exit_code == 0);
    const auto rows = parse_csv("cli_scratch/u.csv");
    REQUIRE(rows.size() == 101);
    CHECK(rows[0][0] == "t");
    for (std::size_t i = 1; i < rows.size(); i += 10)
        CHECK(std::stod(rows[i].back()) <= 1e-9);
}

TEST_CASE("guided-wave command conserves the flux column") {
    write_file("cli_scratch/g.json", R"({
      "delta": 4.0,
      "k_abs": {"family": "constant", "params": [1.0]},
      "phi_k": {"family": "polynomial", "params": [0.0, 0.0]},
      "A0": [1.0, 0.0],
      "B0": [0.2, -0.1]
    })");
    const RunResult r = run("guided-wave --problem cli_scratch/g.json --z-max 10 --samples 200 "
                            "--out cli_scratch/m.csv");
    REQUIRE(r.exit_code == 0);
    CHECK(r.output.find("closed form") != std::string::npos);
    const auto rows = parse_csv("cli_scratch/m.csv");
    REQUIRE(rows.size() == 201);
    CHECK(rows[0] ==
          std::vector<std::string>{"z", "re_A", "im_A", "re_B", "im_B", "flux_error"});
    for (std::size_t i = 1; i < rows.size(); i += 20)
        CHECK(std::abs(std::stod(rows[i][5])) <= 1e-9);
}

TEST_CASE("open-evolve command keeps unit trace and pins rho22 to the curve") {
    write_file("cli_scratch/s2.json", R"({
      "nu": 2.0,
      "omega_abs": {"family": "constant", "params": [1.0]},
      "phase_rate": {"family": "constant", "params": [0.0]}
    })");
    write_file("cli_scratch/rho_plus.json", "[[1.0,0.0],[0.0,0.0],[0.0,0.0],[0.0,0.0]]");
    REQUIRE(run("open-evolve --scenario cli_scratch/s2.json --rho0 cli_scratch/rho_plus.json "
                "--t-max 6 --samples 120 --out cli_scratch/rho.csv")
                .exit_code == 0);
    const auto rows = parse_csv("cli_scratch/rho.csv");
    REQUIRE(rows.size() == 121);
    for (std::size_t i = 1; i < rows.size(); i += 12) {
        const double r11 = std::stod(rows[i][1]);
        const double r22 = std::stod(rows[i][4]);
        CHECK(std::abs(r11 + r22 - 1.0) <= 1e-12);
        CHECK(r22 <= 0.5 + 1e-9);
        const double purity = std::stod(rows[i][5]);
        CHECK(std::abs(purity - 1.0) <= 1e-10); // pure stays pure
    }

    // invalid rho0 is rejected with a diagnostic
    write_file("cli_scratch/rho_bad.json", "[[0.9,0.0],[0.0,0.0],[0.0,0.0],[0.0,0.0]]");
    const RunResult bad = run("open-evolve --scenario cli_scratch/s2.json --rho0 "
                              "cli_scratch/rho_bad.json --t-max 6 --samples 10 --out "
                              "cli_scratch/x.csv");
    CHECK(bad.exit_code == 1);
    CHECK(bad.output.find("trace") != std::string::npos);
}

TEST_CASE("verify command") {
    SUBCASE("default grid passes") {
        const RunResult r = run("verify --t-max 6 --samples 9");
        CHECK(r.exit_code == 0);
        CHECK(r.output.find("[PASS]") != std::string::npos);
        CHECK(r.output.find("[FAIL]") == std::string::npos);
    }
    SUBCASE("unattainable tolerance fails with a report") {
        const RunResult r = run("verify --t-max 4 --samples 5 --tol 1e-30");
        CHECK(r.exit_code == 1);
        CHECK(r.output.find("[FAIL]") != std::string::npos);
    }
    SUBCASE("SU11_TOL environment override") {
        const RunResult r = run("verify --t-max 4 --samples 5", "SU11_TOL=1e-30");
        CHECK(r.exit_code == 1);
        const RunResult ok = run("verify --t-max 4 --samples 5 --nu-grid 0,2", "SU11_TOL=1e-6");
        CHECK(ok.exit_code == 0);
    }
    SUBCASE("empty nu grid is a usage error") {
        const RunResult r = run("verify --nu-grid \"\"");
        CHECK(r.exit_code == 2);
        CHECK(r.output.find("usage error") != std::string::npos);
    }
    SUBCASE("negative nu is a usage error") {
        CHECK(run("verify --nu-grid 0,-1").exit_code == 2);
    }
}
