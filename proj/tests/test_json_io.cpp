#include <doctest.h>

#include <cmath>

#include "su11/json_io.hpp"

using namespace su11;
using nlohmann::json;

TEST_CASE("coefficient round-trips through json") {
    const CoefficientFn cases[] = {
        CoefficientFn::constant(1.5),
        CoefficientFn::sinusoid(1.0, 0.5, 2.0, 0.3),
        CoefficientFn::polynomial({0.5, -1.0, 0.25}),
        CoefficientFn::table({0.0, 1.0, 2.5}, {1.0, 0.5, 2.0}),
    };
    for (const auto& f : cases) {
        const CoefficientFn g = coefficient_from_json(to_json(f), "roundtrip");
        CHECK(g.family() == f.family());
        for (double t : {0.0, 0.5, 1.9}) CHECK(g(t) == f(t));
    }
}

TEST_CASE("scenario json uses the documented field names") {
    const json j = {
        {"nu", 2.0},
        {"omega_abs", {{"family", "constant"}, {"params", {1.0}}}},
        {"phase_rate", {{"family", "constant"}, {"params", {0.0}}}},
        {"phi0", 0.25},
    };
    const SolvableScenario sc = scenario_from_json(j);
    CHECK(sc.nu() == 2.0);
    CHECK(sc.phi0() == 0.25);
    CHECK(sc.omega_abs(3.0) == 1.0);

    const json back = to_json(sc);
    CHECK(back.contains("nu"));
    CHECK(back.contains("omega_abs"));
    CHECK(back.contains("phase_rate"));
    CHECK(back.contains("phi0"));

    // phi0 defaults to zero
    json no_phi = j;
    no_phi.erase("phi0");
    CHECK(scenario_from_json(no_phi).phi0() == 0.0);
}

TEST_CASE("hamiltonian json") {
    const json j = {
        {"big_omega", {{"family", "constant"}, {"params", {2.0}}}},
        {"omega_abs", {{"family", "sinusoid"}, {"params", {1.0, 0.5, 1.0, 0.0}}}},
        {"phi_omega", {{"family", "polynomial"}, {"params", {0.1, 0.2}}}},
    };
    const Su11Hamiltonian h = hamiltonian_from_json(j);
    CHECK(h.big_omega(1.0) == 2.0);
    CHECK(h.phi_omega(2.0) == doctest::Approx(0.5));
    const json back = to_json(h);
    CHECK(back.at("omega_abs").at("family") == "sinusoid");
}

TEST_CASE("json diagnostics carry the offending path") {
    SUBCASE("unknown family") {
        const json j = {{"family", "gaussian"}, {"params", {1.0}}};
        CHECK_THROWS_WITH_AS(coefficient_from_json(j, "scenario.omega_abs"),
                             doctest::Contains("scenario.omega_abs.family"),
                             std::invalid_argument);
    }
    SUBCASE("missing member") {
        const json j = {{"nu", 1.0}};
        CHECK_THROWS_WITH_AS(scenario_from_json(j), doctest::Contains("omega_abs"),
                             std::invalid_argument);
    }
    SUBCASE("wrong parameter count") {
        const json j = {{"family", "sinusoid"}, {"params", {1.0, 2.0}}};
        CHECK_THROWS_WITH_AS(coefficient_from_json(j, "x"), doctest::Contains("sinusoid"),
                             std::invalid_argument);
    }
    SUBCASE("non-numeric entries") {
        const json j = {{"family", "constant"}, {"params", {"one"}}};
        CHECK_THROWS_WITH_AS(coefficient_from_json(j, "x"), doctest::Contains("x.params[0]"),
                             std::invalid_argument);
    }
    SUBCASE("negative nu") {
        const json j = {
            {"nu", -1.0},
            {"omega_abs", {{"family", "constant"}, {"params", {1.0}}}},
            {"phase_rate", {{"family", "constant"}, {"params", {0.0}}}},
        };
        CHECK_THROWS_WITH_AS(scenario_from_json(j), doctest::Contains("nu"),
                             std::invalid_argument);
    }
    SUBCASE("bad table grid") {
        const json j = {{"family", "table"}, {"t", {0.0, 0.0}}, {"v", {1.0, 2.0}}};
        CHECK_THROWS_WITH_AS(coefficient_from_json(j, "problem.k_abs"),
                             doctest::Contains("problem.k_abs"), std::invalid_argument);
    }
}

TEST_CASE("density matrix json") {
    SUBCASE("row-major [[re,im] x 4]") {
        const json j = json::array({{0.5, 0.0}, {0.1, 0.2}, {0.1, -0.2}, {0.5, 0.0}});
        const DensityMatrix rho = density_from_json(j);
        CHECK(rho.entry(0, 1) == Complex(0.1, 0.2));
        CHECK(rho.trace_error() <= 1e-15);
    }
    SUBCASE("rejects non-Hermitian input with a diagnostic") {
        const json j = json::array({{0.5, 0.0}, {0.1, 0.2}, {0.1, 0.2}, {0.5, 0.0}});
        CHECK_THROWS_WITH_AS(density_from_json(j), doctest::Contains("Hermitian"),
                             std::invalid_argument);
    }
    SUBCASE("rejects non-unit trace") {
        const json j = json::array({{0.9, 0.0}, {0.0, 0.0}, {0.0, 0.0}, {0.3, 0.0}});
        CHECK_THROWS_WITH_AS(density_from_json(j), doctest::Contains("trace"),
                             std::invalid_argument);
    }
    SUBCASE("rejects malformed shape") {
        CHECK_THROWS_AS(density_from_json(json::array({{1.0, 0.0}})), std::invalid_argument);
        CHECK_THROWS_AS(density_from_json(json::array({{1.0}, {0.0}, {0.0}, {0.0}})),
                        std::invalid_argument);
    }
}

TEST_CASE("coupled-mode problem json") {
    const json j = {
        {"delta", 2.0},
        {"k_abs", {{"family", "constant"}, {"params", {1.0}}}},
        {"phi_k", {{"family", "polynomial"}, {"params", {0.0, -2.0}}}},
        {"A0", {1.0, 0.0}},
        {"B0", {0.0, 0.5}},
    };
    const CoupledModeProblem p = coupled_mode_problem_from_json(j);
    CHECK(p.delta == 2.0);
    CHECK(p.a0 == Complex(1.0, 0.0));
    CHECK(p.b0 == Complex(0.0, 0.5));
    CHECK(p.phi_k(1.0) == doctest::Approx(-2.0));
    CHECK_THROWS_WITH_AS(
        coupled_mode_problem_from_json(json{{"delta", 1.0}}), doctest::Contains("k_abs"),
        std::invalid_argument);
}
