// su11 — exact and numerical evolution for time-dependent su(1,1) generators:
// transition-probability curves, propagators, guided-wave propagation, the
// normalized density-matrix dynamics and the closed-form/oracle cross-check.

#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "su11/cli.hpp"

namespace {

std::vector<double> parse_nu_grid(const std::string& text) {
    if (text.empty()) throw su11::UsageError("--nu-grid: empty grid");
    std::vector<double> grid;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        std::size_t pos = 0;
        double v = 0.0;
        try {
            v = std::stod(item, &pos);
        } catch (const std::exception&) {
            throw su11::UsageError("--nu-grid: cannot parse '" + item + "'");
        }
        if (pos != item.size())
            throw su11::UsageError("--nu-grid: cannot parse '" + item + "'");
        grid.push_back(v);
    }
    if (grid.empty()) throw su11::UsageError("--nu-grid: empty grid");
    return grid;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"time evolution toolkit for su(1,1) two-mode problems"};
    app.require_subcommand(1);

    su11::RunConfig cfg;
    std::string nu_grid_text;

    auto add_sampling = [&cfg](CLI::App* cmd, const char* span_flag) {
        cmd->add_option(span_flag, cfg.t_max, "sampling span");
        cmd->add_option("--samples", cfg.samples, "number of samples (>= 2)");
        cmd->add_option("--out", cfg.out_path, "output CSV path");
    };

    CLI::App* rabi = app.add_subcommand(
        "rabi-curve", "transition probability curve for a constant-coefficient scenario");
    rabi->add_option("--scenario", cfg.scenario_path, "scenario JSON");
    add_sampling(rabi, "--t-max");

    CLI::App* prop = app.add_subcommand("propagator",
                                        "Caley-Klein propagator entries along a time grid");
    prop->add_option("--scenario", cfg.scenario_path, "scenario JSON");
    add_sampling(prop, "--t-max");

    CLI::App* gw = app.add_subcommand("guided-wave",
                                      "counter-propagating mode amplitudes along z");
    gw->add_option("--problem", cfg.problem_path, "coupled-mode problem JSON");
    add_sampling(gw, "--z-max");

    CLI::App* open = app.add_subcommand("open-evolve",
                                        "normalized density-matrix evolution");
    open->add_option("--scenario", cfg.scenario_path, "scenario JSON");
    open->add_option("--rho0", cfg.rho0_path, "initial density matrix JSON");
    add_sampling(open, "--t-max");

    CLI::App* verify = app.add_subcommand("verify",
                                          "closed form vs ODE oracle cross-check suite");
    verify->add_option("--nu-grid", nu_grid_text, "comma-separated nu values");
    verify->add_option("--t-max", cfg.t_max, "time horizon");
    verify->add_option("--samples", cfg.samples, "time samples per check");
    double tol = 0.0;
    CLI::Option* tol_opt = verify->add_option("--tol", tol, "oracle comparison tolerance");

    CLI11_PARSE(app, argc, argv);

    try {
        // span defaults to 10 where the flag was not given
        if (gw->parsed() && gw->count("--z-max") == 0) cfg.t_max = 10.0;
        if (open->parsed() && open->count("--t-max") == 0) cfg.t_max = 10.0;
        if (verify->parsed()) {
            if (!nu_grid_text.empty() || verify->count("--nu-grid") > 0)
                cfg.nu_grid = parse_nu_grid(nu_grid_text);
            if (tol_opt->count() > 0) {
                if (!(tol > 0.0)) throw su11::UsageError("--tol must be > 0");
                cfg.tol_override = tol;
            }
            return su11::run_verify_command(cfg, std::cout);
        }
        if (rabi->parsed()) return su11::run_rabi_curve(cfg, std::cout);
        if (prop->parsed()) return su11::run_propagator(cfg, std::cout);
        if (gw->parsed()) return su11::run_guided_wave(cfg, std::cout);
        if (open->parsed()) return su11::run_open_evolve(cfg, std::cout);
    } catch (const su11::UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
