// Command-line driver for the two-spin / dual-mode-resonator simulator:
// normal-mode tables, effective couplings, negativity time series, damped
// trajectories, parameter sweeps, and the closed-form-vs-integrator report.

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "nvres/config.hpp"
#include "nvres/sweep.hpp"

namespace {

struct CliOptions {
    std::string config_path;
    std::vector<std::pair<std::string, std::string>> assignments;  // flag-provided key/values
    nvres::RunSpec spec;
    std::string t_start_text, t_end_text;
    std::string sweep_values_text;
};

void add_param_flag(CLI::App* cmd, CliOptions& opt, const std::string& flag,
                    const std::string& key, const std::string& help) {
    const auto setter = [&opt, key](const std::string& v) {
        opt.assignments.emplace_back(key, v);
    };
    cmd->add_option_function<std::string>(flag, setter, help);
}

void add_common(CLI::App* cmd, CliOptions& opt) {
    cmd->add_option("--config", opt.config_path, "key = value config file");
    cmd->add_option("--output,-o", opt.spec.output_path, "output file (default: stdout)");
}

void add_grid(CLI::App* cmd, CliOptions& opt) {
    cmd->add_option("--t-start", opt.t_start_text, "grid start (ms when suffixed)");
    cmd->add_option("--t-end", opt.t_end_text, "grid end (ms when suffixed)");
    cmd->add_option("--points", opt.spec.n_points, "number of grid points");
}

void add_dynamics(CLI::App* cmd, CliOptions& opt) {
    add_param_flag(cmd, opt, "--alpha", "alpha", "coupling alpha (kHz suffix supported)");
    add_param_flag(cmd, opt, "--beta", "beta", "coupling beta (kHz suffix supported)");
    add_param_flag(cmd, opt, "--n1", "n_1", "first-mode occupation");
    add_param_flag(cmd, opt, "--n3", "n_3", "second-mode occupation");
    cmd->add_option("--initial", opt.spec.initial_state, "initial state: pair | pair42 | equal");
}

void add_geometry(CLI::App* cmd, CliOptions& opt) {
    add_param_flag(cmd, opt, "--length-1", "length_1", "first rod length (um/nm suffixes)");
    add_param_flag(cmd, opt, "--length-2", "length_2", "second rod length");
    add_param_flag(cmd, opt, "--width-1", "width_1", "first rod width");
    add_param_flag(cmd, opt, "--width-2", "width_2", "second rod width");
    add_param_flag(cmd, opt, "--thickness-1", "thickness_1", "first rod thickness");
    add_param_flag(cmd, opt, "--thickness-2", "thickness_2", "second rod thickness");
    add_param_flag(cmd, opt, "--mass-1", "mass_1", "first rod mass (kg)");
    add_param_flag(cmd, opt, "--mass-2", "mass_2", "second rod mass (kg)");
    add_param_flag(cmd, opt, "--quality-1", "quality_1", "first rod quality factor");
    add_param_flag(cmd, opt, "--quality-2", "quality_2", "second rod quality factor");
    add_param_flag(cmd, opt, "--young-modulus", "young_modulus", "Young's modulus (GPa/Pa)");
    add_param_flag(cmd, opt, "--density", "density", "material density (kg/m^3)");
}

/// config file first, then flags on top (flags win).
void finalize(CliOptions& opt) {
    if (!opt.config_path.empty()) {
        const nvres::Config cfg = nvres::Config::parse_file(opt.config_path);
        for (const auto& [k, v] : cfg.values()) opt.spec.parameters[k] = v;
    }
    for (const auto& [k, v] : opt.assignments) opt.spec.parameters[k] = nvres::parse_quantity(v);
    if (!opt.t_start_text.empty()) opt.spec.t_start = nvres::parse_quantity(opt.t_start_text);
    if (!opt.t_end_text.empty()) opt.spec.t_end = nvres::parse_quantity(opt.t_end_text);
    if (!opt.sweep_values_text.empty()) {
        opt.spec.sweep_values.clear();
        std::istringstream in(opt.sweep_values_text);
        std::string tok;
        while (std::getline(in, tok, ',')) opt.spec.sweep_values.push_back(nvres::parse_quantity(tok));
    }
    if (const char* dir = std::getenv("NVRES_OUTPUT_DIR");
        dir && *dir && !opt.spec.output_path.empty() && opt.spec.output_path.front() != '/') {
        opt.spec.output_path = std::string(dir) + "/" + opt.spec.output_path;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"two NV spins coupled by a dual-mode nanomechanical resonator"};
    app.require_subcommand(1);

    CliOptions opt;

    auto* modes = app.add_subcommand("modes", "spring constants, normal modes, validity check");
    add_common(modes, opt);
    add_geometry(modes, opt);
    add_param_flag(modes, opt, "--k-1", "k_1", "first spring constant directly (skips geometry)");
    add_param_flag(modes, opt, "--k-2", "k_2", "second spring constant directly");
    modes->callback([&] { opt.spec.mode = nvres::RunMode::Modes; });

    auto* coup = app.add_subcommand("couplings", "dressed spin and effective couplings");
    add_common(coup, opt);
    add_geometry(coup, opt);
    add_param_flag(coup, opt, "--gradient", "gradient", "magnetic field gradient (T/m), required");
    add_param_flag(coup, opt, "--g-factor", "g_factor", "spin g-factor (default 2)");
    add_param_flag(coup, opt, "--rabi-zero", "rabi_zero", "zero-field Rabi frequency (rad/s)");
    add_param_flag(coup, opt, "--delta-rabi", "delta_rabi", "field-induced Rabi splitting (rad/s)");
    add_param_flag(coup, opt, "--detuning", "detuning", "common drive detuning (rad/s)");
    add_param_flag(coup, opt, "--alpha", "alpha", "direct alpha, bypasses the physical pipeline");
    add_param_flag(coup, opt, "--beta", "beta", "direct beta, bypasses the physical pipeline");
    add_param_flag(coup, opt, "--n1", "n_1", "first-mode occupation");
    add_param_flag(coup, opt, "--n3", "n_3", "second-mode occupation");
    coup->callback([&] { opt.spec.mode = nvres::RunMode::Couplings; });

    auto* neg = app.add_subcommand("negativity", "negativity time series (closed-form dynamics)");
    add_common(neg, opt);
    add_dynamics(neg, opt);
    add_grid(neg, opt);
    neg->callback([&] { opt.spec.mode = nvres::RunMode::Negativity; });

    auto* lind = app.add_subcommand("lindblad", "damped trajectory (fixed-step integrator)");
    add_common(lind, opt);
    add_dynamics(lind, opt);
    add_grid(lind, opt);
    add_param_flag(lind, opt, "--gamma-d", "gamma_d", "decay rate of level 2");
    add_param_flag(lind, opt, "--gamma-e", "gamma_e", "decay rate of level 3");
    add_param_flag(lind, opt, "--dt", "dt", "integrator step (default 1e-3/max rate)");
    lind->add_flag("--dump-rho", opt.spec.dump_rho, "append all 81 matrix elements per row");
    lind->callback([&] { opt.spec.mode = nvres::RunMode::Lindblad; });

    auto* sweep = app.add_subcommand("sweep", "run a parameter sweep (one file per value)");
    add_common(sweep, opt);
    add_dynamics(sweep, opt);
    add_grid(sweep, opt);
    add_param_flag(sweep, opt, "--gamma-d", "gamma_d", "decay rate of level 2");
    add_param_flag(sweep, opt, "--gamma-e", "gamma_e", "decay rate of level 3");
    sweep->add_option("--axis", opt.spec.sweep_axis, "parameter to sweep")->required();
    sweep->add_option("--values", opt.sweep_values_text, "comma-separated values")->required();
    sweep->callback([&] { opt.spec.mode = nvres::RunMode::Sweep; });

    auto* val = app.add_subcommand("validate", "closed-form vs integrator element report");
    add_common(val, opt);
    add_param_flag(val, opt, "--alpha", "alpha", "coupling alpha");
    add_param_flag(val, opt, "--beta", "beta", "coupling beta");
    add_param_flag(val, opt, "--gamma-d", "gamma_d", "decay rate of level 2");
    add_param_flag(val, opt, "--gamma-e", "gamma_e", "decay rate of level 3");
    add_param_flag(val, opt, "--seed", "seed", "seed for the random initial state");
    val->add_option("--t-end", opt.t_end_text, "last comparison time");
    auto* val_points = val->add_option("--points", opt.spec.n_points, "comparison grid size");
    val->callback([&, val_points] {
        opt.spec.mode = nvres::RunMode::Validate;
        if (val_points->count() == 0) opt.spec.n_points = 100;
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        finalize(opt);
        const nvres::RunOutputs out = nvres::run(opt.spec);
        if (!out.stdout_text.empty()) std::cout << out.stdout_text;
        for (const auto& f : out.files_written) std::cerr << "wrote " << f << "\n";
        return 0;
    } catch (const nvres::ConfigError& e) {
        std::cerr << "config error (line " << e.line << "): " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}
