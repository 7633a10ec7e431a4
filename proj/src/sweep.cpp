#include "nvres/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <future>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "nvres/appendix_solution.hpp"
#include "nvres/config.hpp"
#include "nvres/cross_validate.hpp"
#include "nvres/dressing.hpp"
#include "nvres/entanglement.hpp"
#include "nvres/jacobi.hpp"
#include "nvres/lindblad.hpp"
#include "nvres/resonator.hpp"
#include "nvres/unitary.hpp"

namespace nvres {

namespace {

constexpr const char* kToolVersion = "nvres 1.0.0";

TwoSpinState make_initial(const std::string& name) {
    if (name == "pair") return pair_superposition_state();
    if (name == "pair42") {
        Vec9 a{};
        a[3] = a[7] = 1.0 / std::numbers::sqrt2;
        return TwoSpinState::from_amplitudes(a);
    }
    if (name == "equal") return equal_superposition_state();
    throw std::invalid_argument("unknown initial state '" + name + "'");
}

std::string join_g17(const std::vector<double>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ',';
        out += format_g17(v[i]);
    }
    return out;
}

}  // namespace

std::string to_string(RunMode m) {
    switch (m) {
        case RunMode::Modes: return "modes";
        case RunMode::Couplings: return "couplings";
        case RunMode::Negativity: return "negativity";
        case RunMode::Lindblad: return "lindblad";
        case RunMode::Sweep: return "sweep";
        case RunMode::Validate: return "validate";
    }
    throw std::logic_error("bad RunMode");
}

RunMode run_mode_from_string(const std::string& s) {
    if (s == "modes") return RunMode::Modes;
    if (s == "couplings") return RunMode::Couplings;
    if (s == "negativity") return RunMode::Negativity;
    if (s == "lindblad") return RunMode::Lindblad;
    if (s == "sweep") return RunMode::Sweep;
    if (s == "validate") return RunMode::Validate;
    throw std::invalid_argument("unknown mode '" + s + "'");
}

double RunSpec::param_or(const std::string& key, double fallback) const {
    const auto it = parameters.find(key);
    return it == parameters.end() ? fallback : it->second;
}

void RunSpec::validate() const {
    if (n_points < 2) throw std::invalid_argument("RunSpec: need at least 2 grid points");
    if (!(t_end > t_start)) throw std::invalid_argument("RunSpec: t_end must exceed t_start");
    for (double v : sweep_values)
        if (!std::isfinite(v)) throw std::invalid_argument("RunSpec: non-finite sweep value");
    if (mode == RunMode::Sweep) {
        if (sweep_axis.empty()) throw std::invalid_argument("RunSpec: sweep needs an axis");
        if (sweep_values.empty()) throw std::invalid_argument("RunSpec: sweep needs values");
    }
}

std::string format_g17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string run_spec_metadata(const RunSpec& spec) {
    std::ostringstream out;
    out << "# " << kToolVersion << "\n";
    out << "# mode = " << to_string(spec.mode) << "\n";
    for (const auto& [k, v] : spec.parameters) out << "# " << k << " = " << format_g17(v) << "\n";
    out << "# initial = " << spec.initial_state << "\n";
    if (spec.dump_rho) out << "# dump_rho = 1\n";
    if (!spec.sweep_axis.empty()) {
        out << "# sweep_axis = " << spec.sweep_axis << "\n";
        out << "# sweep_values = " << join_g17(spec.sweep_values) << "\n";
    }
    out << "# t_start = " << format_g17(spec.t_start) << "\n";
    out << "# t_end = " << format_g17(spec.t_end) << "\n";
    out << "# points = " << spec.n_points << "\n";
    return out.str();
}

RunSpec parse_metadata(const std::string& file_content) {
    RunSpec spec;
    spec.parameters.clear();
    std::istringstream in(file_content);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] != '#') break;
        std::string body = line.substr(1);
        const auto eq = body.find('=');
        if (eq == std::string::npos) continue;  // banner or column list
        auto trim = [](std::string s) {
            const auto b = s.find_first_not_of(" \t");
            const auto e = s.find_last_not_of(" \t");
            return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
        };
        const std::string key = trim(body.substr(0, eq));
        const std::string value = trim(body.substr(eq + 1));
        if (key == "mode") {
            spec.mode = run_mode_from_string(value);
        } else if (key == "initial") {
            spec.initial_state = value;
        } else if (key == "dump_rho") {
            spec.dump_rho = value == "1";
        } else if (key == "sweep_axis") {
            spec.sweep_axis = value;
        } else if (key == "sweep_values") {
            spec.sweep_values.clear();
            std::istringstream vs(value);
            std::string tok;
            while (std::getline(vs, tok, ',')) spec.sweep_values.push_back(std::stod(tok));
        } else if (key == "t_start") {
            spec.t_start = std::stod(value);
        } else if (key == "t_end") {
            spec.t_end = std::stod(value);
        } else if (key == "points") {
            spec.n_points = static_cast<std::size_t>(std::stoul(value));
        } else if (key == "columns") {
            // informational
        } else {
            spec.parameters[key] = std::stod(value);
        }
    }
    return spec;
}

std::string modes_csv(const RunSpec& spec) {
    const auto& p = spec.parameters;
    const auto need = [&](const char* k) {
        const auto it = p.find(k);
        if (it == p.end())
            throw std::invalid_argument(std::string("modes: missing parameter '") + k + "'");
        return it->second;
    };

    std::ostringstream out;
    out << run_spec_metadata(spec);

    // spring constants either directly (k_1, k_2) or from geometry + material
    const bool direct_k = p.count("k_1") && p.count("k_2");
    const bool have_geometry = p.count("length_1") != 0;
    SpringPair springs{};
    if (direct_k) {
        springs = {need("k_1"), need("k_2")};
        out << "# note = spring constants taken directly from k_1, k_2\n";
    } else {
        const CantileverGeometry geom{need("length_1"),  need("length_2"),
                                      need("width_1"),   need("width_2"),
                                      need("thickness_1"), need("thickness_2"),
                                      need("mass_1"),    need("mass_2"),
                                      spec.param_or("quality_1", 1e5),
                                      spec.param_or("quality_2", 1e5)};
        springs = spring_constants(geom, MaterialConstants{need("young_modulus"), need("density")});
    }
    const NormalModes nm = normal_modes(springs, need("mass_1"), need("mass_2"));

    out << "# columns = quantity,value,unit\n";
    const auto row = [&](const char* q, double v, const char* u) {
        out << q << ',' << format_g17(v) << ',' << u << "\n";
    };
    row("k_1", springs.k_1, "kg/s^2");
    row("k_2", springs.k_2, "kg/s^2");
    if (have_geometry) {
        const CantileverGeometry geom{need("length_1"),  need("length_2"),
                                      need("width_1"),   need("width_2"),
                                      need("thickness_1"), need("thickness_2"),
                                      need("mass_1"),    need("mass_2"),
                                      spec.param_or("quality_1", 1e5),
                                      spec.param_or("quality_2", 1e5)};
        const MaterialConstants mat{need("young_modulus"), need("density")};
        const auto [nu1, nu2] = free_frequencies(geom, mat);
        row("nu_1_0", nu1, "Hz");
        row("nu_2_0", nu2, "Hz");
        const ValidityReport rep = validity_check(geom, mat, nm);
        row("validity_ratio_1", rep.ratio_1, "1");
        row("validity_ratio_2", rep.ratio_2, "1");
        row("validity_pass", rep.pass ? 1.0 : 0.0, "bool");
    }
    row("omega_1", nm.omega_1, "rad/s");
    row("omega_21", nm.omega_21, "rad/s");
    row("omega_2", nm.omega_2, "rad/s");
    row("big_omega_1", nm.big_omega_1, "rad/s");
    row("big_omega_2", nm.big_omega_2, "rad/s");
    row("kappa_1", nm.kappa_1, "1");
    row("kappa_2", nm.kappa_2, "1");
    row("eff_mass_1", nm.eff_mass_1, "kg");
    row("eff_mass_2", nm.eff_mass_2, "kg");
    row("zp_amp_1", nm.zp_amp_1, "m");
    row("zp_amp_2", nm.zp_amp_2, "m");
    return out.str();
}

std::string couplings_csv(const RunSpec& spec) {
    const auto& p = spec.parameters;
    std::ostringstream out;
    out << run_spec_metadata(spec);
    out << "# columns = quantity,value,unit\n";
    const auto row = [&](const char* q, double v, const char* u) {
        out << q << ',' << format_g17(v) << ',' << u << "\n";
    };

    if (p.count("alpha") && p.count("beta")) {
        // direct entry path: alpha, beta given, physical pipeline bypassed.
        // Refuse a silent mix of the two entry paths.
        if (p.count("rabi_zero") || p.count("gradient") || p.count("detuning"))
            throw std::invalid_argument(
                "couplings: both direct (alpha, beta) and physical drive parameters given; "
                "choose one entry path");
        const double alpha = p.at("alpha");
        const double beta = p.at("beta");
        row("alpha", alpha, "1/ms");
        row("beta", beta, "1/ms");
        row("persistent_residual", persistent_entanglement_residual(alpha, beta), "1");
        return out.str();
    }

    const auto need = [&](const char* k) {
        const auto it = p.find(k);
        if (it == p.end())
            throw std::invalid_argument(std::string("couplings: missing parameter '") + k + "'");
        return it->second;
    };
    const CantileverGeometry geom{need("length_1"),    need("length_2"),  need("width_1"),
                                  need("width_2"),     need("thickness_1"), need("thickness_2"),
                                  need("mass_1"),      need("mass_2"),    spec.param_or("quality_1", 1e5),
                                  spec.param_or("quality_2", 1e5)};
    const MaterialConstants mat{need("young_modulus"), need("density")};
    const NormalModes nm = normal_modes(spring_constants(geom, mat), geom.mass_1, geom.mass_2);
    const TipField tip = tip_field(need("gradient"), nm, spec.param_or("g_factor", 2.0));
    const DriveParams drive{need("rabi_zero"), spec.param_or("delta_rabi", 0.0), need("detuning")};
    const DressedSpin ds = dress_with_couplings(drive, tip);
    const int n1 = static_cast<int>(spec.param_or("n_1", 0));
    const int n3 = static_cast<int>(spec.param_or("n_3", 0));
    const EffectiveCouplings ec = effective_couplings(ds, nm, n1, n3);

    row("theta", ds.theta, "rad");
    row("rms_rabi", ds.rms_rabi, "rad/s");
    row("omega_g", ds.omega_g, "rad/s");
    row("omega_d", ds.omega_d, "rad/s");
    row("omega_e", ds.omega_e, "rad/s");
    row("lambda_1", tip.lambda_1, "rad/s");
    row("lambda_2", tip.lambda_2, "rad/s");
    row("lambda_g", ds.lambda_g, "rad/s");
    row("lambda_e", ds.lambda_e, "rad/s");
    row("delta_1", ec.delta_1, "rad/s");
    row("delta_2", ec.delta_2, "rad/s");
    row("alpha", ec.alpha, "rad/s");
    row("beta", ec.beta, "rad/s");
    row("persistent_residual", persistent_entanglement_residual(ec.alpha, ec.beta), "1");
    return out.str();
}

std::string negativity_csv(const RunSpec& spec) {
    spec.validate();
    const double alpha = spec.param_or("alpha", 1.0);
    const double beta = spec.param_or("beta", 1.0);
    const EvolutionParams ep{alpha, beta, static_cast<int>(spec.param_or("n_1", 0)),
                             static_cast<int>(spec.param_or("n_3", 0))};
    const TwoSpinState s0 = make_initial(spec.initial_state);
    const bool closed_form_applies = spec.initial_state == "pair" || spec.initial_state == "pair42";

    std::ostringstream out;
    out << run_spec_metadata(spec);
    out << "# columns = t,negativity" << (closed_form_applies ? ",negativity_closed_form" : "")
        << "\n";
    for (std::size_t k = 0; k < spec.n_points; ++k) {
        const double t = spec.t_start + (spec.t_end - spec.t_start) * static_cast<double>(k) /
                                            static_cast<double>(spec.n_points - 1);
        const TwoSpinState st = evolve(s0, ep, t);
        const double n = negativity(density(st)).value;
        out << format_g17(t) << ',' << format_g17(n);
        if (closed_form_applies) out << ',' << format_g17(negativity_closed_form(alpha, beta, t));
        out << "\n";
    }
    return out.str();
}

std::string lindblad_csv(const RunSpec& spec) {
    spec.validate();
    if (spec.t_start != 0.0)
        throw std::invalid_argument("lindblad: trajectories start at t = 0");
    const double alpha = spec.param_or("alpha", 1.0);
    const double beta = spec.param_or("beta", 1.0);
    const DecayRates rates{spec.param_or("gamma_e", 0.0), spec.param_or("gamma_d", 0.0)};
    const LindbladSystem sys(alpha, beta, rates);
    const double dt = spec.param_or("dt", default_dt(sys));
    const DensityMatrix rho0 = density(make_initial(spec.initial_state));
    const Trajectory traj = integrate(sys, rho0, spec.t_end, dt, spec.n_points);

    std::ostringstream out;
    out << run_spec_metadata(spec);
    out << "# columns = t,negativity,trace,min_eig";
    if (spec.dump_rho) {
        for (int i = 1; i <= 9; ++i)
            for (int j = 1; j <= 9; ++j) out << ",rho_re_" << i << "_" << j;
        for (int i = 1; i <= 9; ++i)
            for (int j = 1; j <= 9; ++j) out << ",rho_im_" << i << "_" << j;
    }
    out << "\n";
    for (std::size_t k = 0; k < traj.times.size(); ++k) {
        const Mat9& rho = traj.states[k].matrix();
        const auto eig = hermitian_eigensystem(rho);
        out << format_g17(traj.times[k]) << ',' << format_g17(traj.negativities[k]) << ','
            << format_g17(rho.trace().real()) << ',' << format_g17(eig.values[0]);
        if (spec.dump_rho) {
            for (std::size_t i = 0; i < 9; ++i)
                for (std::size_t j = 0; j < 9; ++j) out << ',' << format_g17(rho(i, j).real());
            for (std::size_t i = 0; i < 9; ++i)
                for (std::size_t j = 0; j < 9; ++j) out << ',' << format_g17(rho(i, j).imag());
        }
        out << "\n";
    }
    return out.str();
}

std::string validate_report(const RunSpec& spec) {
    const double alpha = spec.param_or("alpha", 1.0);
    const double beta = spec.param_or("beta", 2.0);
    const DecayRates rates{spec.param_or("gamma_e", 0.7), spec.param_or("gamma_d", 0.3)};
    const LindbladSystem sys(alpha, beta, rates);
    const std::size_t n = std::max<std::size_t>(spec.n_points, 2);
    std::vector<double> grid(n);
    for (std::size_t k = 0; k < n; ++k)
        grid[k] = spec.t_end * static_cast<double>(k + 1) / static_cast<double>(n);

    // deterministic pseudo-random valid initial state (seeded LCG)
    auto seed = static_cast<unsigned long long>(spec.param_or("seed", 1));
    const auto next = [&seed]() {
        seed = seed * 6364136223846793005ULL + 1442695040888963407ULL;
        return static_cast<double>(seed >> 11) / 9007199254740992.0 - 0.5;
    };
    Mat9 a;
    for (auto& x : a.a) x = cplx{next(), next()};
    Mat9 rho_raw = a * a.adjoint();
    rho_raw *= cplx{1.0 / rho_raw.trace().real()};
    const DensityMatrix rho0 = DensityMatrix::from_matrix(rho_raw.hermitized());

    const ValidationReport rep = cross_validate(sys, rho0, grid);

    std::ostringstream out;
    out << run_spec_metadata(spec);
    out << "# columns = row,col,max_abs_err,flagged\n";
    for (const auto& e : rep.elements)
        out << e.row << ',' << e.col << ',' << format_g17(e.max_abs_err) << ','
            << (e.flagged ? 1 : 0) << "\n";
    out << "# worst_err = " << format_g17(rep.worst_err) << "\n";
    out << "# integrator_step = " << format_g17(rep.integrator_step) << "\n";
    out << "# step_check = " << format_g17(rep.step_check) << "\n";
    out << "# flagged_count = " << rep.flagged.size() << "\n";
    out << "# transcription corrections applied to the closed forms:\n";
    for (const auto& note : transcription_notes())
        out << "#   " << note.element << ": printed: " << note.printed
            << " | implemented: " << note.implemented << "\n";
    return out.str();
}

namespace {

std::string run_one_csv(const RunSpec& spec) {
    switch (spec.mode) {
        case RunMode::Modes: return modes_csv(spec);
        case RunMode::Couplings: return couplings_csv(spec);
        case RunMode::Negativity: return negativity_csv(spec);
        case RunMode::Lindblad: return lindblad_csv(spec);
        case RunMode::Validate: return validate_report(spec);
        case RunMode::Sweep: throw std::logic_error("nested sweep");
    }
    throw std::logic_error("bad mode");
}

void write_file(const std::string& path, const std::string& content,
                std::vector<std::string>& written) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    out << content;
    written.push_back(path);
}

}  // namespace

RunOutputs run(const RunSpec& spec) {
    spec.validate();
    RunOutputs outputs;

    if (spec.mode != RunMode::Sweep) {
        const std::string content = run_one_csv(spec);
        if (spec.output_path.empty())
            outputs.stdout_text = content;
        else
            write_file(spec.output_path, content, outputs.files_written);
        return outputs;
    }

    if (spec.output_path.empty())
        throw std::invalid_argument("sweep: an output stem is required");

    const std::string base_mode = spec.parameters.count("gamma_e") || spec.parameters.count("gamma_d")
                                      ? "lindblad"
                                      : "negativity";
    std::vector<RunSpec> points;
    points.reserve(spec.sweep_values.size());
    for (double v : spec.sweep_values) {
        RunSpec p = spec;
        p.mode = run_mode_from_string(base_mode);
        p.sweep_axis.clear();
        p.sweep_values.clear();
        p.parameters[spec.sweep_axis] = v;
        points.push_back(std::move(p));
    }

    // run concurrently, write in index order
    const std::size_t hw = std::max<std::size_t>(1, std::thread::hardware_concurrency());
    std::vector<std::string> results(points.size());
    std::vector<std::future<void>> futs;
    std::atomic<std::size_t> cursor{0};
    for (std::size_t w = 0; w < std::min(hw, points.size()); ++w)
        futs.push_back(std::async(std::launch::async, [&]() {
            for (;;) {
                const std::size_t i = cursor.fetch_add(1);
                if (i >= points.size()) return;
                results[i] = run_one_csv(points[i]);
            }
        }));
    for (auto& f : futs) f.get();

    std::ostringstream index;
    index << run_spec_metadata(spec);
    index << "# columns = index," << spec.sweep_axis << ",file\n";
    std::ostringstream plot;
    plot << "# gnuplot script\nset datafile separator ','\nset key top right\n"
         << "set xlabel 't'\nset ylabel 'negativity'\nplot \\\n";
    for (std::size_t i = 0; i < points.size(); ++i) {
        char suffix[32];
        std::snprintf(suffix, sizeof suffix, "_%03zu.csv", i);
        const std::string fname = spec.output_path + suffix;
        write_file(fname, results[i], outputs.files_written);
        index << i << ',' << format_g17(spec.sweep_values[i]) << ',' << fname << "\n";
        plot << "  '" << fname << "' using 1:2 with lines title '" << spec.sweep_axis << "="
             << format_g17(spec.sweep_values[i]) << "'" << (i + 1 < points.size() ? ", \\\n" : "\n");
    }
    write_file(spec.output_path + ".index.csv", index.str(), outputs.files_written);
    write_file(spec.output_path + ".gp", plot.str(), outputs.files_written);
    return outputs;
}

}  // namespace nvres
