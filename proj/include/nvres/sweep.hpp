#pragma once

#include <map>
#include <string>
#include <vector>

namespace nvres {

enum class RunMode { Modes, Couplings, Negativity, Lindblad, Sweep, Validate };

std::string to_string(RunMode m);
RunMode run_mode_from_string(const std::string& s);

/// One complete, reproducible invocation. parameters use the canonical config
/// units (see config.hpp); dynamics defaults: alpha = beta = 1, gammas = 0.
struct RunSpec {
    RunMode mode = RunMode::Negativity;
    std::map<std::string, double> parameters;
    std::string initial_state = "pair";  // pair | pair42 | equal
    bool dump_rho = false;
    std::string sweep_axis;          // Sweep mode: parameter to vary
    std::vector<double> sweep_values;
    std::string output_path;         // file (or stem for sweeps); empty = stdout
    double t_start = 0.0;
    double t_end = 6.3;
    std::size_t n_points = 400;

    double param_or(const std::string& key, double fallback) const;
    void validate() const;  // throws std::invalid_argument on malformed specs
};

/// Leading `# key = value` metadata block for an output file; re-parsing it
/// with parse_metadata reconstructs an equivalent spec.
std::string run_spec_metadata(const RunSpec& spec);
RunSpec parse_metadata(const std::string& file_content);

/// Fixed "%.17g" formatting used for every data value written.
std::string format_g17(double v);

/// CSV producers (deterministic content, metadata header included).
std::string modes_csv(const RunSpec& spec);
std::string couplings_csv(const RunSpec& spec);
std::string negativity_csv(const RunSpec& spec);
std::string lindblad_csv(const RunSpec& spec);
std::string validate_report(const RunSpec& spec);

struct RunOutputs {
    std::vector<std::string> files_written;
    std::string stdout_text;  // set when output_path is empty
};

/// Executes a spec. Sweep mode runs the points concurrently (hardware limit)
/// and writes one data file per value, an index file, and a gnuplot script,
/// deterministically ordered by sweep index.
RunOutputs run(const RunSpec& spec);

}  // namespace nvres
