#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>

namespace nvres {

/// Thrown on malformed config text; line is 1-based.
struct ConfigError : std::runtime_error {
    int line;
    ConfigError(int line_, const std::string& what) : std::runtime_error(what), line(line_) {}
};

/// Plain-text key-value configuration: one `key = value` per line, `#` starts
/// a comment, blank lines ignored. Values may carry a unit suffix, e.g.
/// `length_1 = 15 um`, `alpha = 1 kHz`. Numeric canonical units:
///   lengths -> m; masses -> kg; pressures -> Pa; densities -> kg/m^3;
///   gradients -> T/m; magnetic fields -> T;
///   couplings/rates (kHz, MHz, ...) -> reciprocal milliseconds;
///   times -> ms.
/// Bare numbers pass through unchanged.
class Config {
  public:
    static Config parse_text(const std::string& text);
    static Config parse_file(const std::string& path);

    bool has(const std::string& key) const { return values_.count(key) != 0; }
    std::optional<double> get(const std::string& key) const;
    double get_or(const std::string& key, double fallback) const;
    double require(const std::string& key) const;
    std::optional<std::string> get_raw(const std::string& key) const;

    void set(const std::string& key, double value) { values_[key] = value; }
    const std::map<std::string, double>& values() const { return values_; }

  private:
    std::map<std::string, double> values_;
    std::map<std::string, std::string> raw_;
};

/// Parses "<number>[ <unit>]" into the canonical unit above.
/// Throws std::invalid_argument for malformed numbers or unknown units.
double parse_quantity(const std::string& text);

}  // namespace nvres
