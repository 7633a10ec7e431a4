#include "nvres/config.hpp"

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace nvres {

namespace {

std::string trim(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

std::optional<double> unit_scale(const std::string& u) {
    // lengths -> m
    if (u == "m") return 1.0;
    if (u == "mm") return 1e-3;
    if (u == "um" || u == "µm") return 1e-6;
    if (u == "nm") return 1e-9;
    if (u == "pm") return 1e-12;
    // couplings and rates -> reciprocal milliseconds (the kHz convention of
    // the dynamics plots: alpha in kHz times t in ms is the phase)
    if (u == "Hz") return 1e-3;
    if (u == "kHz") return 1.0;
    if (u == "MHz") return 1e3;
    if (u == "GHz") return 1e6;
    // times -> ms
    if (u == "s") return 1e3;
    if (u == "ms") return 1.0;
    if (u == "us" || u == "µs") return 1e-3;
    if (u == "ns") return 1e-6;
    // everything else is already canonical
    if (u == "kg") return 1.0;
    if (u == "Pa") return 1.0;
    if (u == "GPa") return 1e9;
    if (u == "MPa") return 1e6;
    if (u == "T") return 1.0;
    if (u == "mT") return 1e-3;
    if (u == "T/m") return 1.0;
    if (u == "G/nm") return 1e-4 * 1e9;  // gauss per nanometre
    if (u == "kg/m3" || u == "kg/m^3") return 1.0;
    return std::nullopt;
}

}  // namespace

double parse_quantity(const std::string& text) {
    const std::string s = trim(text);
    if (s.empty()) throw std::invalid_argument("empty value");
    const char* begin = s.c_str();
    char* end = nullptr;
    const double v = std::strtod(begin, &end);
    if (end == begin) throw std::invalid_argument("not a number: '" + s + "'");
    std::string unit = trim(std::string(end));
    if (unit.empty()) return v;
    const auto scale = unit_scale(unit);
    if (!scale) throw std::invalid_argument("unknown unit '" + unit + "'");
    return v * *scale;
}

Config Config::parse_text(const std::string& text) {
    Config cfg;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) throw ConfigError(lineno, "expected 'key = value'");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty()) throw ConfigError(lineno, "empty key");
        try {
            cfg.values_[key] = parse_quantity(value);
        } catch (const std::invalid_argument& e) {
            throw ConfigError(lineno, std::string(e.what()) + " for key '" + key + "'");
        }
        cfg.raw_[key] = value;
    }
    return cfg;
}

Config Config::parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError(0, "cannot open config file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_text(buf.str());
}

std::optional<double> Config::get(const std::string& key) const {
    const auto it = values_.find(key);
    if (it == values_.end()) return std::nullopt;
    return it->second;
}

double Config::get_or(const std::string& key, double fallback) const {
    return get(key).value_or(fallback);
}

double Config::require(const std::string& key) const {
    const auto v = get(key);
    if (!v) throw std::invalid_argument("missing required config key '" + key + "'");
    return *v;
}

std::optional<std::string> Config::get_raw(const std::string& key) const {
    const auto it = raw_.find(key);
    if (it == raw_.end()) return std::nullopt;
    return it->second;
}

}  // namespace nvres
