#include "swfilm/config.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

#include "CLI11.hpp"

#include "swfilm/csv.hpp" // format_number

namespace swfilm {

namespace {

std::string trim(const std::string& s) {
    size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

double parse_double(const std::string& token, const std::string& what) {
    const std::string t = trim(token);
    if (t.empty()) throw ConfigError(what + ": empty number");
    char* end = nullptr;
    const double v = std::strtod(t.c_str(), &end);
    if (end != t.c_str() + t.size())
        throw ConfigError(what + ": malformed number '" + token + "'");
    return v;
}

long parse_long(const std::string& token, const std::string& what) {
    const std::string t = trim(token);
    if (t.empty()) throw ConfigError(what + ": empty integer");
    char* end = nullptr;
    const long v = std::strtol(t.c_str(), &end, 10);
    if (end != t.c_str() + t.size())
        throw ConfigError(what + ": malformed integer '" + token + "'");
    return v;
}

bool parse_bool(const std::string& token, const std::string& what) {
    std::string t = trim(token);
    std::transform(t.begin(), t.end(), t.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    if (t == "true" || t == "1" || t == "yes" || t == "on") return true;
    if (t == "false" || t == "0" || t == "no" || t == "off") return false;
    throw ConfigError(what + ": expected boolean, got '" + token + "'");
}

// key = value lines, '#' starts a comment, duplicate keys rejected.
std::map<std::string, std::string> read_config_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw ConfigError("cannot read config file: " + path);
    std::map<std::string, std::string> kv;
    std::string line;
    long lineno = 0;
    while (std::getline(f, line)) {
        ++lineno;
        const size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        const std::string text = trim(line);
        if (text.empty()) continue;
        const size_t eq = text.find('=');
        if (eq == std::string::npos)
            throw ConfigError("config file line " + std::to_string(lineno) +
                              ": expected key = value, got '" + text + "'");
        const std::string key = trim(text.substr(0, eq));
        const std::string value = trim(text.substr(eq + 1));
        if (key.empty())
            throw ConfigError("config file line " + std::to_string(lineno) + ": empty key");
        if (kv.count(key))
            throw ConfigError("config file line " + std::to_string(lineno) + ": duplicate key '" +
                              key + "'");
        kv[key] = value;
    }
    return kv;
}

void apply_file_entry(RunConfiguration& cfg, const std::string& key, const std::string& value) {
    const std::string what = "config file key '" + key + "'";
    if (key == "preset") cfg.preset = value;
    else if (key == "omega_p") cfg.omega_p = parse_double(value, what);
    else if (key == "v_f") cfg.v_f = parse_double(value, what);
    else if (key == "eps_coll") cfg.eps_coll = parse_double(value, what);
    else if (key == "eps1") cfg.eps1 = parse_double(value, what);
    else if (key == "eps2") cfg.eps2 = parse_eps2_token(value);
    else if (key == "d_nm") cfg.d_nm = parse_double(value, what);
    else if (key == "theta_deg") cfg.theta_deg = parse_double(value, what);
    else if (key == "omega") cfg.omega_ratio = parse_double(value, what);
    else if (key == "sweep") cfg.sweep = parse_sweep_token(value);
    else if (key == "oracle") cfg.oracle = parse_bool(value, what);
    else if (key == "vf_scale") cfg.vf_scale = parse_double(value, what);
    else if (key == "rel_tol") cfg.rel_tol = parse_double(value, what);
    else if (key == "max_terms") cfg.max_terms = parse_long(value, what);
    else if (key == "output") cfg.output = value;
    else if (key == "config")
        throw ConfigError("config file: nested 'config' key is not allowed");
    else
        throw ConfigError("config file: unknown key '" + key + "'");
}

void check_range(bool ok, const std::string& msg) {
    if (!ok) throw ConfigError(msg);
}

void validate_configuration(const RunConfiguration& cfg) {
    check_range(cfg.preset == "sodium", "unknown preset '" + cfg.preset + "'");
    check_range(cfg.omega_p > 0.0, "omega_p must be positive");
    check_range(cfg.v_f > 0.0 && cfg.v_f < constants::c_cgs,
                "v_f must be positive and below the speed of light");
    check_range(cfg.eps_coll >= 0.0, "eps_coll must be non-negative");
    check_range(cfg.eps1 > 0.0, "eps1 must be positive");
    check_range(cfg.eps2 > 0.0, "eps2 must be positive");
    check_range(cfg.d_nm > 0.0, "d_nm must be positive");
    check_range(cfg.theta_deg >= 0.0 && cfg.theta_deg < 90.0,
                "theta_deg must lie in [0, 90)");
    check_range(cfg.omega_ratio > 0.0, "omega must be positive");
    check_range(cfg.vf_scale > 0.0, "vf_scale must be positive");
    check_range(cfg.rel_tol > 0.0 && cfg.rel_tol < 1.0, "rel_tol must lie in (0, 1)");
    check_range(cfg.max_terms >= 16, "max_terms must be at least 16");
    if (cfg.sweep) validate(*cfg.sweep);
}

} // namespace

AxisRange parse_sweep_token(const std::string& token) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : token) {
        if (c == ':') {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    parts.push_back(cur);
    if (parts.size() != 4)
        throw ConfigError("sweep spec must be axis:start:stop:steps, got '" + token + "'");

    AxisRange r{};
    const std::string axis = trim(parts[0]);
    if (axis == "omega" || axis == "omega_ratio") r.axis = SweepAxis::omega_ratio;
    else if (axis == "d" || axis == "d_nm") r.axis = SweepAxis::d_nm;
    else if (axis == "theta" || axis == "theta_deg") r.axis = SweepAxis::theta_deg;
    else if (axis == "eps2") r.axis = SweepAxis::eps2;
    else throw ConfigError("unknown sweep axis '" + axis + "'");

    r.start = parse_double(parts[1], "sweep start");
    r.stop = parse_double(parts[2], "sweep stop");
    r.steps = parse_long(parts[3], "sweep steps");
    validate(r);
    return r;
}

std::string sweep_token(const AxisRange& range) {
    std::ostringstream os;
    os << axis_name(range.axis) << ':' << format_number(range.start) << ':'
       << format_number(range.stop) << ':' << range.steps;
    return os.str();
}

double parse_eps2_token(const std::string& token) {
    const std::string t = trim(token);
    if (t == "glass") return 4.0;
    if (t == "mica") return 8.0;
    if (t == "ceramic") return 40.0;
    return parse_double(t, "eps2");
}

RunConfiguration parse_config(const std::vector<std::string>& args) {
    CLI::App app{"Thin metal film between two dielectrics: transmittance, reflectance and "
                 "absorptance of an s-polarized wave from a kinetic surface-impedance model"};
    app.set_help_flag("--help,-h", "print usage and exit");

    std::optional<std::string> cli_preset, cli_eps2, cli_sweep, cli_output, cli_config;
    std::optional<double> cli_omega_p, cli_v_f, cli_eps_coll, cli_eps1, cli_d_nm, cli_theta,
        cli_omega, cli_vf_scale, cli_rel_tol;
    std::optional<long> cli_max_terms;
    int oracle_state = -1;

    app.add_option("--preset", cli_preset, "material preset (sodium)");
    app.add_option("--omega-p", cli_omega_p, "plasma frequency, rad/s");
    app.add_option("--v-f", cli_v_f, "Fermi velocity, cm/s");
    app.add_option("--eps-coll", cli_eps_coll, "collision frequency over omega_p");
    app.add_option("--eps1", cli_eps1, "permittivity of the incidence medium");
    app.add_option("--eps2", cli_eps2, "permittivity of the exit medium, or glass|mica|ceramic");
    app.add_option("--d-nm", cli_d_nm, "film thickness, nm");
    app.add_option("--theta-deg", cli_theta, "incidence angle, degrees");
    app.add_option("--omega", cli_omega, "wave frequency over plasma frequency");
    app.add_option("--sweep", cli_sweep, "axis:start:stop:steps, axis one of omega|d|theta|eps2");
    app.add_flag_callback("--oracle", [&] { oracle_state = 1; },
                          "add local Drude slab columns for comparison");
    app.add_flag_callback("--no-oracle", [&] { oracle_state = 0; },
                          "disable the oracle columns");
    app.add_option("--vf-scale", cli_vf_scale, "scale factor applied to v_f (limit testing)");
    app.add_option("--rel-tol", cli_rel_tol, "relative tolerance of the impedance series");
    app.add_option("--max-terms", cli_max_terms, "cap on summed modes per series");
    app.add_option("--output", cli_output, "CSV destination (default: standard output)");
    app.add_option("--config", cli_config, "config file, one key = value per line");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        throw HelpRequested{app.help()};
    } catch (const CLI::ParseError& e) {
        throw ConfigError(e.what());
    }

    RunConfiguration cfg;
    std::map<std::string, std::string> file_kv;
    if (cli_config) file_kv = read_config_file(*cli_config);
    for (const auto& [key, value] : file_kv) apply_file_entry(cfg, key, value);

    if (cli_preset) cfg.preset = *cli_preset;
    if (cli_omega_p) cfg.omega_p = *cli_omega_p;
    if (cli_v_f) cfg.v_f = *cli_v_f;
    if (cli_eps_coll) cfg.eps_coll = *cli_eps_coll;
    if (cli_eps1) cfg.eps1 = *cli_eps1;
    if (cli_eps2) cfg.eps2 = parse_eps2_token(*cli_eps2);
    if (cli_d_nm) cfg.d_nm = *cli_d_nm;
    if (cli_theta) cfg.theta_deg = *cli_theta;
    if (cli_omega) cfg.omega_ratio = *cli_omega;
    if (cli_sweep) cfg.sweep = parse_sweep_token(*cli_sweep);
    if (oracle_state >= 0) cfg.oracle = oracle_state == 1;
    if (cli_vf_scale) cfg.vf_scale = *cli_vf_scale;
    if (cli_rel_tol) cfg.rel_tol = *cli_rel_tol;
    if (cli_max_terms) cfg.max_terms = *cli_max_terms;
    if (cli_output) cfg.output = *cli_output;

    // A preset names plasma-frequency and Fermi-velocity values; explicit
    // flags at the same or a stronger precedence level override them.
    const int preset_level = cli_preset ? 2 : (file_kv.count("preset") ? 1 : 0);
    const int omega_p_level = cli_omega_p ? 2 : (file_kv.count("omega_p") ? 1 : -1);
    const int v_f_level = cli_v_f ? 2 : (file_kv.count("v_f") ? 1 : -1);
    if (cfg.preset == "sodium") {
        const MetalParameters base = sodium();
        if (omega_p_level < preset_level) cfg.omega_p = base.omega_p;
        if (v_f_level < preset_level) cfg.v_f = base.v_f;
    }

    validate_configuration(cfg);
    return cfg;
}

std::string emit_config(const RunConfiguration& cfg) {
    std::ostringstream os;
    os << "preset = " << cfg.preset << '\n';
    os << "omega_p = " << format_number(cfg.omega_p) << '\n';
    os << "v_f = " << format_number(cfg.v_f) << '\n';
    os << "eps_coll = " << format_number(cfg.eps_coll) << '\n';
    os << "eps1 = " << format_number(cfg.eps1) << '\n';
    os << "eps2 = " << format_number(cfg.eps2) << '\n';
    os << "d_nm = " << format_number(cfg.d_nm) << '\n';
    os << "theta_deg = " << format_number(cfg.theta_deg) << '\n';
    os << "omega = " << format_number(cfg.omega_ratio) << '\n';
    if (cfg.sweep) os << "sweep = " << sweep_token(*cfg.sweep) << '\n';
    os << "oracle = " << (cfg.oracle ? "true" : "false") << '\n';
    os << "vf_scale = " << format_number(cfg.vf_scale) << '\n';
    os << "rel_tol = " << format_number(cfg.rel_tol) << '\n';
    os << "max_terms = " << cfg.max_terms << '\n';
    if (!cfg.output.empty()) os << "output = " << cfg.output << '\n';
    return os.str();
}

ModelPoint RunConfiguration::model_point() const {
    return {{omega_p, v_f * vf_scale, eps_coll}, {eps1, eps2, d_nm}, theta_deg, omega_ratio};
}

SeriesControl RunConfiguration::series_control() const {
    return {rel_tol, max_terms};
}

std::optional<SweepSpec> RunConfiguration::sweep_spec() const {
    if (!sweep) return std::nullopt;
    return SweepSpec{*sweep, model_point()};
}

} // namespace swfilm
