#include "hellmann/cli.hpp"

#include "hellmann/bound.hpp"
#include "hellmann/errors.hpp"
#include "hellmann/format.hpp"
#include "hellmann/oracle.hpp"
#include "hellmann/scatter.hpp"
#include "hellmann/table1.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <optional>
#include <sstream>
#include <variant>

namespace hellmann {

namespace {

using json = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct IntRange {
    int lo = 0;
    int hi = 0;
};

struct EnergyGrid {
    double start = 1.0;
    double stop = 1.0;
    int count = 1;
};

struct RunConfig {
    std::string command;
    double a = 1.0;
    double b = 0.0;
    double lambda = 0.0;
    double m = 1.0;
    double hbar = 1.0;
    std::string variant = "radial";
    IntRange n;
    IntRange ell;
    EnergyGrid energy;
    std::string coord = "u";
    std::optional<double> from;
    std::optional<double> to;
    std::optional<int> points;
    bool normalized = false;
    std::string measure = "paper";
    std::string scheme;  // empty: per-command default
    std::string oracle;  // spectrum only: exact | pekeris
    std::string convention = "none";
    bool skip_oracle = false;
    std::string format = "csv";
    std::string output;
};

double parse_double(const std::string& flag, const std::string& text)
{
    const char* begin = text.c_str();
    char* end = nullptr;
    const double v = std::strtod(begin, &end);
    if (text.empty() || *end != '\0' || !std::isfinite(v))
        throw UsageError(flag + ": not a finite number: '" + text + "'");
    return v;
}

int parse_int(const std::string& flag, const std::string& text)
{
    const char* begin = text.c_str();
    char* end = nullptr;
    const long v = std::strtol(begin, &end, 10);
    if (text.empty() || *end != '\0' || v < -1000000 || v > 1000000)
        throw UsageError(flag + ": not an integer: '" + text + "'");
    return static_cast<int>(v);
}

std::vector<std::string> split(const std::string& text, char sep)
{
    std::vector<std::string> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, sep))
        parts.push_back(item);
    if (!text.empty() && text.back() == sep)
        parts.emplace_back();
    return parts;
}

IntRange parse_range(const std::string& flag, const std::string& text)
{
    const auto parts = split(text, ':');
    IntRange r;
    if (parts.size() == 1) {
        r.lo = r.hi = parse_int(flag, parts[0]);
    } else if (parts.size() == 2) {
        r.lo = parse_int(flag, parts[0]);
        r.hi = parse_int(flag, parts[1]);
    } else {
        throw UsageError(flag + ": expected k or lo:hi");
    }
    if (r.lo < 0 || r.hi < r.lo)
        throw UsageError(flag + ": need 0 <= lo <= hi");
    return r;
}

EnergyGrid parse_grid(const std::string& flag, const std::string& text)
{
    const auto parts = split(text, ':');
    EnergyGrid g;
    if (parts.size() == 1) {
        g.start = g.stop = parse_double(flag, parts[0]);
    } else if (parts.size() == 3) {
        g.start = parse_double(flag, parts[0]);
        g.stop = parse_double(flag, parts[1]);
        g.count = parse_int(flag, parts[2]);
        if (g.count < 1)
            throw UsageError(flag + ": count must be >= 1");
    } else {
        throw UsageError(flag + ": expected x or start:stop:count");
    }
    return g;
}

std::string range_text(IntRange r)
{
    return r.lo == r.hi ? std::to_string(r.lo) : std::to_string(r.lo) + ":" + std::to_string(r.hi);
}

std::string grid_text(const EnergyGrid& g)
{
    if (g.count == 1 && g.start == g.stop)
        return format_number(g.start);
    return format_number(g.start) + ":" + format_number(g.stop) + ":" + std::to_string(g.count);
}

std::vector<double> linspace(double start, double stop, int count)
{
    std::vector<double> xs;
    for (int i = 0; i < count; ++i)
        xs.push_back(count == 1 ? start : start + (stop - start) * i / (count - 1));
    return xs;
}

json num(double x)
{
    if (!std::isfinite(x))
        return nullptr;
    return round_sig12(x);
}

json config_to_json(const RunConfig& c)
{
    json j;
    j["command"] = c.command;
    j["a"] = num(c.a);
    j["b"] = num(c.b);
    j["lambda"] = num(c.lambda);
    j["m"] = num(c.m);
    j["hbar"] = num(c.hbar);
    j["variant"] = c.variant;
    j["n"] = range_text(c.n);
    j["ell"] = range_text(c.ell);
    j["E"] = grid_text(c.energy);
    j["coord"] = c.coord;
    j["from"] = c.from ? num(*c.from) : json(nullptr);
    j["to"] = c.to ? num(*c.to) : json(nullptr);
    j["points"] = c.points ? json(*c.points) : json(nullptr);
    j["normalized"] = c.normalized;
    j["measure"] = c.measure;
    j["scheme"] = c.scheme;
    j["oracle"] = c.oracle;
    j["convention"] = c.convention;
    j["skip_oracle"] = c.skip_oracle;
    j["format"] = c.format;
    j["output"] = c.output;
    return j;
}

RunConfig config_from_json(const json& doc)
{
    const json& j = doc.contains("meta") && doc["meta"].contains("config") ? doc["meta"]["config"] : doc;
    if (!j.is_object())
        throw UsageError("config: expected a JSON object");
    RunConfig c;
    auto number = [&](const std::string& key, const json& v) {
        if (!v.is_number())
            throw UsageError("config: '" + key + "' must be a number");
        const double x = v.get<double>();
        if (!std::isfinite(x))
            throw UsageError("config: '" + key + "' must be finite");
        return x;
    };
    auto text = [&](const std::string& key, const json& v) {
        if (!v.is_string())
            throw UsageError("config: '" + key + "' must be a string");
        return v.get<std::string>();
    };
    auto flag = [&](const std::string& key, const json& v) {
        if (!v.is_boolean())
            throw UsageError("config: '" + key + "' must be a boolean");
        return v.get<bool>();
    };
    for (const auto& [key, v] : j.items()) {
        if (key == "command") c.command = text(key, v);
        else if (key == "a") c.a = number(key, v);
        else if (key == "b") c.b = number(key, v);
        else if (key == "lambda") c.lambda = number(key, v);
        else if (key == "m") c.m = number(key, v);
        else if (key == "hbar") c.hbar = number(key, v);
        else if (key == "variant") c.variant = text(key, v);
        else if (key == "n") c.n = parse_range("config n", text(key, v));
        else if (key == "ell") c.ell = parse_range("config ell", text(key, v));
        else if (key == "E") c.energy = parse_grid("config E", text(key, v));
        else if (key == "coord") c.coord = text(key, v);
        else if (key == "from") c.from = v.is_null() ? std::nullopt : std::optional(number(key, v));
        else if (key == "to") c.to = v.is_null() ? std::nullopt : std::optional(number(key, v));
        else if (key == "points")
            c.points = v.is_null() ? std::nullopt : std::optional(static_cast<int>(number(key, v)));
        else if (key == "normalized") c.normalized = flag(key, v);
        else if (key == "measure") c.measure = text(key, v);
        else if (key == "scheme") c.scheme = text(key, v);
        else if (key == "oracle") c.oracle = text(key, v);
        else if (key == "convention") c.convention = text(key, v);
        else if (key == "skip_oracle") c.skip_oracle = flag(key, v);
        else if (key == "format") c.format = text(key, v);
        else if (key == "output") c.output = text(key, v);
        else throw UsageError("config: unknown key '" + key + "'");
    }
    return c;
}

// ---- tabular output ----

using Cell = std::variant<std::monostate, int, double, Complex, std::string, bool>;

struct Table {
    std::vector<std::string> columns; // dotted names nest in JSON
    std::vector<std::vector<Cell>> rows;
    json meta_extra = json::object();
};

std::string csv_cell(const Cell& c)
{
    return std::visit(
        [](const auto& v) -> std::string {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, std::monostate>) return "";
            else if constexpr (std::is_same_v<T, int>) return std::to_string(v);
            else if constexpr (std::is_same_v<T, double>) return format_number(v);
            else if constexpr (std::is_same_v<T, Complex>) return format_complex(v);
            else if constexpr (std::is_same_v<T, bool>) return v ? "true" : "false";
            else return v;
        },
        c);
}

json json_cell(const Cell& c)
{
    return std::visit(
        [](const auto& v) -> json {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, std::monostate>) return nullptr;
            else if constexpr (std::is_same_v<T, double>) return num(v);
            else if constexpr (std::is_same_v<T, Complex>) return json{{"re", num(v.real())}, {"im", num(v.imag())}};
            else return v;
        },
        c);
}

void write_table(std::ostream& os, const Table& t, const RunConfig& cfg)
{
    if (cfg.format == "csv") {
        for (std::size_t i = 0; i < t.columns.size(); ++i)
            os << (i ? "," : "") << t.columns[i];
        os << '\n';
        for (const auto& row : t.rows) {
            for (std::size_t i = 0; i < row.size(); ++i)
                os << (i ? "," : "") << csv_cell(row[i]);
            os << '\n';
        }
        return;
    }
    json doc;
    doc["meta"]["version"] = version;
    doc["meta"]["config"] = config_to_json(cfg);
    for (const auto& [k, v] : t.meta_extra.items())
        doc["meta"][k] = v;
    doc["rows"] = json::array();
    for (const auto& row : t.rows) {
        json obj = json::object();
        for (std::size_t i = 0; i < row.size(); ++i) {
            json* slot = &obj;
            for (const auto& part : split(t.columns[i], '.'))
                slot = &(*slot)[part];
            *slot = json_cell(row[i]);
        }
        doc["rows"].push_back(std::move(obj));
    }
    os << doc.dump(2) << '\n';
}

// ---- commands ----

struct Units {
    PotentialParams params;
    double energy_scale = 1.0; // reported energy = energy_scale * physical energy
};

Units resolve_units(const RunConfig& c, bool m_given, bool hbar_given)
{
    Units u;
    u.params.a = c.a;
    u.params.b = c.b;
    u.params.lambda = c.lambda;
    u.params.mass = c.m;
    u.params.hbar = c.hbar;
    if (c.convention == "table1") {
        if (m_given || hbar_given)
            throw UsageError("--convention table1 fixes --m and --hbar");
        const UnitConvention conv = table1_convention();
        u.params = conv.params(c.a, c.b, c.lambda);
        u.energy_scale = conv.energy_scale;
    } else if (c.convention != "none") {
        throw UsageError("--convention: expected none or table1");
    }
    u.params.validate();
    return u;
}

Variant require_variant(const std::string& name)
{
    auto v = parse_variant(name);
    if (!v)
        throw UsageError("--variant: unknown variant '" + name + "'");
    return *v;
}

ApproxScheme require_scheme(const std::string& flag, const std::string& name)
{
    auto s = parse_scheme(name);
    if (!s)
        throw UsageError(flag + ": unknown scheme '" + name + "'");
    return *s;
}

Table cmd_spectrum(const RunConfig& c, const Units& u)
{
    const Variant v = require_variant(c.variant);
    std::optional<ApproxScheme> oracle;
    if (!c.oracle.empty()) {
        if (v != Variant::RadialHermitian && v != Variant::CoulombLimit)
            throw UsageError("--oracle is only defined for the radial and coulomb variants");
        oracle = require_scheme("--oracle", c.oracle);
    }
    Table t;
    t.columns = {"variant", "n", "ell", "energy", "status", "source"};
    if (oracle)
        t.columns.push_back("oracle_energy");
    for (int n = c.n.lo; n <= c.n.hi; ++n)
        for (int ell = c.ell.lo; ell <= c.ell.hi; ++ell) {
            const SpectrumEntry e = bound_energy(u.params, v, {n, ell});
            std::vector<Cell> row{std::string(to_string(v)), n, ell, u.energy_scale * e.energy,
                                  std::string(to_string(e.status)), std::string(to_string(e.source))};
            if (oracle)
                row.emplace_back(u.energy_scale * numerov_eigen(u.params, {n, ell}, *oracle).energy.real());
            t.rows.push_back(std::move(row));
        }
    return t;
}

Table cmd_wavefunction(const RunConfig& c, const Units& u)
{
    const Variant v = require_variant(c.variant);
    if (c.n.lo != c.n.hi || c.ell.lo != c.ell.hi)
        throw UsageError("wavefunction: --n and --ell must be single values");
    CoordinateKind kind;
    if (c.coord == "u")
        kind = CoordinateKind::MappedU;
    else if (c.coord == "r" || c.coord == "x")
        kind = CoordinateKind::Physical;
    else
        throw UsageError("--coord: expected u, r or x");
    Measure measure;
    if (c.measure == "paper")
        measure = Measure::PaperU;
    else if (c.measure == "physical")
        measure = Measure::PhysicalR;
    else
        throw UsageError("--measure: expected paper or physical");

    const bool mapped = kind == CoordinateKind::MappedU;
    const double from = c.from.value_or(mapped ? 0.05 : 0.1);
    const double to = c.to.value_or(mapped ? 0.95 : 20.0);
    const int points = c.points.value_or(19);
    if (points < 1 || (points == 1 && from != to) || (points > 1 && !(to > from)))
        throw UsageError("wavefunction: need --points >= 2 and --from < --to");

    const QuantumNumbers qn{c.n.lo, c.ell.lo};
    Table t;
    t.columns = {"coordinate", "u", "value", "density"};
    for (double x : linspace(from, to, points)) {
        const Complex uu = mapped ? Complex(x) : map_coordinate(u.params, v, x);
        const Complex psi = wavefunction(u.params, v, qn, x, kind, c.normalized, measure);
        t.rows.push_back({x, uu, psi, std::norm(psi)});
    }
    return t;
}

Table cmd_phase(const RunConfig& c, const Units& u)
{
    if (require_variant(c.variant) != Variant::RadialHermitian)
        throw UsageError("phase is only defined for the radial variant");
    const ApproxScheme scheme = require_scheme("--scheme", c.scheme.empty() ? "pekeris" : c.scheme);
    Table t;
    t.columns = {"E", "ell", "delta", "delta_raw", "branch", "kappa"};
    if (!c.skip_oracle)
        t.columns.insert(t.columns.end(), {"numeric_delta", "mismatch"});
    for (int ell = c.ell.lo; ell <= c.ell.hi; ++ell)
        for (double e : linspace(c.energy.start, c.energy.stop, c.energy.count)) {
            const double phys = e / u.energy_scale;
            const PhaseShiftResult ps = phase_shift(u.params, phys, ell);
            std::vector<Cell> row{e, ell, ps.delta, ps.delta_raw, ps.branch, ps.kappa};
            if (!c.skip_oracle) {
                const double nd = numeric_phase(u.params, phys, ell, scheme);
                row.emplace_back(nd);
                row.emplace_back(std::abs(reduce_mod_pi(nd - ps.delta)));
            }
            t.rows.push_back(std::move(row));
        }
    return t;
}

Table cmd_validate(const RunConfig& c)
{
    const UnitConvention conv = table1_convention();
    const CalibrationResult cal = calibrate_table();
    Table t;
    t.meta_extra["calibration"] = {
        {"convention", cal.index_map},
        {"scale", num(cal.scale)},
        {"energy_scale", num(cal.convention.energy_scale)},
        {"index_map", std::string(to_string(cal.convention.index_map))},
        {"max_deviation", num(cal.max_deviation)},
        {"max_deviation_lambda_0.001", num(cal.max_deviation_0001)},
        {"max_deviation_lambda_0.01", num(cal.max_deviation_001)},
    };
    t.meta_extra["frozen_convention"] = conv.describe();
    t.columns = {"id", "params.a", "params.b", "params.lambda", "params.m", "params.hbar",
                 "qn.table_n", "qn.n", "qn.ell", "table_value", "ref11", "ref28",
                 "analytic_value", "analytic_as_printed", "oracle_exact", "oracle_approx",
                 "deviations.analytic", "deviations.as_printed", "deviations.oracle_exact",
                 "deviations.oracle_approx"};
    const auto opt = [](const std::optional<double>& x) -> Cell {
        if (x)
            return *x;
        return std::monostate{};
    };
    const auto dev = [](const std::optional<double>& x, double ref) -> Cell {
        if (x)
            return std::abs(*x - ref);
        return std::monostate{};
    };
    for (const ValidationRow& v : validate_table(conv, c.skip_oracle)) {
        const PotentialParams p = conv.params(v.row.a, v.row.b, v.row.lambda);
        t.rows.push_back({v.row.id, v.row.a, v.row.b, v.row.lambda, p.mass, p.hbar, v.row.table_n,
                          v.qn.n, v.qn.ell, v.row.present, v.row.ref11, v.row.ref28, v.analytic,
                          v.analytic_printed, opt(v.oracle_exact), opt(v.oracle_approx),
                          std::abs(v.analytic - v.row.present),
                          std::abs(v.analytic_printed - v.row.present),
                          dev(v.oracle_exact, v.row.present), dev(v.oracle_approx, v.row.present)});
    }
    return t;
}

Table cmd_profile(const RunConfig& c)
{
    const ApproxScheme scheme = require_scheme("--scheme", c.scheme.empty() ? "inverse-x" : c.scheme);
    const double from = c.from.value_or(0.1);
    const double to = c.to.value_or(10.0);
    const int points = c.points.value_or(100);
    if (points < 2)
        throw UsageError("approx-profile: --points must be >= 2");
    Table t;
    t.columns = {"r", "exact", "approx", "rel_err"};
    for (const ProfileRow& r : approx_profile(c.lambda, from, to, static_cast<std::size_t>(points), scheme))
        t.rows.push_back({r.r, r.exact, r.approx, r.rel_err});
    return t;
}

std::string one_line(std::string s)
{
    for (char& ch : s)
        if (ch == '\n' || ch == '\r')
            ch = ' ';
    return s;
}

int fail(std::ostream& err, int code, std::string_view kind, const std::string& message)
{
    err << "error: " << kind << ": " << one_line(message) << '\n';
    return code;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Hellmann potential: spectra, wave functions, phase shifts and Table-I validation", "hellmann"};
    app.require_subcommand(0, 1);
    app.fallthrough();
    app.set_version_flag("--version", version);

    std::map<std::string, std::string> values;
    std::map<std::string, CLI::Option*> opts;
    auto text_opt = [&](const std::string& name, const std::string& help) {
        opts[name] = app.add_option("--" + name, values[name], help);
    };
    text_opt("a", "Coulomb strength a");
    text_opt("b", "screened strength b");
    text_opt("lambda", "screening parameter");
    text_opt("m", "mass");
    text_opt("hbar", "reduced Planck constant");
    text_opt("n", "radial index, k or lo:hi");
    text_opt("ell", "angular momentum, k or lo:hi");
    text_opt("E", "energy, x or start:stop:count");
    text_opt("variant", "radial, coulomb, pt1d, nhpt, nonpt1, nonpt2");
    text_opt("coord", "wavefunction grid coordinate: u, r or x");
    text_opt("from", "grid start");
    text_opt("to", "grid end");
    text_opt("points", "grid size");
    text_opt("measure", "normalization measure: paper or physical");
    text_opt("scheme", "approximation: exact, pekeris, inverse-x");
    text_opt("oracle", "spectrum: add Numerov energies for this scheme");
    text_opt("convention", "none or table1");
    text_opt("format", "csv or json");
    text_opt("output", "output file (relative paths go under $HELLMANN_OUTPUT_DIR)");
    std::string config_path;
    app.add_option("--config", config_path, "JSON config, or a previous JSON output");
    bool normalized = false;
    bool skip_oracle = false;
    auto* normalized_flag = app.add_flag("--normalized", normalized, "normalize the radial wave function");
    auto* skip_flag = app.add_flag("--skip-oracle", skip_oracle, "omit Numerov columns");

    const std::vector<std::pair<std::string, std::string>> commands{
        {"spectrum", "bound-state energies over an (n, l) grid"},
        {"wavefunction", "wave function on a coordinate grid"},
        {"phase", "phase shifts over an energy grid"},
        {"validate", "compare against the embedded Table I"},
        {"approx-profile", "exact vs approximated 1/x or 1/r^2"},
    };
    for (const auto& [name, help] : commands)
        app.add_subcommand(name, help);

    std::vector<const char*> argv{"hellmann"};
    for (const auto& a : args)
        argv.push_back(a.c_str());

    try {
        try {
            app.parse(static_cast<int>(argv.size()), argv.data());
        } catch (const CLI::CallForHelp&) {
            out << app.help();
            return exit_ok;
        } catch (const CLI::CallForVersion&) {
            out << version << '\n';
            return exit_ok;
        } catch (const CLI::ParseError& e) {
            throw UsageError(e.what());
        }

        RunConfig cfg;
        if (!config_path.empty()) {
            std::ifstream in(config_path);
            if (!in)
                throw UsageError("--config: cannot read '" + config_path + "'");
            json doc;
            try {
                doc = json::parse(in);
            } catch (const json::exception& e) {
                throw UsageError(std::string("--config: invalid JSON: ") + e.what());
            }
            cfg = config_from_json(doc);
        }
        auto given = [&](const std::string& name) { return opts.at(name)->count() > 0; };
        auto apply_double = [&](const std::string& name, double& dst) {
            if (given(name))
                dst = parse_double("--" + name, values[name]);
        };
        apply_double("a", cfg.a);
        apply_double("b", cfg.b);
        apply_double("lambda", cfg.lambda);
        apply_double("m", cfg.m);
        apply_double("hbar", cfg.hbar);
        if (given("n")) cfg.n = parse_range("--n", values["n"]);
        if (given("ell")) cfg.ell = parse_range("--ell", values["ell"]);
        if (given("E")) cfg.energy = parse_grid("--E", values["E"]);
        if (given("from")) cfg.from = parse_double("--from", values["from"]);
        if (given("to")) cfg.to = parse_double("--to", values["to"]);
        if (given("points")) cfg.points = parse_int("--points", values["points"]);
        const std::pair<const char*, std::string*> text_fields[]{
            {"variant", &cfg.variant}, {"coord", &cfg.coord},   {"measure", &cfg.measure},
            {"scheme", &cfg.scheme},   {"oracle", &cfg.oracle}, {"convention", &cfg.convention},
            {"format", &cfg.format},   {"output", &cfg.output}};
        for (const auto& [name, dst] : text_fields)
            if (given(name))
                *dst = values[name];
        if (normalized_flag->count() > 0) cfg.normalized = normalized;
        if (skip_flag->count() > 0) cfg.skip_oracle = skip_oracle;

        for (auto* sub : app.get_subcommands())
            cfg.command = sub->get_name();
        if (cfg.command.empty())
            throw UsageError("no command given (spectrum, wavefunction, phase, validate, approx-profile)");
        if (cfg.format != "csv" && cfg.format != "json")
            throw UsageError("--format: expected csv or json");

        Table table;
        if (cfg.command == "validate") {
            table = cmd_validate(cfg);
        } else if (cfg.command == "approx-profile") {
            table = cmd_profile(cfg);
        } else {
            const Units units = resolve_units(cfg, given("m"), given("hbar"));
            if (cfg.command == "spectrum")
                table = cmd_spectrum(cfg, units);
            else if (cfg.command == "wavefunction")
                table = cmd_wavefunction(cfg, units);
            else if (cfg.command == "phase")
                table = cmd_phase(cfg, units);
            else
                throw UsageError("unknown command '" + cfg.command + "'");
        }

        if (cfg.output.empty()) {
            write_table(out, table, cfg);
        } else {
            std::filesystem::path path(cfg.output);
            if (const char* dir = std::getenv("HELLMANN_OUTPUT_DIR"); dir && *dir && path.is_relative())
                path = std::filesystem::path(dir) / path;
            std::ofstream file(path);
            if (!file)
                throw IoError("cannot open '" + path.string() + "' for writing");
            write_table(file, table, cfg);
            if (!file)
                throw IoError("write to '" + path.string() + "' failed");
        }
        return exit_ok;
    } catch (const UsageError& e) {
        return fail(err, exit_usage, "usage", e.what());
    } catch (const Error& e) {
        return fail(err, is_numerical(e.kind()) ? exit_numerical : exit_domain, to_string(e.kind()), e.what());
    } catch (const IoError& e) {
        return fail(err, exit_io, "io", e.what());
    } catch (const std::exception& e) {
        return fail(err, exit_numerical, "internal", e.what());
    }
}

} // namespace hellmann
