#include "mpsorf/scenario.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>

#include <nlohmann/json.hpp>

#include "mpsorf/svg.hpp"

namespace mpsorf {

namespace {

using nlohmann::json;

void reject_unknown_keys(const json& j, std::initializer_list<const char*> allowed,
                         const std::string& where) {
    for (const auto& [key, _] : j.items()) {
        bool ok = false;
        for (const char* a : allowed)
            if (key == a) ok = true;
        if (!ok) throw ValidationError("config: unknown key '" + key + "' in " + where);
    }
}

cplx parse_complex(const json& j, const std::string& where) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
        throw ValidationError("config: " + where + " must be a [re, im] pair");
    return {j[0].get<double>(), j[1].get<double>()};
}

std::vector<cplx> parse_complex_list(const json& j, const std::string& where) {
    std::vector<cplx> out;
    if (!j.is_array()) throw ValidationError("config: " + where + " must be an array");
    for (std::size_t i = 0; i < j.size(); ++i)
        out.push_back(parse_complex(j[i], where + "[" + std::to_string(i) + "]"));
    return out;
}

FunctionSpec parse_function(const json& j) {
    FunctionSpec fs;
    if (!j.is_object() || !j.contains("kind"))
        throw ValidationError("config: function must be an object with a kind");
    fs.kind = j.at("kind").get<std::string>();
    if (fs.kind == "constant") {
        reject_unknown_keys(j, {"kind", "value"}, "function");
        fs.value = parse_complex(j.at("value"), "function.value");
    } else if (fs.kind == "scaled_identity") {
        reject_unknown_keys(j, {"kind", "lambda"}, "function");
        fs.value = parse_complex(j.at("lambda"), "function.lambda");
    } else if (fs.kind == "rational") {
        reject_unknown_keys(j, {"kind", "num", "den"}, "function");
        fs.num = parse_complex_list(j.at("num"), "function.num");
        fs.den = parse_complex_list(j.at("den"), "function.den");
    } else if (fs.kind == "inner") {
        reject_unknown_keys(j, {"kind", "xi"}, "function");
        fs.value = parse_complex(j.at("xi"), "function.xi");
    } else {
        throw ValidationError("config: unknown function kind '" + fs.kind + "'");
    }
    return fs;
}

AlphaSpec parse_alphas(const json& j) {
    AlphaSpec as;
    if (!j.is_object() || !j.contains("kind"))
        throw ValidationError("config: alphas must be an object with a kind");
    as.kind = j.at("kind").get<std::string>();
    if (as.kind == "classical") {
        reject_unknown_keys(j, {"kind"}, "alphas");
    } else if (as.kind == "radial") {
        reject_unknown_keys(j, {"kind", "xi", "c"}, "alphas");
        if (j.contains("xi")) as.xi = parse_complex(j.at("xi"), "alphas.xi");
        as.c = j.value("c", 1.0);
    } else if (as.kind == "circle") {
        reject_unknown_keys(j, {"kind", "r", "theta_step"}, "alphas");
        as.r = j.value("r", 0.5);
        as.theta_step = j.value("theta_step", 1.0);
    } else if (as.kind == "nontangential") {
        reject_unknown_keys(j, {"kind", "xi", "aperture"}, "alphas");
        if (j.contains("xi")) as.xi = parse_complex(j.at("xi"), "alphas.xi");
        as.aperture = j.value("aperture", 0.5);
    } else if (as.kind == "list") {
        reject_unknown_keys(j, {"kind", "points", "cycle", "divergent"}, "alphas");
        as.points = parse_complex_list(j.at("points"), "alphas.points");
        as.cycle = j.value("cycle", false);
        as.divergent = j.value("divergent", false);
    } else {
        throw ValidationError("config: unknown alpha kind '" + as.kind + "'");
    }
    return as;
}

Arc parse_arc(const json& j, const std::string& where) {
    if (!j.is_array() || j.size() != 2)
        throw ValidationError("config: " + where + " must be [theta1, theta2]");
    Arc a{j[0].get<double>(), j[1].get<double>()};
    if (!(a.theta1 < a.theta2))
        throw ValidationError("config: " + where + " needs theta1 < theta2");
    return a;
}

Scenario parse_scenario(const json& j) {
    reject_unknown_keys(j,
                        {"id", "function", "alphas", "M", "n_max", "diagnostics", "out_dir",
                         "hypotheses", "measure", "boundary_arc", "compact_arc", "lp_p"},
                        "scenario");
    Scenario s;
    try {
        s.id = j.at("id").get<std::string>();
        if (j.contains("function")) s.function = parse_function(j.at("function"));
        s.alphas = parse_alphas(j.at("alphas"));
        s.grid_m = j.at("M").get<int>();
        s.n_max = j.at("n_max").get<int>();
    } catch (const json::exception& e) {
        throw ValidationError(std::string("config: missing or ill-typed field: ") + e.what());
    }
    if (s.id.empty()) throw ValidationError("config: id must be nonempty");
    if (s.n_max < 1) throw ValidationError("config: n_max must be >= 1");
    if (s.grid_m < 256 || (s.grid_m & (s.grid_m - 1)) != 0)
        throw ValidationError("config: M must be a power of two >= 256");
    if (j.contains("diagnostics")) {
        for (const auto& d : j.at("diagnostics")) {
            const std::string kind = d.get<std::string>();
            if (!diagnostic_kinds().count(kind))
                throw ValidationError("config: unknown diagnostic '" + kind + "'");
            s.diagnostics.push_back(kind);
        }
    }
    s.out_dir = j.value("out_dir", std::string("."));
    s.hypotheses = j.value("hypotheses", std::string());
    if (j.contains("measure")) {
        const json& jm = j.at("measure");
        reject_unknown_keys(jm, {"base_function", "ac_weight", "atoms"}, "measure");
        MeasureSpec ms;
        ms.base_function = parse_function(jm.at("base_function"));
        ms.ac_weight = jm.value("ac_weight", 1.0);
        if (!(ms.ac_weight > 0.0 && ms.ac_weight <= 1.0))
            throw ValidationError("config: measure.ac_weight must be in (0, 1]");
        for (const auto& ja : jm.value("atoms", json::array())) {
            reject_unknown_keys(ja, {"theta", "mass"}, "measure.atoms");
            ms.atoms.push_back(
                {std::polar(1.0, ja.at("theta").get<double>()), ja.at("mass").get<double>()});
        }
        s.measure = std::move(ms);
        if (j.contains("function") && s.function.kind != "from_measure")
            throw ValidationError(
                "config: a measure-defined scenario must omit 'function' or set kind "
                "'from_measure'");
        s.function.kind = "from_measure";
    } else if (!j.contains("function")) {
        throw ValidationError("config: 'function' is required unless 'measure' is given");
    }
    if (j.contains("boundary_arc")) s.boundary_arc = parse_arc(j.at("boundary_arc"), "boundary_arc");
    if (j.contains("compact_arc")) s.compact_arc = parse_arc(j.at("compact_arc"), "compact_arc");
    s.lp_p = j.value("lp_p", 2);
    if (s.lp_p < 1) throw ValidationError("config: lp_p must be >= 1");
    return s;
}

}  // namespace

std::vector<Scenario> parse_config(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("config: ") + e.what());
    }
    std::vector<Scenario> out;
    if (j.is_array()) {
        for (const auto& item : j) out.push_back(parse_scenario(item));
    } else {
        out.push_back(parse_scenario(j));
    }
    return out;
}

std::vector<Scenario> load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("config: cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str());
}

Scenario load_config(const std::string& path) {
    auto all = load_config_file(path);
    if (all.size() != 1)
        throw ValidationError("config: expected exactly one scenario in " + path);
    return all.front();
}

AlphaSequence make_alpha_sequence(const AlphaSpec& spec, int count) {
    if (spec.kind == "classical") return AlphaSequence::classical(count);
    if (spec.kind == "radial") return AlphaSequence::radial(count, spec.xi, spec.c);
    if (spec.kind == "circle")
        return AlphaSequence::compact_circle(count, spec.r, spec.theta_step);
    if (spec.kind == "nontangential")
        return AlphaSequence::nontangential(count, spec.xi, spec.aperture);
    if (spec.kind == "list")
        return AlphaSequence::explicit_list(spec.points, spec.divergent, count, spec.cycle);
    throw ValidationError("make_alpha_sequence: unknown kind " + spec.kind);
}

SchurFunction make_schur_function(const FunctionSpec& spec) {
    if (spec.kind == "constant") return SchurFunction::constant(spec.value);
    if (spec.kind == "scaled_identity") return SchurFunction::scaled_identity(spec.value);
    if (spec.kind == "rational") return SchurFunction::rational(spec.num, spec.den);
    if (spec.kind == "inner") {
        const cplx xi = spec.value / std::abs(spec.value);
        auto eval = [xi](cplx center, int order) {
            auto linear = [order](cplx c0, cplx c1) {
                std::vector<cplx> v(static_cast<std::size_t>(std::max(order, 1)),
                                    cplx{0.0, 0.0});
                v[0] = c0;
                if (order > 1) v[1] = c1;
                return TaylorJet(std::move(v));
            };
            // exp((z + xi)/(z - xi)), singular inner with mass at xi
            return jet_exp(linear(center + xi, 1.0) / linear(center - xi, 1.0));
        };
        return SchurFunction::custom("inner", eval, -1, false);
    }
    throw ValidationError("make_schur_function: unsupported kind " + spec.kind);
}

DiagnosticsReport run_scenario(const Scenario& s, const RunOptions& opt) {
    try {
        AlphaSequence alphas = make_alpha_sequence(s.alphas, s.n_max + 3);

        std::vector<double> avoid;
        if (s.function.kind == "inner") avoid.push_back(std::arg(s.function.value));
        if (s.measure)
            for (const Atom& a : s.measure->atoms) avoid.push_back(std::arg(a.position));
        CircleGrid grid = CircleGrid::with_clearance(s.grid_m, avoid);

        std::vector<std::string> warnings;
        std::optional<CircleMeasure> mu;
        std::optional<SchurFunction> f;
        if (s.measure) {
            SchurFunction base = make_schur_function(s.measure->base_function);
            CircleMeasure base_mu = measure_from_schur(base, grid, false);
            const double base_mass = integrate_real(grid, base_mu.density());
            if (!(base_mass > 0.0))
                throw ValidationError("run_scenario: base density has zero mass");
            std::vector<double> density = base_mu.density();
            for (double& d : density) d *= s.measure->ac_weight / base_mass;
            double mass = s.measure->ac_weight;
            for (const Atom& a : s.measure->atoms) mass += a.mass;
            mu.emplace(grid, std::move(density), s.measure->atoms,
                       std::abs(mass - 1.0) <= 1e-9);
            f = SchurFunction::from_measure(*mu);
        } else {
            f = make_schur_function(s.function);
        }

        const SchurValidation v = validate_schur(*f, grid);
        if (!v.pass)
            warnings.push_back("validate_schur: max grid modulus " +
                               std::to_string(v.max_modulus) + " exceeds 1 + 1e-9");
        if (v.finite_blaschke)
            warnings.push_back(
                "validate_schur: |f| = 1 on the whole grid (finite-Blaschke heuristic); "
                "measure-based diagnostics are unavailable");

        DiagnosticsInput in{s.id,     *f, std::move(alphas), grid, s.n_max,
                            mu,       {s.diagnostics.begin(), s.diagnostics.end()}};
        in.lp_p = s.lp_p;
        in.force = opt.force;
        in.jobs = opt.jobs;
        if (s.boundary_arc) in.boundary_arc = *s.boundary_arc;
        if (s.compact_arc) in.compact_arc = *s.compact_arc;

        DiagnosticsReport report = run_diagnostics(in);
        report.warnings.insert(report.warnings.begin(), warnings.begin(), warnings.end());
        return report;
    } catch (const ResolutionRefused&) {
        throw;
    } catch (const Error& e) {
        throw Error("scenario '" + s.id + "': " + e.what());
    }
}

std::string series_to_csv(const ConvergenceSeries& s) {
    std::string out = "n,value\n";
    char buf[64];
    for (const auto& [n, v] : s.values) {
        std::snprintf(buf, sizeof buf, "%d,%.17g\n", n, v);
        out += buf;
    }
    return out;
}

ConvergenceSeries series_from_csv(const std::string& kind, const std::string& text) {
    ConvergenceSeries s;
    s.kind = kind;
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line) || line != "n,value")
        throw ParseError("series_from_csv: bad header");
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto comma = line.find(',');
        if (comma == std::string::npos) throw ParseError("series_from_csv: bad row " + line);
        s.values.emplace_back(std::stoi(line.substr(0, comma)),
                              std::strtod(line.c_str() + comma + 1, nullptr));
    }
    return s;
}

std::string report_to_json(const DiagnosticsReport& report) {
    json j;
    j["scenario"] = report.scenario_id;
    j["grid_m"] = report.grid_m;
    json series = json::object();
    for (const auto& [kind, s] : report.series) {
        json rows = json::array();
        for (const auto& [n, v] : s.values) rows.push_back({n, v});
        series[kind] = rows;
    }
    j["series"] = series;
    json resid = json::object();
    for (const auto& [kind, s] : report.residual_maxima) {
        json rows = json::array();
        for (const auto& [n, v] : s.values) rows.push_back({n, v});
        resid[kind] = rows;
    }
    j["residual_maxima"] = resid;
    j["warnings"] = report.warnings;
    return j.dump(2) + "\n";
}

namespace {

void write_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("emit_outputs: cannot open " + path.string());
    out << content;
    if (!out) throw IoError("emit_outputs: write failed for " + path.string());
}

}  // namespace

std::vector<std::string> emit_outputs(const DiagnosticsReport& report, const Scenario& s,
                                      const std::string& out_dir, bool plots) {
    namespace fs = std::filesystem;
    std::error_code ec;
    fs::create_directories(out_dir, ec);
    if (ec) throw IoError("emit_outputs: cannot create " + out_dir + ": " + ec.message());

    std::vector<std::string> written;
    auto emit_series = [&](const ConvergenceSeries& ser) {
        const fs::path csv = fs::path(out_dir) / (s.id + "." + ser.kind + ".csv");
        write_file(csv, series_to_csv(ser));
        written.push_back(csv.string());
        if (plots) {
            const fs::path svg = fs::path(out_dir) / (s.id + "." + ser.kind + ".svg");
            write_file(svg, render_series_svg(s.id + ": " + ser.kind, ser.values));
            written.push_back(svg.string());
        }
    };
    for (const auto& [_, ser] : report.series) emit_series(ser);
    for (const auto& [_, ser] : report.residual_maxima) emit_series(ser);

    const fs::path jpath = fs::path(out_dir) / (s.id + ".report.json");
    write_file(jpath, report_to_json(report));
    written.push_back(jpath.string());
    return written;
}

Scenario builtin_scenario(const std::string& name) {
    Scenario s;
    s.id = name;
    s.grid_m = 4096;
    s.alphas.kind = "radial";
    s.alphas.xi = {1.0, 0.0};
    s.alphas.c = 1.0;
    if (name == "lebesgue") {
        s.function.kind = "constant";
        s.function.value = {0.0, 0.0};
        s.n_max = 20;
        s.hypotheses = "density 1: divergent gap series, smooth positive density, no atoms";
        return s;
    }
    if (name == "half-z-classical") {
        s.function.kind = "scaled_identity";
        s.function.value = {0.5, 0.0};
        s.alphas.kind = "classical";
        s.n_max = 20;
        s.hypotheses = "f = z/2, alpha_k = 0: compact interpolation points";
        return s;
    }
    if (name == "half-z-radial") {
        s.function.kind = "scaled_identity";
        s.function.value = {0.5, 0.0};
        s.n_max = 40;
        s.hypotheses =
            "f = z/2, alpha_k -> 1 radially: divergent gap series, density smooth and "
            "positive near the accumulation point, no singular part";
        return s;
    }
    if (name == "atom-plus-smooth") {
        MeasureSpec ms;
        ms.base_function.kind = "scaled_identity";
        ms.base_function.value = {0.5, 0.0};
        ms.ac_weight = 0.7;
        ms.atoms = {{std::polar(1.0, std::numbers::pi), 0.3}};
        s.measure = std::move(ms);
        s.function.kind = "from_measure";
        s.n_max = 24;
        s.compact_arc = Arc{std::numbers::pi / 3.0, 2.0 * std::numbers::pi / 3.0};
        s.hypotheses =
            "smooth positive density plus one atom at -1: the singular support stays away "
            "from the accumulation point 1";
        return s;
    }
    if (name == "inner-stress") {
        s.function.kind = "inner";
        s.function.value = {1.0, 0.0};
        s.n_max = 40;
        s.diagnostics = {"remainder_energy", "pseudo_error", "metric_identity", "sup_error"};
        s.hypotheses =
            "singular inner function: |f| = 1 a.e., the density vanishes; remainder energy "
            "must stay bounded away from zero";
        return s;
    }
    throw ValidationError("builtin_scenario: unknown scenario '" + name + "'");
}

std::vector<std::string> builtin_scenario_names() {
    return {"lebesgue", "half-z-classical", "half-z-radial", "atom-plus-smooth",
            "inner-stress"};
}

}  // namespace mpsorf
