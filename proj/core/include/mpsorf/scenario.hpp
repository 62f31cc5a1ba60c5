#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mpsorf/diagnostics.hpp"

namespace mpsorf {

struct FunctionSpec {
    std::string kind;  // constant | scaled_identity | rational | inner | from_measure
    cplx value{0.0, 0.0};           // constant / scaled_identity / inner xi
    std::vector<cplx> num, den;     // rational
};

struct AlphaSpec {
    std::string kind = "classical";  // classical | radial | circle | nontangential | list
    cplx xi{1.0, 0.0};
    double c = 1.0;
    double r = 0.5;
    double theta_step = 1.0;
    double aperture = 0.5;
    std::vector<cplx> points;
    bool cycle = false;
    bool divergent = false;
};

struct MeasureSpec {
    FunctionSpec base_function;  // supplies the smooth density
    double ac_weight = 1.0;
    std::vector<Atom> atoms;
};

/// A fully described experiment: which Schur function, which interpolation
/// points, at what resolution, and which series to produce.
struct Scenario {
    std::string id;
    FunctionSpec function;
    AlphaSpec alphas;
    int grid_m = 4096;
    int n_max = 1;
    std::vector<std::string> diagnostics;  // empty = automatic selection
    std::string out_dir = ".";
    std::string hypotheses;  // free-text record of the claimed assumptions
    std::optional<MeasureSpec> measure;
    std::optional<Arc> boundary_arc;
    std::optional<Arc> compact_arc;
    int lp_p = 2;
};

/// Parses one scenario object or a list of them from a JSON file.
/// Unknown keys are rejected; invariant violations raise ValidationError
/// naming the offending field.
std::vector<Scenario> load_config_file(const std::string& path);
Scenario load_config(const std::string& path);
std::vector<Scenario> parse_config(const std::string& text);

/// The shipped scenario library: lebesgue, half-z-classical, half-z-radial,
/// atom-plus-smooth, inner-stress.
Scenario builtin_scenario(const std::string& name);
std::vector<std::string> builtin_scenario_names();

struct RunOptions {
    bool force = false;
    int jobs = 1;
    unsigned seed = 0;  // reserved for property sampling; the run itself is deterministic
};

/// Materializes the alpha sequence of a scenario through `count` points.
AlphaSequence make_alpha_sequence(const AlphaSpec& spec, int count);

/// Builds the Schur function of a scenario (and the measure for
/// measure-defined scenarios).
SchurFunction make_schur_function(const FunctionSpec& spec);

/// Runs the whole pipeline f -> gamma -> Wall -> ORF -> diagnostics.
DiagnosticsReport run_scenario(const Scenario& s, const RunOptions& opt = {});

/// Writes one CSV per series (<id>.<kind>.csv, header n,value, 17 significant
/// digits), <id>.report.json, and optionally <id>.<kind>.svg plots.
/// Returns the list of files written.
std::vector<std::string> emit_outputs(const DiagnosticsReport& report, const Scenario& s,
                                      const std::string& out_dir, bool plots);

std::string series_to_csv(const ConvergenceSeries& s);
ConvergenceSeries series_from_csv(const std::string& kind, const std::string& text);
std::string report_to_json(const DiagnosticsReport& report);

}  // namespace mpsorf
