#pragma once

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "mpsorf/orf.hpp"
#include "mpsorf/szego.hpp"

namespace mpsorf {

/// One convergence functional or identity-residual track, sampled in n.
struct ConvergenceSeries {
    std::string kind;
    std::vector<std::pair<int, double>> values;  // strictly increasing n

    double at(int n) const;
    double max_value() const;
};

struct DiagnosticsReport {
    std::string scenario_id;
    int grid_m = 0;
    std::map<std::string, ConvergenceSeries> series;
    std::map<std::string, ConvergenceSeries> residual_maxima;
    std::vector<std::string> warnings;

    const ConvergenceSeries& get(const std::string& kind) const;
};

/// Closed arc [theta1, theta2] on the circle (angles wrap modulo 2 pi).
struct Arc {
    double theta1;
    double theta2;
    bool contains(double theta) const;
};

/// Everything the diagnostics sweep needs. `enabled` selects series by kind;
/// an empty set enables every series the inputs can support.
struct DiagnosticsInput {
    std::string scenario_id;
    SchurFunction f;
    AlphaSequence alphas;  // materialized through n_max + 2
    CircleGrid grid;
    int n_max = 0;
    std::optional<CircleMeasure> mu;  // derived from f when absent but needed
    std::set<std::string> enabled;
    Arc boundary_arc{-1.5707963267948966, 1.5707963267948966};  // for boundary_uniform_gap
    Arc compact_arc{1.0471975511965976, 5.235987755982988};     // K for the a priori monitor
    std::vector<cplx> pointwise_seq;  // z_n for szego_pointwise_gap; default alpha_n
    /// test functions for weakstar_gap; empty selects the built-in battery
    /// {1, Re t, Im t, Re t^3}
    std::vector<std::function<double(cplx)>> weakstar_testfns;
    int lp_p = 2;
    double guard_ratio = 50.0;
    bool force = false;  // proceed under-resolved (with a warning) instead of refusing
    int jobs = 1;
    int divfmu_max_n = 6;
};

/// Kinds understood by the sweep.
/// series: remainder_energy, pseudo_error, hyperbolic_error, log_defect,
///         lp_error, sup_error, szego_quantity, szego_l2_gap,
///         szego_l2_gap_dual, szego_pointwise_gap, weakstar_gap,
///         apriori_bound, u_bound, boundary_uniform_gap
/// residual maxima: metric_identity, orf_poisson, measure_reconstruction,
///         bridge, divfmu, e7_gap
const std::set<std::string>& diagnostic_kinds();

/// Runs the full Poisson-weighted sweep over n = 0 .. n_max. Pure function of
/// its input; deterministic, independent of the number of jobs.
DiagnosticsReport run_diagnostics(const DiagnosticsInput& in);

}  // namespace mpsorf
