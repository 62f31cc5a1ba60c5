#include "mpsorf/diagnostics.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numbers>
#include <thread>

namespace mpsorf {

double ConvergenceSeries::at(int n) const {
    for (const auto& [k, v] : values)
        if (k == n) return v;
    throw ValidationError("ConvergenceSeries::at: no value for n = " + std::to_string(n) +
                          " in series " + kind);
}

double ConvergenceSeries::max_value() const {
    double m = -std::numeric_limits<double>::infinity();
    for (const auto& [k, v] : values) m = std::max(m, v);
    return m;
}

const ConvergenceSeries& DiagnosticsReport::get(const std::string& kind) const {
    if (auto it = series.find(kind); it != series.end()) return it->second;
    if (auto it = residual_maxima.find(kind); it != residual_maxima.end()) return it->second;
    throw ValidationError("DiagnosticsReport: no series of kind " + kind);
}

bool Arc::contains(double theta) const {
    const double twopi = 2.0 * std::numbers::pi;
    auto wrap = [twopi](double t) {
        t = std::fmod(t, twopi);
        if (t < 0) t += twopi;
        return t;
    };
    const double a = wrap(theta1), b = wrap(theta2), t = wrap(theta);
    if (a <= b) return t >= a && t <= b;
    return t >= a || t <= b;
}

const std::set<std::string>& diagnostic_kinds() {
    static const std::set<std::string> kinds = {
        "remainder_energy", "pseudo_error",   "hyperbolic_error",
        "log_defect",       "lp_error",       "sup_error",
        "szego_quantity",   "szego_l2_gap",   "szego_l2_gap_dual",
        "szego_pointwise_gap", "weakstar_gap", "apriori_bound",
        "u_bound",          "boundary_uniform_gap",
        "metric_identity",  "orf_poisson",    "measure_reconstruction",
        "bridge",           "divfmu",         "e7_gap"};
    return kinds;
}

namespace {

const std::set<std::string> kMeasureKinds = {
    "szego_quantity", "szego_l2_gap", "szego_l2_gap_dual", "szego_pointwise_gap",
    "weakstar_gap",   "apriori_bound", "u_bound",          "boundary_uniform_gap",
    "measure_reconstruction", "divfmu", "e7_gap"};
const std::set<std::string> kSzegoKinds = {"szego_quantity", "szego_l2_gap",
                                           "szego_l2_gap_dual", "szego_pointwise_gap",
                                           "e7_gap"};
const std::set<std::string> kWallKinds = {"pseudo_error", "hyperbolic_error", "lp_error",
                                          "sup_error",    "metric_identity",  "bridge"};
const std::set<std::string> kOrfKinds = {
    "szego_l2_gap", "szego_l2_gap_dual", "weakstar_gap",           "apriori_bound",
    "u_bound",      "boundary_uniform_gap", "orf_poisson",         "measure_reconstruction",
    "bridge",       "divfmu"};

struct Accum {
    // node sums, indexed by n
    std::vector<double> remainder_energy, pseudo, hyper, logdef, lp, l2, l2dual;
    std::vector<std::vector<double>> weakstar;  // [h][n]
    // node maxima, indexed by n
    std::vector<double> sup, metric, poisson_id, reconstruction, bridge, apriori, ubound,
        bgap;
    bool hyper_overflow = false;

    void init(int n_count, std::size_t n_h) {
        const auto n = static_cast<std::size_t>(n_count);
        for (auto* v : {&remainder_energy, &pseudo, &hyper, &logdef, &lp, &l2, &l2dual})
            v->assign(n, 0.0);
        weakstar.assign(n_h, std::vector<double>(n, 0.0));
        for (auto* v : {&sup, &metric, &poisson_id, &reconstruction, &bridge, &apriori,
                        &ubound, &bgap})
            v->assign(n, 0.0);
    }

    void merge(const Accum& o) {
        auto add = [](std::vector<double>& a, const std::vector<double>& b) {
            for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
        };
        auto mx = [](std::vector<double>& a, const std::vector<double>& b) {
            for (std::size_t i = 0; i < a.size(); ++i) a[i] = std::max(a[i], b[i]);
        };
        add(remainder_energy, o.remainder_energy);
        add(pseudo, o.pseudo);
        add(hyper, o.hyper);
        add(logdef, o.logdef);
        add(lp, o.lp);
        add(l2, o.l2);
        add(l2dual, o.l2dual);
        for (std::size_t h = 0; h < weakstar.size(); ++h) add(weakstar[h], o.weakstar[h]);
        mx(sup, o.sup);
        mx(metric, o.metric);
        mx(poisson_id, o.poisson_id);
        mx(reconstruction, o.reconstruction);
        mx(bridge, o.bridge);
        mx(apriori, o.apriori);
        mx(ubound, o.ubound);
        mx(bgap, o.bgap);
        hyper_overflow = hyper_overflow || o.hyper_overflow;
    }
};

ConvergenceSeries make_series(const std::string& kind, int n_from, int n_to,
                              const std::vector<double>& vals) {
    ConvergenceSeries s;
    s.kind = kind;
    for (int n = n_from; n <= n_to; ++n)
        s.values.emplace_back(n, vals[static_cast<std::size_t>(n)]);
    return s;
}

}  // namespace

DiagnosticsReport run_diagnostics(const DiagnosticsInput& in) {
    DiagnosticsReport report;
    report.scenario_id = in.scenario_id;
    report.grid_m = in.grid.size();

    if (in.n_max < 0) throw ValidationError("run_diagnostics: n_max must be >= 0");
    if (in.alphas.size() < in.n_max + 2)
        throw ValidationError("run_diagnostics: alphas must be materialized to n_max + 2");

    std::set<std::string> enabled = in.enabled;
    const bool auto_select = enabled.empty();
    if (auto_select) enabled = diagnostic_kinds();
    for (const std::string& k : enabled)
        if (!diagnostic_kinds().count(k))
            throw ValidationError("run_diagnostics: unknown diagnostic kind " + k);

    // resolution guard: the Poisson kernel at alpha_n needs ~ M (1 - |alpha_n|)
    // nodes under its effective support
    for (int n = 0; n <= in.n_max + 1; ++n) {
        const double margin = in.grid.size() * (1.0 - std::abs(in.alphas[n]));
        if (margin < in.guard_ratio) {
            const std::string msg =
                "M (1 - |alpha_" + std::to_string(n) + "|) = " + std::to_string(margin) +
                " < " + std::to_string(in.guard_ratio) +
                ": the grid cannot resolve the Poisson weight";
            if (!in.force) throw ResolutionRefused(msg + " (pass force to proceed)");
            report.warnings.push_back("under-resolved: " + msg);
        }
    }

    // Schur parameters gamma_0 .. gamma_{n_max}, grid-assisted so deep radial
    // sequences stay well conditioned
    const SchurParams params = schur_parameters(in.f, in.alphas, in.n_max + 1, in.grid);

    // measure-backed state
    const bool need_mu =
        std::any_of(enabled.begin(), enabled.end(),
                    [](const std::string& k) { return kMeasureKinds.count(k) > 0; });
    std::optional<CircleMeasure> mu;
    if (need_mu) {
        if (in.mu) {
            mu = in.mu;
        } else {
            mu = measure_from_schur(in.f, in.grid, false);
            const double degenerate = degenerate_density_fraction(*mu);
            if (degenerate > 0.01) {
                report.warnings.push_back(
                    "degenerate density: " + std::to_string(100.0 * degenerate) +
                    "% of the samples below the floor");
                if (auto_select)
                    for (const std::string& k : kMeasureKinds) enabled.erase(k);
            }
        }
    }

    std::optional<SzegoFunction> szego;
    std::optional<CircleMeasure> mu_dual;
    std::optional<SzegoFunction> szego_dual;
    const bool want_szego =
        std::any_of(enabled.begin(), enabled.end(),
                    [](const std::string& k) { return kSzegoKinds.count(k) > 0; });
    if (want_szego && mu) {
        try {
            szego.emplace(*mu);
            if (szego->clipped_nodes() > 0)
                report.warnings.push_back("szego: clipped " +
                                          std::to_string(szego->clipped_nodes()) +
                                          " density samples at the floor");
        } catch (const NotSzego& e) {
            if (!auto_select) throw;
            report.warnings.push_back(std::string("szego disabled: ") + e.what());
            for (const std::string& k : kSzegoKinds) enabled.erase(k);
        }
    }
    if (enabled.count("szego_l2_gap_dual") && mu) {
        mu_dual = second_kind_measure(*mu);
        szego_dual.emplace(*mu_dual);
    }

    const int n_max = in.n_max;
    const int rows = n_max + 2;  // accumulators indexed 0 .. n_max+1
    const bool need_wall =
        std::any_of(enabled.begin(), enabled.end(),
                    [](const std::string& k) { return kWallKinds.count(k) > 0; });
    const bool need_orf =
        std::any_of(enabled.begin(), enabled.end(),
                    [](const std::string& k) { return kOrfKinds.count(k) > 0; });
    const int orf_top = enabled.count("bridge") ? n_max + 1 : n_max;

    // per-order interior data
    std::vector<double> kappa_n, s_at_alpha_abs, quantity;
    std::vector<cplx> beta, beta_dual;
    if (want_szego && szego) {
        kappa_n.resize(static_cast<std::size_t>(n_max) + 1);
        s_at_alpha_abs.resize(static_cast<std::size_t>(n_max) + 1);
        quantity.resize(static_cast<std::size_t>(n_max) + 1);
        beta.resize(static_cast<std::size_t>(n_max) + 1);
        beta_dual.resize(static_cast<std::size_t>(n_max) + 1);
        for (int n = 0; n <= n_max; ++n) {
            const cplx an = in.alphas[n];
            const OrfEval e = orf_from_params(params, in.alphas, n, an);
            const cplx s = szego->at_interior(an);
            kappa_n[static_cast<std::size_t>(n)] = std::abs(e.phistar);
            s_at_alpha_abs[static_cast<std::size_t>(n)] = std::abs(s);
            quantity[static_cast<std::size_t>(n)] = std::norm(e.phistar) * std::norm(s) *
                                                    (1.0 - std::norm(an));
            const cplx sp = s * e.phistar;
            beta[static_cast<std::size_t>(n)] = sp / std::abs(sp);
            if (szego_dual) {
                const cplx sd = szego_dual->at_interior(an) * e.psistar;
                beta_dual[static_cast<std::size_t>(n)] = sd / std::abs(sd);
            }
        }
    }

    // boundary rows shared by the sweep
    const std::vector<cplx> f_samples = schur_boundary_samples(in.f, in.grid);
    std::vector<cplx> f_boundary_herglotz;  // F_mu at the nodes
    std::vector<cplx> s_boundary, s_dual_boundary;
    if (mu && (enabled.count("u_bound") || enabled.count("boundary_uniform_gap")))
        f_boundary_herglotz = herglotz_boundary_all(*mu);
    if (szego && (enabled.count("szego_l2_gap"))) s_boundary = szego->boundary_samples();
    if (szego_dual) s_dual_boundary = szego_dual->boundary_samples();

    // weak-* test functions; default battery 1, Re t, Im t, Re t^3
    std::vector<std::function<double(cplx)>> testfns = in.weakstar_testfns;
    if (testfns.empty()) {
        testfns = {[](cplx) { return 1.0; }, [](cplx t) { return t.real(); },
                   [](cplx t) { return t.imag(); },
                   [](cplx t) { return std::pow(t, 3).real(); }};
    }
    std::vector<std::vector<double>> h_samples;
    std::vector<double> h_targets;
    if (enabled.count("weakstar_gap") && mu) {
        const int m = in.grid.size();
        for (const auto& h : testfns) {
            std::vector<double> row(static_cast<std::size_t>(m));
            for (int j = 0; j < m; ++j) row[static_cast<std::size_t>(j)] = h(in.grid.node(j));
            std::vector<cplx> vals(row.begin(), row.end());
            std::vector<cplx> at_atoms;
            for (const Atom& a : mu->atoms()) at_atoms.push_back(h(a.position));
            h_targets.push_back(mu->integrate(vals, at_atoms).real());
            h_samples.push_back(std::move(row));
        }
    }

    const int m_nodes = in.grid.size();
    const int n_chunks = 64;
    std::vector<Accum> chunk_acc(static_cast<std::size_t>(n_chunks));
    for (auto& a : chunk_acc) a.init(rows, h_samples.size());

    // phi rows for the interior divfmu probes
    const int div_top = enabled.count("divfmu") ? std::min(in.divfmu_max_n, n_max) : -1;
    std::vector<std::vector<cplx>> phi_rows(
        static_cast<std::size_t>(std::max(div_top + 1, 0)),
        std::vector<cplx>(static_cast<std::size_t>(m_nodes)));

    const double lp_p = static_cast<double>(in.lp_p);

    auto process_chunk = [&](int chunk, Accum& acc) {
        const int lo = static_cast<int>(std::int64_t(chunk) * m_nodes / n_chunks);
        const int hi = static_cast<int>(std::int64_t(chunk + 1) * m_nodes / n_chunks);
        std::vector<cplx> rem(static_cast<std::size_t>(rows));
        for (int j = lo; j < hi; ++j) {
            const cplx t = in.grid.node(j);
            const double theta = in.grid.theta(j);
            const double mu_prime =
                mu ? mu->density()[static_cast<std::size_t>(j)] : 0.0;
            const bool in_k = in.compact_arc.contains(theta);
            const bool in_i = in.boundary_arc.contains(theta);

            // remainder chain f_0 .. f_{n_max+1}
            rem[0] = f_samples[static_cast<std::size_t>(j)];
            for (int k = 0; k < rows - 1; ++k) {
                const cplx g = params.gamma(k);
                rem[static_cast<std::size_t>(k + 1)] =
                    (rem[static_cast<std::size_t>(k)] - g) /
                    ((1.0 - std::conj(g) * rem[static_cast<std::size_t>(k)]) *
                     zeta(in.alphas[k + 1], t));
            }

            std::vector<WallEval> wall;
            if (need_wall) wall = wall_chain(params, in.alphas, n_max, t);
            std::vector<OrfEval> orf;
            if (need_orf) orf = orf_chain(params, in.alphas, orf_top, t);

            cplx blaschke_n{1.0, 0.0};  // B_n(t), updated incrementally
            for (int n = 0; n <= n_max; ++n) {
                const std::size_t un = static_cast<std::size_t>(n);
                const cplx an = in.alphas[n];
                const double pn = poisson_kernel(t, an);
                const double pn1 = poisson_kernel(t, in.alphas[n + 1]);
                if (n >= 1) blaschke_n *= zeta(an, t);

                if (enabled.count("remainder_energy"))
                    acc.remainder_energy[un] += std::norm(rem[un]) * pn;
                if (enabled.count("log_defect")) {
                    const double gap = std::max(1.0 - std::norm(rem[un]), 1e-300);
                    acc.logdef[un] += std::log(gap) * pn;
                }

                if (need_wall) {
                    const cplx ab = wall[un].a / wall[un].b;
                    const double rho = pseudo_hyperbolic(rem[0], ab);
                    if (enabled.count("pseudo_error")) acc.pseudo[un] += rho * rho * pn1;
                    if (enabled.count("hyperbolic_error")) {
                        const double hy = hyperbolic_from_rho(rho);
                        if (std::isinf(hy)) acc.hyper_overflow = true;
                        acc.hyper[un] += hy * hy * pn1;
                    }
                    if (enabled.count("lp_error"))
                        acc.lp[un] += std::pow(std::abs(rem[0] - ab), lp_p) * pn1;
                    if (enabled.count("sup_error"))
                        acc.sup[un] =
                            std::max(acc.sup[un], std::abs(rem[0] - ab) * std::sqrt(pn1));
                    if (enabled.count("metric_identity"))
                        acc.metric[un] = std::max(
                            acc.metric[un], std::abs(rho - std::abs(rem[un + 1])));
                    if (enabled.count("bridge")) {
                        const cplx an1 = in.alphas[n + 1];
                        const cplx c =
                            (1.0 - std::conj(an1) * t) / std::sqrt(1.0 - std::norm(an1));
                        const double sw = std::sqrt(params.omega(n));
                        const cplx lhs1 = t * wall[un].bstar - wall[un].astar;
                        const cplx rhs1 = c * sw * orf[un + 1].phi;
                        const cplx lhs2 = wall[un].b - t * wall[un].a;
                        const cplx rhs2 = c * sw * orf[un + 1].phistar;
                        const double r1 = std::abs(lhs1 - rhs1) /
                                          std::max({std::abs(lhs1), std::abs(rhs1), 1e-30});
                        const double r2 = std::abs(lhs2 - rhs2) /
                                          std::max({std::abs(lhs2), std::abs(rhs2), 1e-30});
                        acc.bridge[un] = std::max(acc.bridge[un], std::max(r1, r2));
                    }
                }

                if (need_orf) {
                    const OrfEval& e = orf[un];
                    if (enabled.count("orf_poisson")) {
                        const cplx lhs = e.phi * e.psistar + e.phistar * e.psi;
                        const cplx rhs = 2.0 * blaschke_n * pn;
                        acc.poisson_id[un] = std::max(
                            acc.poisson_id[un], std::abs(lhs - rhs) / (2.0 * pn));
                    }
                    if (enabled.count("measure_reconstruction")) {
                        const cplx zf = (n >= 1) ? zeta(an, t) : t;
                        const cplx q = 1.0 - zf * (e.phi / e.phistar) * rem[un];
                        const double rec = (1.0 - std::norm(rem[un])) / std::norm(q) * pn /
                                           std::norm(e.phi);
                        acc.reconstruction[un] =
                            std::max(acc.reconstruction[un],
                                     std::abs(mu_prime - rec) / std::max(mu_prime, 1e-13));
                    }
                    if (enabled.count("szego_l2_gap")) {
                        const cplx k_alpha = std::sqrt(1.0 - std::norm(an)) /
                                             (1.0 - std::conj(an) * t);
                        acc.l2[un] += std::norm(s_boundary[static_cast<std::size_t>(j)] *
                                                    e.phistar -
                                                beta[un] * k_alpha);
                    }
                    if (enabled.count("szego_l2_gap_dual")) {
                        const cplx k_alpha = std::sqrt(1.0 - std::norm(an)) /
                                             (1.0 - std::conj(an) * t);
                        acc.l2dual[un] +=
                            std::norm(s_dual_boundary[static_cast<std::size_t>(j)] *
                                          e.psistar -
                                      beta_dual[un] * k_alpha);
                    }
                    if (enabled.count("weakstar_gap"))
                        for (std::size_t h = 0; h < h_samples.size(); ++h)
                            acc.weakstar[h][un] +=
                                h_samples[h][static_cast<std::size_t>(j)] * pn /
                                std::norm(e.phi);
                    if (enabled.count("apriori_bound") && in_k)
                        acc.apriori[un] =
                            std::max(acc.apriori[un], mu_prime * mu_prime * std::norm(e.phi) -
                                                          mu_prime * pn);
                    if (enabled.count("u_bound") && in_k) {
                        const cplx u =
                            (f_boundary_herglotz[static_cast<std::size_t>(j)] *
                                 std::conj(e.phi) -
                             std::conj(e.psi)) /
                            t;
                        acc.ubound[un] = std::max(acc.ubound[un], std::abs(u));
                    }
                    if (enabled.count("boundary_uniform_gap") && in_i)
                        acc.bgap[un] = std::max(
                            acc.bgap[un],
                            std::abs(f_boundary_herglotz[static_cast<std::size_t>(j)] *
                                         e.phistar -
                                     e.psistar));
                    if (div_top >= 0 && n <= div_top)
                        phi_rows[un][static_cast<std::size_t>(j)] = e.phi;
                }
            }
        }
    };

    const int hw = static_cast<int>(std::thread::hardware_concurrency());
    const int n_threads = std::clamp(in.jobs, 1, std::max(1, hw));
    if (n_threads <= 1) {
        for (int c = 0; c < n_chunks; ++c)
            process_chunk(c, chunk_acc[static_cast<std::size_t>(c)]);
    } else {
        std::atomic<int> next{0};
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(n_threads));
        for (int w = 0; w < n_threads; ++w)
            pool.emplace_back([&] {
                for (;;) {
                    const int c = next.fetch_add(1);
                    if (c >= n_chunks) return;
                    process_chunk(c, chunk_acc[static_cast<std::size_t>(c)]);
                }
            });
        for (auto& th : pool) th.join();
    }

    Accum total;
    total.init(rows, h_samples.size());
    for (const Accum& a : chunk_acc) total.merge(a);
    if (total.hyper_overflow)
        report.warnings.push_back(
            "hyperbolic overflow: rho reached 1 - 1e-15 at some node; value is +inf");

    const double inv_m = 1.0 / double(m_nodes);
    auto scaled = [&](const std::vector<double>& v, double p = 1.0) {
        std::vector<double> out(v.size());
        for (std::size_t i = 0; i < v.size(); ++i)
            out[i] = (p == 0.5) ? std::sqrt(v[i] * inv_m) : v[i] * inv_m;
        return out;
    };

    if (enabled.count("remainder_energy"))
        report.series["remainder_energy"] =
            make_series("remainder_energy", 0, n_max, scaled(total.remainder_energy));
    if (enabled.count("pseudo_error"))
        report.series["pseudo_error"] =
            make_series("pseudo_error", 0, n_max, scaled(total.pseudo));
    if (enabled.count("hyperbolic_error"))
        report.series["hyperbolic_error"] =
            make_series("hyperbolic_error", 0, n_max, scaled(total.hyper));
    if (enabled.count("log_defect"))
        report.series["log_defect"] = make_series("log_defect", 0, n_max, scaled(total.logdef));
    if (enabled.count("lp_error"))
        report.series["lp_error"] = make_series("lp_error", 0, n_max, scaled(total.lp));
    if (enabled.count("sup_error"))
        report.series["sup_error"] = make_series("sup_error", 0, n_max, total.sup);
    if (enabled.count("szego_l2_gap"))
        report.series["szego_l2_gap"] =
            make_series("szego_l2_gap", 0, n_max, scaled(total.l2, 0.5));
    if (enabled.count("szego_l2_gap_dual"))
        report.series["szego_l2_gap_dual"] =
            make_series("szego_l2_gap_dual", 0, n_max, scaled(total.l2dual, 0.5));

    if (enabled.count("szego_quantity") && szego) {
        report.series["szego_quantity"] = make_series("szego_quantity", 0, n_max, quantity);
        for (int n = 0; n <= n_max; ++n)
            if (quantity[static_cast<std::size_t>(n)] > 1.0 + 1e-8)
                report.warnings.push_back("szego bound violated at n = " + std::to_string(n));
    }
    if (enabled.count("szego_pointwise_gap") && szego) {
        std::vector<double> pg(static_cast<std::size_t>(n_max) + 1);
        for (int n = 0; n <= n_max; ++n) {
            const cplx zn = in.pointwise_seq.empty()
                                ? cplx(in.alphas[n])
                                : in.pointwise_seq[static_cast<std::size_t>(
                                      std::min<std::size_t>(n, in.pointwise_seq.size() - 1))];
            const cplx an = in.alphas[n];
            const OrfEval e = orf_from_params(params, in.alphas, n, zn);
            const cplx g = szego->at_interior(zn) * e.phistar -
                           beta[static_cast<std::size_t>(n)] *
                               std::sqrt(1.0 - std::norm(an)) / (1.0 - std::conj(an) * zn);
            pg[static_cast<std::size_t>(n)] = std::abs(g) * std::sqrt(1.0 - std::norm(zn));
        }
        report.series["szego_pointwise_gap"] =
            make_series("szego_pointwise_gap", 0, n_max, pg);
    }
    if (enabled.count("weakstar_gap") && mu) {
        std::vector<double> ws(static_cast<std::size_t>(n_max) + 1, 0.0);
        for (int n = 0; n <= n_max; ++n)
            for (std::size_t h = 0; h < h_samples.size(); ++h)
                ws[static_cast<std::size_t>(n)] = std::max(
                    ws[static_cast<std::size_t>(n)],
                    std::abs(total.weakstar[h][static_cast<std::size_t>(n)] * inv_m -
                             h_targets[h]));
        report.series["weakstar_gap"] = make_series("weakstar_gap", 0, n_max, ws);
    }
    if (enabled.count("apriori_bound"))
        report.series["apriori_bound"] = make_series("apriori_bound", 0, n_max, total.apriori);
    if (enabled.count("u_bound"))
        report.series["u_bound"] = make_series("u_bound", 0, n_max, total.ubound);
    if (enabled.count("boundary_uniform_gap"))
        report.series["boundary_uniform_gap"] =
            make_series("boundary_uniform_gap", 0, n_max, total.bgap);

    if (enabled.count("metric_identity"))
        report.residual_maxima["metric_identity"] =
            make_series("metric_identity", 0, n_max, total.metric);
    if (enabled.count("orf_poisson"))
        report.residual_maxima["orf_poisson"] =
            make_series("orf_poisson", 0, n_max, total.poisson_id);
    if (enabled.count("measure_reconstruction"))
        report.residual_maxima["measure_reconstruction"] =
            make_series("measure_reconstruction", 0, n_max, total.reconstruction);
    if (enabled.count("bridge"))
        report.residual_maxima["bridge"] = make_series("bridge", 0, n_max, total.bridge);

    if (div_top >= 0 && mu) {
        std::vector<double> dv(static_cast<std::size_t>(div_top) + 1, 0.0);
        for (int n = 0; n <= div_top; ++n) {
            double worst = 0.0;
            for (int p = 0; p < 20; ++p) {
                const cplx z = 0.6 * std::polar(1.0, 2.0 * std::numbers::pi * (p + 0.37) / 20.0);
                const HerglotzSplit hs = herglotz_split(
                    *mu, phi_rows[static_cast<std::size_t>(n)], params, in.alphas, n, z);
                worst = std::max(worst, std::abs(hs.residual));
            }
            dv[static_cast<std::size_t>(n)] = worst;
        }
        report.residual_maxima["divfmu"] = make_series("divfmu", 0, div_top, dv);
    }

    if (enabled.count("e7_gap") && enabled.count("log_defect") && szego) {
        std::vector<double> e7(static_cast<std::size_t>(n_max) + 1);
        const auto& ld = report.series["log_defect"];
        for (int n = 0; n <= n_max; ++n)
            e7[static_cast<std::size_t>(n)] =
                std::abs(ld.at(n) - std::log(quantity[static_cast<std::size_t>(n)]));
        report.residual_maxima["e7_gap"] = make_series("e7_gap", 0, n_max, e7);
    }

    return report;
}

}  // namespace mpsorf
