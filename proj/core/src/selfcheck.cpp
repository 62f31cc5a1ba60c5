#include "mpsorf/selfcheck.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include "mpsorf/diagnostics.hpp"
#include "mpsorf/scenario.hpp"

namespace mpsorf {

namespace {

struct Suite {
    std::vector<CheckResult> results;
    void residual(const std::string& name, double observed, double bound,
                  const std::string& detail = {}) {
        results.push_back({name, observed <= bound, observed, bound, detail});
    }
    void floor(const std::string& name, double observed, double bound,
               const std::string& detail = {}) {
        results.push_back({name, observed >= bound, observed, bound, detail});
    }
};

cplx random_disk(std::mt19937& rng, double rmax) {
    std::uniform_real_distribution<double> ur(0.0, 1.0);
    const double r = rmax * std::sqrt(ur(rng));
    const double th = 2.0 * std::numbers::pi * ur(rng);
    return std::polar(r, th);
}

}  // namespace

std::vector<CheckResult> run_invariant_suite(unsigned seed) {
    Suite suite;
    std::mt19937 rng(seed);
    const CircleGrid grid(4096);
    const SchurFunction half_z = SchurFunction::scaled_identity({0.5, 0.0});

    // --- circle geometry -----------------------------------------------
    {
        double worst = 0.0;
        for (int trial = 0; trial < 20; ++trial) {
            const cplx a = random_disk(rng, 0.95);
            for (int j = 0; j < grid.size(); j += 37)
                worst = std::max(worst, std::abs(std::abs(zeta(a, grid.node(j))) - 1.0));
        }
        suite.residual("zeta unimodular on the circle", worst, 1e-13);
    }
    {
        double worst = 0.0;
        for (int trial = 0; trial < 300; ++trial) {
            const cplx a = random_disk(rng, 0.999), b = random_disk(rng, 0.999),
                       c = random_disk(rng, 0.999);
            worst = std::max(worst, pseudo_hyperbolic(a, c) - pseudo_hyperbolic(a, b) -
                                        pseudo_hyperbolic(b, c));
        }
        suite.residual("pseudohyperbolic triangle inequality", worst, 1e-15);
    }
    {
        double worst = 0.0;
        for (int trial = 0; trial < 50; ++trial) {
            const cplx z = random_disk(rng, 0.9), w = random_disk(rng, 0.9);
            const cplx m = random_disk(rng, 0.9);  // disk automorphism z -> zeta(m, z)
            worst = std::max(worst, std::abs(pseudo_hyperbolic(zeta(m, z), zeta(m, w)) -
                                             pseudo_hyperbolic(z, w)));
        }
        suite.residual("pseudohyperbolic Moebius invariance", worst, 1e-12);
    }
    {
        double worst = 0.0;
        for (int trial = 0; trial < 10; ++trial) {
            const cplx w = random_disk(rng, 1.0 - 10.0 / grid.size());
            long double acc = 0.0L;
            for (const cplx& t : grid.nodes()) acc += poisson_kernel(t, w);
            worst = std::max(worst, std::abs(double(acc / grid.size()) - 1.0));
        }
        suite.residual("Poisson kernel mean value", worst, 1e-10);
    }

    // --- measure and Szego machinery ------------------------------------
    const CircleMeasure mu = measure_from_schur(half_z, grid, true);
    {
        double min_re = std::numeric_limits<double>::infinity();
        for (int i = 0; i < 1000; ++i)
            min_re = std::min(min_re, herglotz_interior(mu, random_disk(rng, 0.95)).real());
        suite.floor("Herglotz transform positivity", min_re, 0.0);
    }
    {
        double worst = 0.0;
        for (int i = 0; i < 100; ++i) {
            const cplx z = random_disk(rng, 0.9);
            worst = std::max(worst, std::abs(schur_from_measure(mu, z) - half_z(z)));
        }
        suite.residual("round trip f -> measure -> f", worst, 1e-8);
    }
    {
        const SzegoFunction s(mu);
        double worst = 0.0;
        for (int j = 0; j < grid.size(); ++j)
            worst = std::max(worst, std::abs(std::norm(s.at_node(j)) - mu.density()[j]) /
                                        mu.density()[j]);
        suite.residual("outer function modulus reproduces the density", worst, 1e-6);

        const CircleMeasure mu2 = second_kind_measure(mu);
        const SzegoFunction s2(mu2);
        const std::vector<cplx> f_bnd = herglotz_boundary_all(mu);
        double worst_q = 0.0;
        for (int j = 0; j < grid.size(); ++j) {
            const cplx q = s.at_node(j) / s2.at_node(j);
            worst_q = std::max(worst_q, std::abs(q - f_bnd[static_cast<std::size_t>(j)]) /
                                            std::abs(f_bnd[static_cast<std::size_t>(j)]));
        }
        suite.residual("Herglotz transform equals the outer-function quotient", worst_q,
                       1e-6);
    }

    // --- Schur engine -----------------------------------------------------
    const AlphaSequence radial = AlphaSequence::radial(24, {1.0, 0.0});
    const SchurParams params = schur_parameters(half_z, radial, 23);
    {
        const auto rows = remainder_chain_on_grid(half_z, radial, params, 20, grid);
        double worst = 0.0;
        for (const auto& row : rows)
            for (const cplx& v : row) worst = std::max(worst, std::abs(v));
        suite.residual("remainders stay Schur on the grid", worst, 1.0 + 1e-8);
    }
    {
        const CircleGrid coarse(4096), fine(8192);
        double worst = 0.0;
        // gamma extraction never touches the grid; nothing to compare except
        // through the measure route, so re-derive f from measures at two
        // resolutions and extract at both
        const SchurFunction f1 = SchurFunction::from_measure(
            measure_from_schur(half_z, coarse, true));
        const SchurFunction f2 =
            SchurFunction::from_measure(measure_from_schur(half_z, fine, true));
        const SchurParams p1 = schur_parameters(f1, radial, 10);
        const SchurParams p2 = schur_parameters(f2, radial, 10);
        for (int k = 0; k < 10; ++k)
            worst = std::max(worst, std::abs(p1.gamma(k) - p2.gamma(k)));
        suite.residual("Schur parameters stable under grid doubling", worst, 1e-9);
    }
    {
        double worst = 0.0;
        const auto rows = remainder_chain_on_grid(half_z, radial, params, 4, grid);
        for (int j = 0; j < grid.size(); j += 17) {
            const cplx t = grid.node(j);
            const cplx rec = reconstruct_f(params, radial, 3, t,
                                           rows[4][static_cast<std::size_t>(j)]);
            worst = std::max(worst, std::abs(rec - half_z(t)));
        }
        suite.residual("tail reconstruction reproduces f", worst, 1e-9);
    }

    // --- Wall functions ---------------------------------------------------
    {
        std::uniform_real_distribution<double> ur(0.0, 1.0);
        double worst_two_path = 0.0, worst_det = 0.0, worst_schur = 0.0, worst_odd = 0.0;
        for (int trial = 0; trial < 12; ++trial) {
            const int n = 1 + int(ur(rng) * 29.0);
            std::vector<cplx> gs;
            std::vector<cplx> as{{0.0, 0.0}};
            for (int k = 0; k <= n; ++k) {
                gs.push_back(random_disk(rng, 0.9));
                as.push_back(random_disk(rng, 0.95));
            }
            const SchurParams p(gs);
            const AlphaSequence alphas =
                AlphaSequence::explicit_list(as, false, n + 2, false);
            for (int rep = 0; rep < 6; ++rep) {
                const cplx z = (rep % 2 == 0) ? std::polar(1.0, 2.0 * std::numbers::pi * ur(rng))
                                              : random_disk(rng, 0.99);
                const WallEval w = wall_eval(p, alphas, n, z);
                const EulerLadder lad = euler_convergents(p, alphas, n, z);
                const double scale = std::max(std::abs(w.a), std::abs(w.b));
                worst_two_path = std::max(
                    worst_two_path,
                    std::max(std::abs(w.a - lad.P(2 * n)), std::abs(w.b - lad.Q(2 * n))) /
                        scale);
                // odd-index relation P_{2n+1} = zeta_{n+1} Q_{2n}^*
                worst_odd = std::max(worst_odd,
                                     std::abs(lad.P(2 * n + 1) -
                                              zeta(alphas[n + 1], z) * w.bstar) /
                                         std::max(std::abs(lad.P(2 * n + 1)), 1e-30));
                const cplx det = w.b * w.bstar - w.a * w.astar;
                const cplx expected = blaschke(alphas, n, z) * p.omega(n);
                worst_det = std::max(
                    worst_det,
                    std::abs(det - expected) /
                        std::max(std::abs(w.b * w.bstar), std::abs(expected)));
                if (std::abs(z) <= 1.0)
                    worst_schur = std::max({worst_schur, std::abs(w.a / w.b),
                                            std::abs(w.astar / w.b)});
            }
        }
        suite.residual("two-path Wall equivalence", worst_two_path, 1e-10);
        suite.residual("odd Euler ladder identity", worst_odd, 1e-10);
        suite.residual("Wall determinant identity", worst_det, 1e-10);
        suite.residual("Wall quotients stay Schur", worst_schur, 1.0 + 1e-10);
    }
    {
        // boundary error and metric identities on the circle
        const auto rows = remainder_chain_on_grid(half_z, radial, params, 13, grid);
        double worst_err = 0.0, worst_metric = 0.0;
        for (int n = 0; n <= 12; ++n) {
            for (int j = 0; j < grid.size(); j += 29) {
                const cplx t = grid.node(j);
                const cplx f_t = rows[0][static_cast<std::size_t>(j)];
                const cplx tail = rows[static_cast<std::size_t>(n + 1)]
                                      [static_cast<std::size_t>(j)];
                const cplx ab = approximant(params, radial, n, t);
                worst_err = std::max(
                    worst_err, std::abs(std::abs(f_t - ab) -
                                        std::abs(tail) * std::abs(1.0 - ab * std::conj(f_t))));
                worst_metric = std::max(worst_metric,
                                        std::abs(pseudo_hyperbolic(f_t, ab) - std::abs(tail)));
            }
        }
        suite.residual("boundary error identity", worst_err, 1e-9);
        suite.residual("pointwise metric identity", worst_metric, 1e-9);
    }

    // --- orthogonal rational functions ------------------------------------
    {
        const AlphaSequence cyc = AlphaSequence::explicit_list(
            {{0.0, 0.0}, {0.3, 0.0}, {0.0, 0.5}, {-0.4, 0.0}}, false, 14, true);
        const GramSchmidtResult gs = orf_gram_schmidt(mu, cyc, 12);
        const SchurParams pc = schur_parameters(half_z, cyc, 13);
        double worst = 0.0;
        for (int k = 1; k <= 12; ++k)
            worst = std::max(worst, std::abs(gs.geronimus.gamma_tilde(k) - pc.gamma(k - 1)));
        suite.residual("Geronimus equality (cycled points)", worst, 1e-7);

        // orthonormality of the Gram-Schmidt output
        double worst_orth = 0.0;
        std::vector<std::vector<cplx>> vals;
        for (const auto& c : gs.coeffs) {
            std::vector<cplx> row(static_cast<std::size_t>(grid.size()));
            for (int j = 0; j < grid.size(); ++j)
                row[static_cast<std::size_t>(j)] = orf_coeffs_eval(c, cyc, grid.node(j));
            vals.push_back(std::move(row));
        }
        for (std::size_t i = 0; i < vals.size(); ++i)
            for (std::size_t k = 0; k <= i; ++k) {
                std::vector<cplx> prod(vals[i].size());
                for (std::size_t j = 0; j < vals[i].size(); ++j)
                    prod[j] = vals[i][j] * std::conj(vals[k][j]);
                const cplx ip = mu.integrate(prod, {});
                worst_orth = std::max(worst_orth,
                                      std::abs(ip - ((i == k) ? cplx{1.0, 0.0} : cplx{})));
            }
        suite.residual("discrete orthonormality of the ORFs", worst_orth, 1e-7);

        // transfer route agrees with Gram-Schmidt
        double worst_cross = 0.0;
        for (int n = 0; n <= 12; ++n)
            for (int j = 0; j < grid.size(); j += 83) {
                const OrfEval e = orf_from_params(pc, cyc, n, grid.node(j));
                worst_cross =
                    std::max(worst_cross,
                             std::abs(e.phi - vals[static_cast<std::size_t>(n)]
                                                  [static_cast<std::size_t>(j)]));
            }
        suite.residual("transfer matrix matches Gram-Schmidt", worst_cross, 1e-7);
    }
    {
        // zero-freeness and the Schur property of phi/phi*
        double worst_ratio = 0.0;
        double min_phistar = std::numeric_limits<double>::infinity();
        for (int i = 0; i < 200; ++i) {
            const cplx z = random_disk(rng, 0.97);
            const OrfEval e = orf_from_params(params, radial, 9, z);
            min_phistar = std::min(min_phistar, std::abs(e.phistar));
            worst_ratio = std::max(worst_ratio, std::abs(e.phi / e.phistar));
        }
        suite.floor("phi* zero-free in the disk", min_phistar, 1e-12);
        suite.residual("phi/phi* strictly Schur inside", worst_ratio, 1.0);
    }
    {
        // reweighted orthonormality at order n: quadrature of P(.,a_n)^2/|phi_n|^2
        // equals the mu-integral of P(.,a_n)
        const int n = 10;
        const cplx an = radial[n];
        std::vector<cplx> lhs(static_cast<std::size_t>(grid.size()));
        std::vector<cplx> rhs(static_cast<std::size_t>(grid.size()));
        for (int j = 0; j < grid.size(); ++j) {
            const cplx t = grid.node(j);
            const OrfEval e = orf_from_params(params, radial, n, t);
            const double p = poisson_kernel(t, an);
            lhs[static_cast<std::size_t>(j)] = p * p / std::norm(e.phi);
            rhs[static_cast<std::size_t>(j)] = p;
        }
        const double left = integrate(grid, lhs).real();
        const double right = mu.integrate(rhs, {}).real();
        suite.residual("reweighted quadrature identity", std::abs(left - right) / right,
                       1e-6);
    }
    {
        // kappa extremal property: random competitors with xi(alpha_n) = 1
        const int n = 6;
        const double kap = kappa(params, radial, n);
        const OrfEval at_alpha = orf_from_params(params, radial, n, radial[n]);
        const std::size_t m = static_cast<std::size_t>(grid.size());
        std::vector<cplx> base(m), bump1(m), bump2(m);
        const cplx bn_at = blaschke_partial(radial, 1, n, radial[n]);
        const cplx bn1_at = blaschke_partial(radial, 1, n - 1, radial[n]);
        for (int j = 0; j < grid.size(); ++j) {
            const cplx t = grid.node(j);
            base[static_cast<std::size_t>(j)] =
                orf_from_params(params, radial, n, t).phistar / at_alpha.phistar;
            bump1[static_cast<std::size_t>(j)] = blaschke_partial(radial, 1, n, t) - bn_at;
            bump2[static_cast<std::size_t>(j)] =
                blaschke_partial(radial, 1, n - 1, t) - bn1_at;
        }
        double min_norm = std::numeric_limits<double>::infinity();
        std::vector<cplx> sq(m);
        for (int trial = 0; trial < 100; ++trial) {
            const cplx c1 = 0.3 * random_disk(rng, 1.0), c2 = 0.3 * random_disk(rng, 1.0);
            for (std::size_t j = 0; j < m; ++j)
                sq[j] = std::norm(base[j] + c1 * bump1[j] + c2 * bump2[j]);
            min_norm = std::min(min_norm, std::sqrt(mu.integrate(sq, {}).real()));
        }
        suite.floor("kappa extremal problem", min_norm, 1.0 / kap - 1e-9);
    }

    // --- functional identities across the diagnostics ----------------------
    {
        const Scenario sc = builtin_scenario("half-z-radial");
        DiagnosticsReport rep = run_scenario(sc, {});
        const auto& re = rep.get("remainder_energy");
        const auto& pe = rep.get("pseudo_error");
        double worst_shift = 0.0;
        for (int n = 0; n + 1 <= 40; ++n)
            worst_shift = std::max(worst_shift, std::abs(pe.at(n) - re.at(n + 1)));
        suite.residual("pseudo error equals shifted remainder energy", worst_shift, 1e-10);

        suite.residual("e7 harmonic identity", rep.get("e7_gap").max_value(), 1e-6);

        const auto& lp = rep.get("lp_error");
        double worst_chain = 0.0;
        for (int n = 0; n + 1 <= 40; ++n)
            worst_chain = std::max(worst_chain, lp.at(n) - 4.0 * re.at(n + 1));
        suite.residual("squared error dominated by remainder energy", worst_chain, 1e-12);

        suite.residual("Szego quantity bound", rep.get("szego_quantity").max_value(),
                       1.0 + 1e-8);
        const auto& he = rep.get("hyperbolic_error");
        double worst_dom = 0.0;
        for (int n = 0; n <= 40; ++n)
            worst_dom = std::max(worst_dom, 4.0 * pe.at(n) - he.at(n));
        suite.residual("hyperbolic error dominates pseudo error", worst_dom, 1e-12);
    }
    {
        const Scenario sc = builtin_scenario("inner-stress");
        DiagnosticsReport rep = run_scenario(sc, {});
        double floor_val = std::numeric_limits<double>::infinity();
        for (const auto& [n, v] : rep.get("remainder_energy").values)
            floor_val = std::min(floor_val, v);
        suite.floor("inner stress energy floor", floor_val, 0.1);
    }

    return suite.results;
}

}  // namespace mpsorf
