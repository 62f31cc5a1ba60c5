#pragma once

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "mpsorf/alpha.hpp"
#include "mpsorf/jet.hpp"
#include "mpsorf/measure.hpp"

namespace mpsorf {

/// An analytic self-map of the disk with sup modulus <= 1, evaluable on the
/// closed disk together with as many Taylor coefficients as the backing
/// evaluator can produce. Value semantics, cheap to copy, thread safe.
class SchurFunction {
public:
    cplx operator()(cplx z) const { return jet(z, 1).value(); }

    /// Taylor coefficients of f about `center`, `order` of them. Throws
    /// DerivativeUnavailable when the evaluator cannot reach that order.
    TaylorJet jet(cplx center, int order) const;

    bool boundary_continuous() const;
    std::string kind() const;

    static SchurFunction constant(cplx c);
    static SchurFunction scaled_identity(cplx lambda);  // z -> lambda z

    /// Rational quotient p/q with complex coefficients in ascending order.
    /// Construction validates max |p/q| <= 1 + 1e-9 on a fine circle grid.
    static SchurFunction rational(std::vector<cplx> num, std::vector<cplx> den);

    static SchurFunction product(SchurFunction f, SchurFunction g);
    static SchurFunction compose(SchurFunction outer, SchurFunction inner);

    /// Induced by a measure via schur_from_measure; jets come from
    /// derivative quadratures of the Herglotz transform.
    static SchurFunction from_measure(CircleMeasure mu);

    /// Arbitrary evaluator. `max_order` bounds the jet order it can supply
    /// (-1 for unlimited); boundary continuity is declared by the caller.
    static SchurFunction custom(std::string name,
                                std::function<TaylorJet(cplx, int)> eval,
                                int max_order, bool boundary_continuous);

    struct Impl;
    const std::shared_ptr<const Impl>& impl() const { return impl_; }

private:
    explicit SchurFunction(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
    std::shared_ptr<const Impl> impl_;
};

/// The Schur (Verblunsky) parameters gamma_0 .. gamma_n together with the
/// running products omega_k = prod_{j<=k} (1 - |gamma_j|^2).
class SchurParams {
public:
    explicit SchurParams(std::vector<cplx> gammas);

    int count() const { return static_cast<int>(gammas_.size()); }
    cplx gamma(int k) const { return gammas_[static_cast<std::size_t>(k)]; }
    double omega(int k) const { return omegas_[static_cast<std::size_t>(k)]; }
    const std::vector<cplx>& gammas() const { return gammas_; }

private:
    std::vector<cplx> gammas_;
    std::vector<double> omegas_;
};

/// Runs the multipoint Schur algorithm: gamma_k = f_k(alpha_{k+1}) for
/// k = 0 .. n-1 by forward recurrence of interpolation values. Repeated nodes
/// are resolved exactly by propagating truncated Taylor jets through the
/// rational steps; the jet order is the node multiplicity, so the evaluator
/// must supply derivatives up to multiplicity - 1 at repeated nodes.
/// Throws FiniteBlaschkeDetected when some |gamma_k| >= 1 - 1e-12.
///
/// The chain of interior values is exponentially ill-conditioned when the
/// interpolation points cluster towards the circle (the error grows like the
/// reciprocal of |B_n(alpha_{n+1})|); for such sequences use the grid-assisted
/// overload below.
SchurParams schur_parameters(const SchurFunction& f, const AlphaSequence& alphas, int n);

/// Grid-assisted extraction: the remainder rows are advanced on the circle,
/// where every recurrence factor is unimodular, and gamma_k is read off by a
/// Poisson quadrature of the row at alpha_{k+1}. Spectrally exact for
/// boundary-continuous f once M (1 - |alpha_k|) stays above the resolution
/// guard, and stable at any depth. Points too close to the circle for the
/// grid (margin < 25 nodes) fall back to the interior chain.
SchurParams schur_parameters(const SchurFunction& f, const AlphaSequence& alphas, int n,
                             const CircleGrid& grid);

/// Samples of f at every grid node. Measure-induced functions take a direct
/// boundary route when the grid matches the measure's grid.
std::vector<cplx> schur_boundary_samples(const SchurFunction& f, const CircleGrid& grid);

/// Samples of the remainder f_n at every grid node by the forward recurrence.
/// params must hold gamma_0 .. gamma_{n-1}.
std::vector<cplx> remainder_on_grid(const SchurFunction& f, const AlphaSequence& alphas,
                                    const SchurParams& params, int n,
                                    const CircleGrid& grid);

/// All remainder rows f_0 .. f_{n_max} on the grid at once (each row reuses
/// the previous one).
std::vector<std::vector<cplx>> remainder_chain_on_grid(const SchurFunction& f,
                                                       const AlphaSequence& alphas,
                                                       const SchurParams& params, int n_max,
                                                       const CircleGrid& grid);

/// f_n at a single point of the closed disk, with jet resolution when z
/// coincides with interpolation nodes.
cplx remainder_at(const SchurFunction& f, const AlphaSequence& alphas,
                  const SchurParams& params, int n, cplx z);

struct SchurValidation {
    double max_modulus;
    double min_modulus;
    double max_adjacent_jump;   // boundary-continuity heuristic
    bool finite_blaschke;       // min modulus > 1 - 1e-9 on the grid
    bool pass;                  // max modulus <= 1 + 1e-9
};

SchurValidation validate_schur(const SchurFunction& f, const CircleGrid& grid);

/// Density (1 - |f|^2) / |1 - t f(t)|^2 sampled at the grid nodes. Not
/// normalized: assert `probability` only when the Herglotz measure of f is
/// known to be purely absolutely continuous.
CircleMeasure measure_from_schur(const SchurFunction& f, const CircleGrid& grid,
                                 bool probability = false);

/// Fraction of nodes with density below density_floor (degenerate-density
/// diagnostic for measure_from_schur outputs).
double degenerate_density_fraction(const CircleMeasure& mu);

}  // namespace mpsorf
