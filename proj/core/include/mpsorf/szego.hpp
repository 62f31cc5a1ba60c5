#pragma once

#include <vector>

#include "mpsorf/measure.hpp"

namespace mpsorf {

/// The outer function S with |S|^2 = density on the circle and S(0) > 0,
/// built from the clipped log-density. Atoms do not contribute.
/// The discrete stand-in for the integrability of log density is the clip
/// statistic: construction throws NotSzego when more than 5% of the nodes
/// had to be clipped. Immutable and safely shared across threads.
class SzegoFunction {
public:
    explicit SzegoFunction(const CircleMeasure& mu);

    /// S(z) for |z| < 1, via quadrature of the Herglotz transform of
    /// log density / 2. Needs M (1 - |z|) >= 50 for full accuracy.
    cplx at_interior(cplx z) const;

    /// Boundary value at a grid node via the conjugate-function route;
    /// |at_node(j)|^2 reproduces the (clipped) density there.
    cplx at_node(int j) const;

    std::vector<cplx> boundary_samples() const;

    double value_at_origin() const { return s0_; }
    int clipped_nodes() const { return clipped_; }
    double clip_fraction() const;

    const CircleGrid& grid() const { return grid_; }

private:
    CircleGrid grid_;
    std::vector<double> half_log_;       // log(max(density, floor)) / 2
    std::vector<double> half_log_conj_;  // its conjugate function
    double s0_;
    int clipped_;
};

}  // namespace mpsorf
