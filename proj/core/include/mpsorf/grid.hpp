#pragma once

#include <span>
#include <vector>

#include "mpsorf/geometry.hpp"

namespace mpsorf {

/// Uniform grid t_j = exp(i (2 pi j / M + phase)) on the unit circle.
/// M is a power of two, at least 256, so transform-based conjugation applies.
class CircleGrid {
public:
    explicit CircleGrid(int m, double phase = 0.0);

    /// Grid with the phase chosen away from the given directions: if any of
    /// them lands within 1e-9 of a node, the grid is rotated by half a node
    /// spacing.
    static CircleGrid with_clearance(int m, std::span<const double> thetas);

    int size() const { return m_; }
    double phase() const { return phase_; }
    double spacing() const { return spacing_; }
    cplx node(int j) const { return nodes_[static_cast<std::size_t>(j)]; }
    double theta(int j) const { return phase_ + spacing_ * j; }
    std::span<const cplx> nodes() const { return nodes_; }

    bool operator==(const CircleGrid& o) const {
        return m_ == o.m_ && phase_ == o.phase_;
    }

private:
    int m_;
    double phase_;
    double spacing_;
    std::vector<cplx> nodes_;
};

/// Trapezoid rule on the uniform periodic grid: the plain sample mean,
/// spectrally accurate for smooth integrands. Accumulates in extended
/// precision so large grids keep ~1e-15 relative error.
cplx integrate(const CircleGrid& grid, std::span<const cplx> samples);
double integrate_real(const CircleGrid& grid, std::span<const double> samples);

}  // namespace mpsorf
