#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mpsorf/grid.hpp"

namespace mpsorf {

struct Atom {
    cplx position;  // unit modulus
    double mass;    // > 0
};

/// Density samples below this floor are treated as vanishing: logarithms clip
/// there and the clip count is reported.
inline constexpr double density_floor = 1e-13;

/// A positive measure on the circle: density samples against normalized
/// Lebesgue measure on the grid nodes plus a finite list of atoms.
/// Immutable after construction.
class CircleMeasure {
public:
    /// Validates the samples; with probability = true the total mass
    /// mean(density) + sum of atom masses must be 1 within 1e-9.
    /// Atom positions must be pairwise distinct and clear of the grid nodes
    /// (use CircleGrid::with_clearance to build a suitable grid).
    CircleMeasure(CircleGrid grid, std::vector<double> density, std::vector<Atom> atoms,
                  bool probability);

    const CircleGrid& grid() const { return grid_; }
    const std::vector<double>& density() const { return density_; }
    const std::vector<Atom>& atoms() const { return atoms_; }
    bool probability() const { return probability_; }
    double total_mass() const { return total_mass_; }

    /// Quadrature of complex samples against the measure: sample mean weighted
    /// by the density plus atom terms supplied by `at_atoms` (values of the
    /// integrand at the atom positions, same order as atoms()).
    cplx integrate(std::span<const cplx> samples, std::span<const cplx> at_atoms = {}) const;

    static CircleMeasure lebesgue(CircleGrid grid);

private:
    CircleGrid grid_;
    std::vector<double> density_;
    std::vector<Atom> atoms_;
    bool probability_;
    double total_mass_;
};

/// Interior Herglotz transform F_mu(z) = int (t+z)/(t-z) dmu(t), Re F > 0.
/// Quadrature resolution requires M (1 - |z|) >= 50; below that the value is
/// still returned but a scenario runner should have warned or refused.
cplx herglotz_interior(const CircleMeasure& mu, cplx z);

/// Boundary values of F_mu at every grid node: density + i (conjugate
/// function of the density) + explicit atom kernels. Spectrally accurate for
/// smooth densities.
std::vector<cplx> herglotz_boundary_all(const CircleMeasure& mu);

/// Boundary value at a single grid node. Throws AtomCollision if the node
/// coincides with an atom position.
cplx herglotz_boundary(const CircleMeasure& mu, int node_index);

/// The Schur function of the measure: f(z) = (F_mu(z) - 1) / (z (F_mu(z) + 1)).
/// At z = 0 the limit value is used (first conjugate Fourier coefficient of mu
/// plus atom contributions) instead of the 0/0 form.
cplx schur_from_measure(const CircleMeasure& mu, cplx z);

/// Measure of 1/F_mu: density Re(1/F_mu) at the nodes, no atoms reconstructed.
/// Intended for a.c. probability measures.
CircleMeasure second_kind_measure(const CircleMeasure& mu);

/// JSON round trip for the documented schema
/// {"M":int,"density":[...],"atoms":[{"theta":..,"mass":..}],"probability":bool}.
std::string measure_to_json(const CircleMeasure& mu);
CircleMeasure measure_from_json(const std::string& text);

}  // namespace mpsorf
