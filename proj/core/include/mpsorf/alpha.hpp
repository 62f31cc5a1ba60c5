#pragma once

#include <string>
#include <vector>

#include "mpsorf/geometry.hpp"

namespace mpsorf {

/// The interpolation points alpha_0 = 0, alpha_1, alpha_2, ... of the
/// multipoint algorithm, together with generator metadata. The sequence is
/// materialized up to a fixed count at construction; all points satisfy
/// |alpha_k| < 1 - boundary_guard.
class AlphaSequence {
public:
    enum class Generator { Classical, CompactCircle, Radial, Nontangential, ExplicitList };

    /// alpha_k = 0 for every k.
    static AlphaSequence classical(int count);

    /// alpha_k = r exp(i k theta_step) for k >= 1; stays on a compact circle.
    static AlphaSequence compact_circle(int count, double r, double theta_step);

    /// alpha_k = (1 - c/(k+1)) xi for k >= 1, approaching xi radially.
    /// Declared to violate the Blaschke condition (the gap series is harmonic).
    static AlphaSequence radial(int count, cplx xi, double c = 1.0);

    /// alpha_k = xi (1 - r_k exp(i aperture s_k)), r_k = 1/(k+1), s_k = (-1)^k:
    /// a nontangential approach to xi inside a Stolz angle.
    static AlphaSequence nontangential(int count, cplx xi, double aperture);

    /// Points given explicitly; alpha_0 = 0 is prepended when absent.
    /// With cycle = true the list is repeated until `count` points exist.
    static AlphaSequence explicit_list(std::vector<cplx> points, bool declared_divergent,
                                       int count = -1, bool cycle = false);

    int size() const { return static_cast<int>(points_.size()); }
    cplx operator[](int k) const;
    Generator generator() const { return generator_; }
    std::string generator_name() const;

    /// Cached partial sums: gap_sum(n) = sum_{k<=n} (1 - |alpha_k|).
    double gap_sum(int n) const;

    /// Whether the generator analytically yields sum (1 - |alpha_k|) = inf.
    /// This is a declaration carried by the generator, not a finite check.
    bool declared_divergent() const { return declared_divergent_; }

    /// Number of occurrences of the value alpha_k among alpha_1 .. alpha_k.
    /// This is the jet order needed to resolve gamma_{k-1} when nodes repeat.
    int multiplicity_through(int k) const;

private:
    AlphaSequence(std::vector<cplx> pts, Generator g, bool divergent);

    std::vector<cplx> points_;
    std::vector<double> gap_sums_;
    Generator generator_;
    bool declared_divergent_;
};

/// Partial Blaschke product B_{n,i}(z) = prod_{k=i}^{n} zeta_k(z),
/// 1 <= i <= n+1; the empty product (i = n+1) is 1. With i = 1 this is the
/// full partial product B_n.
cplx blaschke_partial(const AlphaSequence& alphas, int i, int n, cplx z);

/// B_n(z) = B_{n,1}(z).
inline cplx blaschke(const AlphaSequence& alphas, int n, cplx z) {
    return blaschke_partial(alphas, 1, n, z);
}

}  // namespace mpsorf
