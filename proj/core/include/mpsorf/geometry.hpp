#pragma once

#include <complex>
#include <limits>

#include "mpsorf/errors.hpp"

namespace mpsorf {

using cplx = std::complex<double>;

/// DiskPoint construction rejects moduli above 1 - boundary_guard: the
/// default grids cannot resolve Poisson kernels concentrated any closer
/// to the circle.
inline constexpr double boundary_guard = 1e-12;

/// A point strictly inside the open unit disk.
class DiskPoint {
public:
    explicit DiskPoint(cplx value) : value_(value) {
        if (!(std::abs(value) < 1.0 - boundary_guard))
            throw ValidationError("DiskPoint: |z| must be < 1 - 1e-12");
    }
    cplx value() const { return value_; }
    operator cplx() const { return value_; }

private:
    cplx value_;
};

/// A point of the unit circle, renormalized to exact unit modulus.
class CirclePoint {
public:
    explicit CirclePoint(cplx value) {
        const double r = std::abs(value);
        if (std::abs(r - 1.0) > 1e-12)
            throw ValidationError("CirclePoint: | |t| - 1 | must be <= 1e-12");
        value_ = value / r;
    }
    static CirclePoint from_angle(double theta) {
        return CirclePoint(std::polar(1.0, theta));
    }
    cplx value() const { return value_; }
    operator cplx() const { return value_; }

private:
    cplx value_;
};

/// Elementary Moebius factor (z - alpha) / (1 - conj(alpha) z).
/// Unimodular on the circle, zero at z = alpha.
inline cplx zeta(cplx alpha, cplx z) {
    const cplx den = 1.0 - std::conj(alpha) * z;
    if (std::abs(den) < 1e-300)
        throw PoleHit("zeta: evaluation at the pole 1/conj(alpha)");
    return (z - alpha) / den;
}

/// Derivative of the elementary factor, (1 - |alpha|^2) / (1 - conj(alpha) z)^2.
inline cplx zeta_derivative(cplx alpha, cplx z) {
    const cplx den = 1.0 - std::conj(alpha) * z;
    if (std::abs(den) < 1e-300)
        throw PoleHit("zeta_derivative: evaluation at the pole 1/conj(alpha)");
    return (1.0 - std::norm(alpha)) / (den * den);
}

/// Pseudohyperbolic distance rho(z, w) = |z - w| / |1 - conj(w) z|, in [0, 1).
inline double pseudo_hyperbolic(cplx z, cplx w) {
    return std::abs(z - w) / std::abs(1.0 - std::conj(w) * z);
}

/// Hyperbolic distance log((1 + rho) / (1 - rho)). Returns +infinity when
/// rho is within 1e-15 of 1.
inline double hyperbolic(cplx z, cplx w) {
    const double rho = pseudo_hyperbolic(z, w);
    if (rho > 1.0 - 1e-15) return std::numeric_limits<double>::infinity();
    return std::log((1.0 + rho) / (1.0 - rho));
}

inline double hyperbolic_from_rho(double rho) {
    if (rho > 1.0 - 1e-15) return std::numeric_limits<double>::infinity();
    return std::log((1.0 + rho) / (1.0 - rho));
}

/// Poisson kernel P(t, w) = (1 - |w|^2) / |t - w|^2 for |t| = 1, |w| < 1.
inline double poisson_kernel(cplx t, cplx w) {
    return (1.0 - std::norm(w)) / std::norm(t - w);
}

}  // namespace mpsorf
