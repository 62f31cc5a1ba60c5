#pragma once

#include <vector>

#include "mpsorf/geometry.hpp"

namespace mpsorf {

/// Truncated Taylor expansion about a fixed (implicit) center. Coefficient
/// c[m] multiplies (z - center)^m. All binary operations truncate to the
/// shorter operand. Division requires a nonzero constant term unless both
/// sides vanish there, in which case the common simple zero is cancelled
/// explicitly via deflate().
class TaylorJet {
public:
    TaylorJet() = default;
    explicit TaylorJet(std::vector<cplx> coeffs) : c_(std::move(coeffs)) {}

    static TaylorJet constant(cplx v, int order) {
        std::vector<cplx> c(static_cast<std::size_t>(order), cplx{0.0, 0.0});
        if (order > 0) c[0] = v;
        return TaylorJet(std::move(c));
    }
    /// The identity map expanded about `center`: [center, 1, 0, ...].
    static TaylorJet variable(cplx center, int order) {
        std::vector<cplx> c(static_cast<std::size_t>(order), cplx{0.0, 0.0});
        if (order > 0) c[0] = center;
        if (order > 1) c[1] = 1.0;
        return TaylorJet(std::move(c));
    }

    int order() const { return static_cast<int>(c_.size()); }
    cplx value() const { return c_.empty() ? cplx{0.0, 0.0} : c_[0]; }
    cplx operator[](int m) const { return c_[static_cast<std::size_t>(m)]; }
    const std::vector<cplx>& coeffs() const { return c_; }

    TaylorJet operator+(const TaylorJet& o) const;
    TaylorJet operator-(const TaylorJet& o) const;
    TaylorJet operator*(const TaylorJet& o) const;
    /// Power-series division; throws DerivativeUnavailable when the
    /// denominator constant term vanishes.
    TaylorJet operator/(const TaylorJet& o) const;

    TaylorJet operator+(cplx s) const;
    TaylorJet operator-(cplx s) const;
    TaylorJet operator*(cplx s) const;

    /// Drops the (assumed zero) constant term and shifts down: the series of
    /// f(z)/(z - center) for f vanishing at the center. Order shrinks by one.
    TaylorJet deflated() const;

    TaylorJet truncated(int order) const;

private:
    std::vector<cplx> c_;
};

inline TaylorJet operator*(cplx s, const TaylorJet& j) { return j * s; }

/// exp of a truncated series, exp(c0) sum (g - c0)^k / k!.
TaylorJet jet_exp(const TaylorJet& g);

}  // namespace mpsorf
