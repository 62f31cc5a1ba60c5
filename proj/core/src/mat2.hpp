#pragma once

#include <algorithm>
#include <cmath>

#include "mpsorf/geometry.hpp"

namespace mpsorf::detail {

struct Mat2 {
    // row-major [[m00, m01], [m10, m11]]
    cplx m00, m01, m10, m11;
};

// left-multiplies M by [[1, conj(g)], [g, 1]] diag(zf, 1)
inline void apply_factor(Mat2& m, cplx g, cplx zf) {
    const cplx t00 = zf * m.m00, t01 = zf * m.m01;
    const cplx n00 = t00 + std::conj(g) * m.m10;
    const cplx n01 = t01 + std::conj(g) * m.m11;
    const cplx n10 = g * t00 + m.m10;
    const cplx n11 = g * t01 + m.m11;
    m = {n00, n01, n10, n11};
}

inline double max_abs(const Mat2& m) {
    return std::max(std::max(std::abs(m.m00), std::abs(m.m01)),
                    std::max(std::abs(m.m10), std::abs(m.m11)));
}

// Scale management for deep products: once an entry leaves [1e-30, 1e30],
// divide by the largest-modulus entry and push its complex log onto the
// accumulated scale.
inline void renormalize(Mat2& m, cplx& log_scale) {
    const double big = max_abs(m);
    if (big < 1e30 && big > 1e-30) return;
    cplx pivot = m.m00;
    for (cplx v : {m.m01, m.m10, m.m11})
        if (std::abs(v) > std::abs(pivot)) pivot = v;
    m.m00 /= pivot;
    m.m01 /= pivot;
    m.m10 /= pivot;
    m.m11 /= pivot;
    log_scale += std::log(pivot);
}

}  // namespace mpsorf::detail
