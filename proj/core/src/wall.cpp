#include "mpsorf/wall.hpp"

#include <cmath>

#include "mat2.hpp"

namespace mpsorf {

using detail::Mat2;

namespace {

inline WallEval snapshot(const Mat2& m, cplx log_scale, int n) {
    WallEval w;
    w.n = n;
    w.bstar = m.m00;
    w.astar = m.m01;
    w.a = m.m10;
    w.b = m.m11;
    w.log_scale = log_scale;
    if (log_scale != cplx{0.0, 0.0} && std::abs(log_scale.real()) < 300.0) {
        const cplx s = std::exp(log_scale);
        w.a *= s;
        w.b *= s;
        w.astar *= s;
        w.bstar *= s;
        w.log_scale = {0.0, 0.0};
    }
    return w;
}

}  // namespace

std::vector<WallEval> wall_chain(const SchurParams& params, const AlphaSequence& alphas,
                                 int n_max, cplx z) {
    if (params.count() < n_max + 1)
        throw ValidationError("wall_chain: params must hold gamma_0 .. gamma_n");
    std::vector<WallEval> out;
    out.reserve(static_cast<std::size_t>(n_max) + 1);
    Mat2 m{1.0, std::conj(params.gamma(0)), params.gamma(0), 1.0};
    cplx log_scale{0.0, 0.0};
    out.push_back(snapshot(m, log_scale, 0));
    for (int k = 1; k <= n_max; ++k) {
        detail::apply_factor(m, params.gamma(k), zeta(alphas[k], z));
        detail::renormalize(m, log_scale);
        out.push_back(snapshot(m, log_scale, k));
    }
    return out;
}

WallEval wall_eval(const SchurParams& params, const AlphaSequence& alphas, int n, cplx z) {
    return wall_chain(params, alphas, n, z).back();
}

EulerLadder euler_convergents(const SchurParams& params, const AlphaSequence& alphas, int n,
                              cplx z) {
    if (params.count() < n + 1)
        throw ValidationError("euler_convergents: params must hold gamma_0 .. gamma_n");
    EulerLadder lad;
    lad.p.reserve(static_cast<std::size_t>(2 * n + 3));
    lad.q.reserve(static_cast<std::size_t>(2 * n + 3));
    lad.p = {1.0, params.gamma(0)};  // P_{-1}, P_0
    lad.q = {0.0, 1.0};              // Q_{-1}, Q_0
    for (int m = 1; m <= n + 1; ++m) {
        // odd index 2m-1 uses gamma_{m-1} and zeta_m
        const cplx g = params.gamma(m - 1);
        const cplx zf = zeta(alphas[m], z);
        const cplx pm2 = lad.P(2 * m - 2), pm3 = lad.P(2 * m - 3);
        const cplx qm2 = lad.Q(2 * m - 2), qm3 = lad.Q(2 * m - 3);
        lad.p.push_back(std::conj(g) * zf * pm2 + (1.0 - std::norm(g)) * zf * pm3);
        lad.q.push_back(std::conj(g) * zf * qm2 + (1.0 - std::norm(g)) * zf * qm3);
        if (m == n + 1) break;  // ladder ends at index 2n+1
        // even index 2m uses gamma_m
        const cplx gm = params.gamma(m);
        lad.p.push_back(gm * lad.P(2 * m - 1) + lad.P(2 * m - 2));
        lad.q.push_back(gm * lad.Q(2 * m - 1) + lad.Q(2 * m - 2));
    }
    return lad;
}

cplx approximant(const SchurParams& params, const AlphaSequence& alphas, int n, cplx z) {
    const WallEval w = wall_eval(params, alphas, n, z);
    return w.a / w.b;
}

cplx reconstruct_from_eval(const WallEval& w, const AlphaSequence& alphas, cplx z,
                           cplx tail) {
    const cplx zf = zeta(alphas[w.n + 1], z);
    return (w.a + zf * w.bstar * tail) / (w.b + zf * w.astar * tail);
}

cplx reconstruct_f(const SchurParams& params, const AlphaSequence& alphas, int n, cplx z,
                   cplx tail) {
    if (std::abs(tail) > 1.0 + 1e-12)
        throw ValidationError("reconstruct_f: |tail| must be <= 1");
    return reconstruct_from_eval(wall_eval(params, alphas, n, z), alphas, z, tail);
}

}  // namespace mpsorf
