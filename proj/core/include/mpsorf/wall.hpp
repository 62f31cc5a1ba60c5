#pragma once

#include <vector>

#include "mpsorf/alpha.hpp"
#include "mpsorf/schur.hpp"

namespace mpsorf {

/// The four Wall rational functions at a point, produced by the transfer
/// matrix product. Entries are stored renormalized: the true values are the
/// stored ones times exp(log_scale). Whenever |Re log_scale| stays moderate
/// the constructor folds the scale back in, so log_scale is 0 in ordinary use
/// and only carries information for very deep products near the circle.
struct WallEval {
    cplx a;      // A_n
    cplx b;      // B_n
    cplx astar;  // A_n^*
    cplx bstar;  // B_n^*
    cplx log_scale{0.0, 0.0};
    int n = 0;

    cplx approximant() const { return a / b; }  // scale cancels
};

/// Evaluates the ordered product
///   prod_{k=n..1} [[1, conj(g_k)], [g_k, 1]] diag(zeta_k(z), 1)
/// times [[1, conj(g_0)], [g_0, 1]], giving [[B_n^*, A_n^*], [A_n, B_n]].
/// params must hold gamma_0 .. gamma_n; |z| <= 1.
WallEval wall_eval(const SchurParams& params, const AlphaSequence& alphas, int n, cplx z);

/// All orders 0 .. n_max at once (same product, snapshot per order).
std::vector<WallEval> wall_chain(const SchurParams& params, const AlphaSequence& alphas,
                                 int n_max, cplx z);

/// The full even/odd convergent ladder of the continued fraction underlying
/// the algorithm. Index i of the vectors holds P_{i-1}, Q_{i-1}, so entries
/// run over k = -1 .. 2n+1; P_{2m} = A_m and Q_{2m} = B_m.
struct EulerLadder {
    std::vector<cplx> p;
    std::vector<cplx> q;
    cplx P(int k) const { return p[static_cast<std::size_t>(k + 1)]; }
    cplx Q(int k) const { return q[static_cast<std::size_t>(k + 1)]; }
    int top_index() const { return static_cast<int>(p.size()) - 2; }
};

EulerLadder euler_convergents(const SchurParams& params, const AlphaSequence& alphas, int n,
                              cplx z);

/// A_n(z) / B_n(z), the Schur approximant of order n.
cplx approximant(const SchurParams& params, const AlphaSequence& alphas, int n, cplx z);

/// (A_n + zeta_{n+1} B_n^* tail) / (B_n + zeta_{n+1} A_n^* tail).
/// With tail = f_{n+1}(z) this reproduces f(z); with tail = 0 it is the
/// approximant.
cplx reconstruct_f(const SchurParams& params, const AlphaSequence& alphas, int n, cplx z,
                   cplx tail);

cplx reconstruct_from_eval(const WallEval& w, const AlphaSequence& alphas, cplx z, cplx tail);

}  // namespace mpsorf
