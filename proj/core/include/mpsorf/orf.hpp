#pragma once

#include <vector>

#include "mpsorf/measure.hpp"
#include "mpsorf/wall.hpp"

namespace mpsorf {

/// First- and second-kind orthogonal rational functions at a point.
/// log_scale as in WallEval (normally folded back to 0).
struct OrfEval {
    cplx phi;
    cplx phistar;
    cplx psi;
    cplx psistar;
    cplx log_scale{0.0, 0.0};
    int n = 0;
};

/// Coefficients of phi_n in the basis B_0 .. B_n; the leading coefficient is
/// kappa_n = conj(phi_n^*(alpha_n)).
struct OrfCoeffs {
    int n = 0;
    std::vector<cplx> a;

    cplx leading() const { return a.back(); }
};

/// Geronimus parameters extracted degree by degree, with the auxiliary
/// phase data of each normalization step.
struct GeronimusParams {
    std::vector<cplx> gammas_tilde;     // gamma~_1 .. gamma~_n
    std::vector<cplx> etas;             // eta_k = (1 - a_k conj(a_{k-1}))/(1 - conj(a_k) a_{k-1})
    std::vector<cplx> lambda_residual;  // lambda_k recomputed after phase fixing (should be 1)

    cplx gamma_tilde(int k) const { return gammas_tilde[static_cast<std::size_t>(k - 1)]; }
    int count() const { return static_cast<int>(gammas_tilde.size()); }
};

/// Transfer-matrix evaluation of (phi_n, psi_n, phi_n^*, psi_n^*) from Schur
/// parameters, using gamma~_k = gamma_{k-1}. params must hold at least
/// gamma_0 .. gamma_{n-1}; |z| <= 1.
OrfEval orf_from_params(const SchurParams& params, const AlphaSequence& alphas, int n,
                        cplx z);

/// All orders 0 .. n_max at once.
std::vector<OrfEval> orf_chain(const SchurParams& params, const AlphaSequence& alphas,
                               int n_max, cplx z);

struct GramSchmidtResult {
    std::vector<OrfCoeffs> coeffs;  // phi_0 .. phi_n
    GeronimusParams geronimus;
    double gram_condition = 0.0;  // condition estimate of the raw basis Gram matrix
};

/// Orthonormalizes B_0 .. B_n in L^2(mu) by modified Gram-Schmidt with one
/// reorthogonalization pass, then fixes phases sequentially so lambda_k = 1
/// (phi_0 = +1). Throws RankDeficient when the Gram matrix condition exceeds
/// 1e12, reporting the smallest offending degree.
GramSchmidtResult orf_gram_schmidt(const CircleMeasure& mu, const AlphaSequence& alphas,
                                   int n);

/// Evaluates a coefficient vector: g(z) = sum a_j B_j(z).
cplx orf_coeffs_eval(const OrfCoeffs& c, const AlphaSequence& alphas, cplx z);

/// Evaluates the star conjugate from coefficients:
/// g*(z) = sum conj(a_j) B_{n, j+1}(z).
cplx orf_coeffs_eval_star(const OrfCoeffs& c, const AlphaSequence& alphas, cplx z);

/// Coefficients of g* in the B_0 .. B_n basis, by evaluation on n+1 distinct
/// circle nodes and a dense solve. The star operation is an involution.
OrfCoeffs star_in_basis(const OrfCoeffs& c, const AlphaSequence& alphas);

/// Second-kind function by the explicit integral:
/// psi_n(z) = int (t+z)/(t-z) (phi_n(t) - phi_n(z)) dmu(t) for n >= 1, with
/// the convention psi_0 = 1. phi(z) is recovered from the grid samples by the
/// Cauchy integral; atom values by trigonometric interpolation.
cplx psi_integral(const CircleMeasure& mu, std::span<const cplx> phi_samples, int n, cplx z);

/// u_n(z) = 2 int (phi_n)_*(t) dmu(t) / (t - z) for z in the disk.
cplx u_n_eval(const CircleMeasure& mu, std::span<const cplx> phi_samples, cplx z);

struct HerglotzSplit {
    cplx u;         // u_n(z)
    cplx residual;  // F_mu - psi_n^*/phi_n^* - z B_n u_n / phi_n^*
};

/// Splits the Herglotz transform against the order-n ORFs and reports the
/// defect of the decomposition at z.
HerglotzSplit herglotz_split(const CircleMeasure& mu, std::span<const cplx> phi_samples,
                             const SchurParams& params, const AlphaSequence& alphas, int n,
                             cplx z);

struct BridgeResiduals {
    double r_phi;      // z B_n^* - A_n^* vs phi_{n+1}
    double r_phistar;  // B_n - z A_n vs phi_{n+1}^*
    double r_moebius;  // psi_{n+1}^*/phi_{n+1}^* vs (1 + z A_n/B_n)/(1 - z A_n/B_n)
};

/// Relative residuals of the identities connecting Wall functions of order n
/// with the ORFs of order n+1. params must hold gamma_0 .. gamma_n.
BridgeResiduals wall_orf_bridge(const SchurParams& params, const AlphaSequence& alphas,
                                int n, cplx z);

/// kappa_n = |phi_n^*(alpha_n)|, the value of the extremal problem over the
/// unit ball of L_n.
double kappa(const SchurParams& params, const AlphaSequence& alphas, int n);
double kappa(const OrfCoeffs& coeffs);

/// Residual of the order-n recurrence [phi_n; phi_n^*] = T_n [phi_{n-1};
/// phi_{n-1}^*] with the lambda_n = 1 normalization, relative to the vector
/// magnitude. n >= 1.
double orf_recurrence_residual(const SchurParams& params, const AlphaSequence& alphas, int n,
                               cplx z);

/// JSON round trip: {"n": int, "alphas": [[re,im]...], "coeffs": [[re,im]...]}.
std::string orf_coeffs_to_json(const OrfCoeffs& c, const AlphaSequence& alphas);
std::pair<OrfCoeffs, std::vector<cplx>> orf_coeffs_from_json(const std::string& text);

}  // namespace mpsorf
