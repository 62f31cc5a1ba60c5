#include "mpsorf/orf.hpp"

#include <cmath>
#include <numbers>

#include <Eigen/Dense>
#include <nlohmann/json.hpp>

#include "mat2.hpp"
#include "mpsorf/fft.hpp"

namespace mpsorf {

using detail::Mat2;

namespace {

inline OrfEval snapshot(const Mat2& m, cplx log_scale, cplx prefactor, int n) {
    OrfEval e;
    e.n = n;
    e.phi = m.m00;
    e.psi = m.m01;
    e.phistar = m.m10;
    e.psistar = -m.m11;
    cplx total = log_scale + std::log(prefactor);
    if (std::abs(total.real()) < 300.0) {
        const cplx s = std::exp(total);
        e.phi *= s;
        e.psi *= s;
        e.phistar *= s;
        e.psistar *= s;
        e.log_scale = {0.0, 0.0};
    } else {
        e.log_scale = total;
    }
    return e;
}

}  // namespace

std::vector<OrfEval> orf_chain(const SchurParams& params, const AlphaSequence& alphas,
                               int n_max, cplx z) {
    if (params.count() < n_max)
        throw ValidationError("orf_chain: params must hold gamma_0 .. gamma_{n-1}");
    std::vector<OrfEval> out;
    out.reserve(static_cast<std::size_t>(n_max) + 1);
    Mat2 m{1.0, 1.0, 1.0, -1.0};
    cplx log_scale{0.0, 0.0};
    double pi_n = 1.0;  // prod sqrt(1 - |gamma~_k|^2)
    out.push_back(snapshot(m, log_scale, 1.0, 0));
    for (int n = 1; n <= n_max; ++n) {
        const cplx gt = params.gamma(n - 1);  // gamma~_n = gamma_{n-1}
        detail::apply_factor(m, -gt, zeta(alphas[n - 1], z));
        detail::renormalize(m, log_scale);
        pi_n *= std::sqrt(1.0 - std::norm(gt));
        const cplx an = alphas[n];
        const cplx prefactor =
            std::sqrt(1.0 - std::norm(an)) / ((1.0 - std::conj(an) * z) * pi_n);
        out.push_back(snapshot(m, log_scale, prefactor, n));
    }
    return out;
}

OrfEval orf_from_params(const SchurParams& params, const AlphaSequence& alphas, int n,
                        cplx z) {
    return orf_chain(params, alphas, n, z).back();
}

// ---------------------------------------------------------------------------
// Gram-Schmidt in L^2(mu)

namespace {

struct SampledFn {
    std::vector<cplx> on_grid;
    std::vector<cplx> on_atoms;
};

cplx inner_product(const CircleMeasure& mu, const SampledFn& u, const SampledFn& v) {
    long double re = 0.0L, im = 0.0L;
    const auto& dens = mu.density();
    for (std::size_t j = 0; j < u.on_grid.size(); ++j) {
        const cplx w = u.on_grid[j] * std::conj(v.on_grid[j]) * dens[j];
        re += w.real();
        im += w.imag();
    }
    const long double inv = 1.0L / static_cast<long double>(mu.grid().size());
    cplx acc{static_cast<double>(re * inv), static_cast<double>(im * inv)};
    for (std::size_t a = 0; a < mu.atoms().size(); ++a)
        acc += mu.atoms()[a].mass * u.on_atoms[a] * std::conj(v.on_atoms[a]);
    return acc;
}

void axpy(SampledFn& u, cplx c, const SampledFn& v) {
    for (std::size_t j = 0; j < u.on_grid.size(); ++j) u.on_grid[j] += c * v.on_grid[j];
    for (std::size_t a = 0; a < u.on_atoms.size(); ++a) u.on_atoms[a] += c * v.on_atoms[a];
}

void scale(SampledFn& u, cplx c) {
    for (auto& v : u.on_grid) v *= c;
    for (auto& v : u.on_atoms) v *= c;
}

}  // namespace

cplx orf_coeffs_eval(const OrfCoeffs& c, const AlphaSequence& alphas, cplx z) {
    cplx acc{0.0, 0.0};
    cplx basis{1.0, 0.0};
    for (int j = 0; j <= c.n; ++j) {
        if (j > 0) basis *= zeta(alphas[j], z);
        acc += c.a[static_cast<std::size_t>(j)] * basis;
    }
    return acc;
}

cplx orf_coeffs_eval_star(const OrfCoeffs& c, const AlphaSequence& alphas, cplx z) {
    // g* = sum_j conj(a_j) B_{n, j+1}, accumulated from the top down
    cplx acc{0.0, 0.0};
    cplx tail{1.0, 0.0};  // B_{n, j+1}(z), starts at j = n (empty product)
    for (int j = c.n; j >= 0; --j) {
        acc += std::conj(c.a[static_cast<std::size_t>(j)]) * tail;
        if (j > 0) tail *= zeta(alphas[j], z);
    }
    return acc;
}

GramSchmidtResult orf_gram_schmidt(const CircleMeasure& mu, const AlphaSequence& alphas,
                                   int n) {
    if (n < 0) throw ValidationError("orf_gram_schmidt: n must be >= 0");
    const int m = mu.grid().size();
    const std::size_t n_atoms = mu.atoms().size();

    // raw basis samples B_0 .. B_n
    std::vector<SampledFn> basis(static_cast<std::size_t>(n) + 1);
    basis[0].on_grid.assign(static_cast<std::size_t>(m), cplx{1.0, 0.0});
    basis[0].on_atoms.assign(n_atoms, cplx{1.0, 0.0});
    for (int k = 1; k <= n; ++k) {
        auto& bk = basis[static_cast<std::size_t>(k)];
        const auto& prev = basis[static_cast<std::size_t>(k - 1)];
        bk.on_grid.resize(static_cast<std::size_t>(m));
        bk.on_atoms.resize(n_atoms);
        for (int j = 0; j < m; ++j)
            bk.on_grid[static_cast<std::size_t>(j)] =
                prev.on_grid[static_cast<std::size_t>(j)] * zeta(alphas[k], mu.grid().node(j));
        for (std::size_t a = 0; a < n_atoms; ++a)
            bk.on_atoms[a] = prev.on_atoms[a] * zeta(alphas[k], mu.atoms()[a].position);
    }

    // condition monitoring on the raw Gram matrix, degree by degree
    Eigen::MatrixXcd gram(n + 1, n + 1);
    for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= i; ++j) {
            const cplx g = inner_product(mu, basis[static_cast<std::size_t>(i)],
                                         basis[static_cast<std::size_t>(j)]);
            gram(i, j) = g;
            gram(j, i) = std::conj(g);
        }
    double condition = 1.0;
    for (int k = 0; k <= n; ++k) {
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(gram.topLeftCorner(k + 1, k + 1));
        const double lo = es.eigenvalues().minCoeff();
        const double hi = es.eigenvalues().maxCoeff();
        condition = (lo > 0.0) ? hi / lo : std::numeric_limits<double>::infinity();
        if (!(condition < 1e12))
            throw RankDeficient("orf_gram_schmidt: Gram matrix condition " +
                                    std::to_string(condition) + " at degree " +
                                    std::to_string(k),
                                k);
    }

    GramSchmidtResult result;
    result.gram_condition = condition;
    std::vector<SampledFn> phi;
    phi.reserve(static_cast<std::size_t>(n) + 1);

    for (int k = 0; k <= n; ++k) {
        SampledFn v = basis[static_cast<std::size_t>(k)];
        std::vector<cplx> coeff(static_cast<std::size_t>(k) + 1, cplx{0.0, 0.0});
        coeff[static_cast<std::size_t>(k)] = 1.0;
        // modified Gram-Schmidt with one reorthogonalization pass
        for (int pass = 0; pass < 2; ++pass) {
            for (int j = 0; j < k; ++j) {
                const cplx c = inner_product(mu, v, phi[static_cast<std::size_t>(j)]);
                axpy(v, -c, phi[static_cast<std::size_t>(j)]);
                for (int i = 0; i <= j; ++i)
                    coeff[static_cast<std::size_t>(i)] -=
                        c * result.coeffs[static_cast<std::size_t>(j)].a[static_cast<std::size_t>(i)];
            }
        }
        const double nrm = std::sqrt(inner_product(mu, v, v).real());
        if (!(nrm > 0.0))
            throw RankDeficient("orf_gram_schmidt: zero norm at degree " + std::to_string(k),
                                k);
        scale(v, 1.0 / nrm);
        for (auto& c : coeff) c /= nrm;

        OrfCoeffs oc{k, std::move(coeff)};
        if (k == 0) {
            // phi_0 = +1: the coefficient is 1/||1||, already real positive
        } else {
            // rotate so lambda_k = 1, using kappa_{k-1} from the previous step
            const cplx prev_alpha = alphas[k - 1];
            const cplx ak = alphas[k];
            const cplx one_m = 1.0 - ak * std::conj(prev_alpha);
            const cplx phistar_at = orf_coeffs_eval_star(oc, alphas, prev_alpha);
            const cplx kappa_prev = result.coeffs[static_cast<std::size_t>(k - 1)].a.back();
            const cplx lambda = (one_m / std::abs(one_m)) *
                                (std::conj(phistar_at) / std::abs(phistar_at)) *
                                (std::conj(kappa_prev) / std::abs(kappa_prev));
            const cplx rot = std::conj(lambda);
            scale(v, rot);
            for (auto& c : oc.a) c *= rot;

            const cplx phi_at = orf_coeffs_eval(oc, alphas, prev_alpha);
            const cplx phistar_fixed = orf_coeffs_eval_star(oc, alphas, prev_alpha);
            result.geronimus.gammas_tilde.push_back(-std::conj(phi_at) /
                                                    std::conj(phistar_fixed));
            result.geronimus.etas.push_back(one_m / (1.0 - std::conj(ak) * prev_alpha));
            const cplx lam_check = (one_m / std::abs(one_m)) *
                                   (std::conj(phistar_fixed) / std::abs(phistar_fixed)) *
                                   (std::conj(kappa_prev) / std::abs(kappa_prev));
            result.geronimus.lambda_residual.push_back(lam_check);
        }
        result.coeffs.push_back(std::move(oc));
        phi.push_back(std::move(v));
    }
    return result;
}

OrfCoeffs star_in_basis(const OrfCoeffs& c, const AlphaSequence& alphas) {
    const int n = c.n;
    Eigen::MatrixXcd v(n + 1, n + 1);
    Eigen::VectorXcd w(n + 1);
    for (int i = 0; i <= n; ++i) {
        const cplx zi = std::polar(1.0, 2.0 * std::numbers::pi * (i + 0.25) / (n + 1));
        cplx basis{1.0, 0.0};
        for (int j = 0; j <= n; ++j) {
            if (j > 0) basis *= zeta(alphas[j], zi);
            v(i, j) = basis;
        }
        w(i) = orf_coeffs_eval_star(c, alphas, zi);
    }
    Eigen::FullPivLU<Eigen::MatrixXcd> lu(v);
    if (!lu.isInvertible())
        throw SolveFailure("star_in_basis: singular change-of-basis system");
    Eigen::VectorXcd x = lu.solve(w);
    OrfCoeffs out;
    out.n = n;
    out.a.assign(x.data(), x.data() + n + 1);
    return out;
}

cplx psi_integral(const CircleMeasure& mu, std::span<const cplx> phi_samples, int n,
                  cplx z) {
    if (n == 0) return {1.0, 0.0};
    if (!(std::abs(z) < 1.0))
        throw ValidationError("psi_integral: z must be interior");
    const auto& nodes = mu.grid().nodes();
    // phi(z) by the Cauchy integral over Lebesgue measure
    long double cre = 0.0L, cim = 0.0L;
    for (std::size_t j = 0; j < nodes.size(); ++j) {
        const cplx v = phi_samples[j] * nodes[j] / (nodes[j] - z);
        cre += v.real();
        cim += v.imag();
    }
    const long double inv = 1.0L / static_cast<long double>(mu.grid().size());
    const cplx phi_z{static_cast<double>(cre * inv), static_cast<double>(cim * inv)};

    long double re = 0.0L, im = 0.0L;
    const auto& dens = mu.density();
    for (std::size_t j = 0; j < nodes.size(); ++j) {
        const cplx v = (nodes[j] + z) / (nodes[j] - z) * (phi_samples[j] - phi_z) * dens[j];
        re += v.real();
        im += v.imag();
    }
    cplx acc{static_cast<double>(re * inv), static_cast<double>(im * inv)};
    for (const Atom& a : mu.atoms()) {
        const double theta = std::arg(a.position) - mu.grid().phase();
        const cplx phi_at = detail::interpolate_samples(phi_samples, theta);
        acc += a.mass * (a.position + z) / (a.position - z) * (phi_at - phi_z);
    }
    return acc;
}

cplx u_n_eval(const CircleMeasure& mu, std::span<const cplx> phi_samples, cplx z) {
    if (!(std::abs(z) < 1.0)) throw ValidationError("u_n_eval: z must be interior");
    const auto& nodes = mu.grid().nodes();
    const auto& dens = mu.density();
    long double re = 0.0L, im = 0.0L;
    for (std::size_t j = 0; j < nodes.size(); ++j) {
        const cplx v = std::conj(phi_samples[j]) * dens[j] / (nodes[j] - z);
        re += v.real();
        im += v.imag();
    }
    const long double inv = 1.0L / static_cast<long double>(mu.grid().size());
    cplx acc{static_cast<double>(re * inv), static_cast<double>(im * inv)};
    for (const Atom& a : mu.atoms()) {
        const double theta = std::arg(a.position) - mu.grid().phase();
        const cplx phi_at = detail::interpolate_samples(phi_samples, theta);
        acc += a.mass * std::conj(phi_at) / (a.position - z);
    }
    return 2.0 * acc;
}

HerglotzSplit herglotz_split(const CircleMeasure& mu, std::span<const cplx> phi_samples,
                             const SchurParams& params, const AlphaSequence& alphas, int n,
                             cplx z) {
    HerglotzSplit out;
    out.u = u_n_eval(mu, phi_samples, z);
    const cplx f = herglotz_interior(mu, z);
    const OrfEval e = orf_from_params(params, alphas, n, z);
    const cplx bn = blaschke(alphas, n, z);
    out.residual = f - e.psistar / e.phistar - z * bn * out.u / e.phistar;
    return out;
}

BridgeResiduals wall_orf_bridge(const SchurParams& params, const AlphaSequence& alphas,
                                int n, cplx z) {
    const WallEval w = wall_eval(params, alphas, n, z);
    const OrfEval e = orf_from_params(params, alphas, n + 1, z);
    const cplx an1 = alphas[n + 1];
    const cplx c = (1.0 - std::conj(an1) * z) / std::sqrt(1.0 - std::norm(an1));
    const double sw = std::sqrt(params.omega(n));

    const cplx lhs1 = z * w.bstar - w.astar;
    const cplx rhs1 = c * sw * e.phi;
    const cplx lhs2 = w.b - z * w.a;
    const cplx rhs2 = c * sw * e.phistar;

    BridgeResiduals r;
    const double s1 = std::max({std::abs(lhs1), std::abs(rhs1), 1e-30});
    const double s2 = std::max({std::abs(lhs2), std::abs(rhs2), 1e-30});
    r.r_phi = std::abs(lhs1 - rhs1) / s1;
    r.r_phistar = std::abs(lhs2 - rhs2) / s2;

    const cplx ratio = z * w.a / w.b;
    const cplx moebius = (1.0 + ratio) / (1.0 - ratio);
    const cplx lhs3 = e.psistar / e.phistar;
    r.r_moebius = std::abs(lhs3 - moebius) / std::max({std::abs(lhs3), std::abs(moebius), 1e-30});
    return r;
}

double kappa(const SchurParams& params, const AlphaSequence& alphas, int n) {
    return std::abs(orf_from_params(params, alphas, n, alphas[n]).phistar);
}

double kappa(const OrfCoeffs& coeffs) { return std::abs(coeffs.leading()); }

std::string orf_coeffs_to_json(const OrfCoeffs& c, const AlphaSequence& alphas) {
    nlohmann::json j;
    j["n"] = c.n;
    nlohmann::json as = nlohmann::json::array();
    for (int k = 0; k <= c.n; ++k)
        as.push_back({alphas[k].real(), alphas[k].imag()});
    j["alphas"] = as;
    nlohmann::json cs = nlohmann::json::array();
    for (const cplx& v : c.a) cs.push_back({v.real(), v.imag()});
    j["coeffs"] = cs;
    return j.dump();
}

std::pair<OrfCoeffs, std::vector<cplx>> orf_coeffs_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("orf_coeffs_from_json: ") + e.what());
    }
    try {
        OrfCoeffs c;
        c.n = j.at("n").get<int>();
        std::vector<cplx> alphas;
        for (const auto& a : j.at("alphas"))
            alphas.emplace_back(a.at(0).get<double>(), a.at(1).get<double>());
        for (const auto& a : j.at("coeffs"))
            c.a.emplace_back(a.at(0).get<double>(), a.at(1).get<double>());
        if (static_cast<int>(c.a.size()) != c.n + 1 ||
            static_cast<int>(alphas.size()) != c.n + 1)
            throw ParseError("orf_coeffs_from_json: inconsistent lengths");
        return {std::move(c), std::move(alphas)};
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("orf_coeffs_from_json: ") + e.what());
    }
}

double orf_recurrence_residual(const SchurParams& params, const AlphaSequence& alphas, int n,
                               cplx z) {
    if (n < 1) throw ValidationError("orf_recurrence_residual: n must be >= 1");
    const OrfEval lo = orf_from_params(params, alphas, n - 1, z);
    const OrfEval hi = orf_from_params(params, alphas, n, z);
    const cplx gt = params.gamma(n - 1);
    const cplx an = alphas[n], am = alphas[n - 1];
    const cplx pref = std::sqrt((1.0 - std::norm(an)) / (1.0 - std::norm(am))) /
                      std::sqrt(1.0 - std::norm(gt)) *
                      ((1.0 - std::conj(am) * z) / (1.0 - std::conj(an) * z));
    const cplx zf = zeta(alphas[n - 1], z);
    const cplx pred_phi = pref * (zf * lo.phi - std::conj(gt) * lo.phistar);
    const cplx pred_phistar = pref * (-gt * zf * lo.phi + lo.phistar);
    const double scale =
        std::max({std::abs(hi.phi), std::abs(hi.phistar), 1e-30});
    return std::max(std::abs(hi.phi - pred_phi), std::abs(hi.phistar - pred_phistar)) / scale;
}

}  // namespace mpsorf
