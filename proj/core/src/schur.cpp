#include "mpsorf/schur.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "mpsorf/fft.hpp"

namespace mpsorf {

struct SchurFunction::Impl {
    virtual ~Impl() = default;
    virtual TaylorJet jet(cplx center, int order) const = 0;
    virtual std::string kind() const = 0;
    virtual bool boundary_continuous() const = 0;
    virtual std::vector<cplx> boundary_samples(const CircleGrid& grid) const {
        std::vector<cplx> out(static_cast<std::size_t>(grid.size()));
        for (int j = 0; j < grid.size(); ++j)
            out[static_cast<std::size_t>(j)] = jet(grid.node(j), 1).value();
        return out;
    }
};

namespace {

// Taylor coefficients of a polynomial (ascending coefficients) about `center`,
// truncated to `order` terms, by the Horner shift.
TaylorJet polynomial_jet(const std::vector<cplx>& poly, cplx center, int order) {
    std::vector<cplx> work = poly;
    if (work.empty()) work.push_back(cplx{0.0, 0.0});
    const int deg = static_cast<int>(work.size()) - 1;
    for (int m = 0; m <= deg; ++m)
        for (int i = deg - 1; i >= m; --i)
            work[static_cast<std::size_t>(i)] += center * work[static_cast<std::size_t>(i + 1)];
    work.resize(static_cast<std::size_t>(order), cplx{0.0, 0.0});
    return TaylorJet(std::move(work));
}

struct ConstantImpl final : SchurFunction::Impl {
    cplx c;
    explicit ConstantImpl(cplx v) : c(v) {}
    TaylorJet jet(cplx, int order) const override { return TaylorJet::constant(c, order); }
    std::string kind() const override { return "constant"; }
    bool boundary_continuous() const override { return true; }
};

struct ScaledIdentityImpl final : SchurFunction::Impl {
    cplx lambda;
    explicit ScaledIdentityImpl(cplx v) : lambda(v) {}
    TaylorJet jet(cplx center, int order) const override {
        return TaylorJet::variable(center, order) * lambda;
    }
    std::string kind() const override { return "scaled_identity"; }
    bool boundary_continuous() const override { return true; }
};

struct RationalImpl final : SchurFunction::Impl {
    std::vector<cplx> num, den;
    RationalImpl(std::vector<cplx> n, std::vector<cplx> d)
        : num(std::move(n)), den(std::move(d)) {}
    TaylorJet jet(cplx center, int order) const override {
        return polynomial_jet(num, center, order) / polynomial_jet(den, center, order);
    }
    std::string kind() const override { return "rational"; }
    bool boundary_continuous() const override { return true; }
};

struct ProductImpl final : SchurFunction::Impl {
    SchurFunction f, g;
    ProductImpl(SchurFunction a, SchurFunction b) : f(std::move(a)), g(std::move(b)) {}
    TaylorJet jet(cplx center, int order) const override {
        return f.jet(center, order) * g.jet(center, order);
    }
    std::string kind() const override { return "product"; }
    bool boundary_continuous() const override {
        return f.boundary_continuous() && g.boundary_continuous();
    }
};

struct ComposeImpl final : SchurFunction::Impl {
    SchurFunction outer, inner;
    ComposeImpl(SchurFunction a, SchurFunction b)
        : outer(std::move(a)), inner(std::move(b)) {}
    TaylorJet jet(cplx center, int order) const override {
        const TaylorJet gi = inner.jet(center, order);
        const TaylorJet fo = outer.jet(gi.value(), order);
        // Horner composition of fo with (gi - gi(0))
        const TaylorJet shift = gi - gi.value();
        TaylorJet acc = TaylorJet::constant(fo[fo.order() - 1], order);
        for (int m = fo.order() - 2; m >= 0; --m) acc = acc * shift + fo[m];
        return acc;
    }
    std::string kind() const override { return "composition"; }
    bool boundary_continuous() const override {
        return outer.boundary_continuous() && inner.boundary_continuous();
    }
};

struct MeasureImpl final : SchurFunction::Impl {
    CircleMeasure mu;
    std::vector<cplx> f_boundary;  // Herglotz boundary values of the measure

    explicit MeasureImpl(CircleMeasure m) : mu(std::move(m)) {
        f_boundary = herglotz_boundary_all(mu);
    }

    TaylorJet jet(cplx center, int order) const override {
        const double r = std::abs(center);
        if (r >= 1.0 - boundary_guard) {
            if (order > 1)
                throw DerivativeUnavailable(
                    "measure-induced Schur function: no boundary derivatives");
            // trig interpolation of the boundary Herglotz values
            const double theta = std::arg(center) - mu.grid().phase();
            const cplx F = detail::interpolate_samples(f_boundary, theta);
            const cplx t = center / r;
            return TaylorJet::constant((F - mu.total_mass()) / (t * (F + mu.total_mass())),
                                       1);
        }
        // interior: Taylor coefficients of F by derivative quadratures,
        // F^(m)(w)/m! = int 2 t / (t - w)^{m+1} dmu(t)
        std::vector<cplx> fc(static_cast<std::size_t>(order), cplx{0.0, 0.0});
        fc[0] = herglotz_interior(mu, center) / mu.total_mass();
        const auto& nodes = mu.grid().nodes();
        const auto& dens = mu.density();
        for (int m = 1; m < order; ++m) {
            long double re = 0.0L, im = 0.0L;
            for (std::size_t j = 0; j < nodes.size(); ++j) {
                cplx pw = nodes[j] - center;
                cplx v = 2.0 * nodes[j] * dens[j];
                for (int p = 0; p <= m; ++p) v /= pw;
                re += v.real();
                im += v.imag();
            }
            cplx acc{static_cast<double>(re / nodes.size()),
                     static_cast<double>(im / nodes.size())};
            for (const Atom& a : mu.atoms()) {
                cplx v = 2.0 * a.mass * a.position;
                const cplx pw = a.position - center;
                for (int p = 0; p <= m; ++p) v /= pw;
                acc += v;
            }
            fc[static_cast<std::size_t>(m)] = acc / mu.total_mass();
        }
        TaylorJet F(std::move(fc));
        const TaylorJet z = TaylorJet::variable(center, order);
        const TaylorJet numer = F - cplx{1.0, 0.0};
        const TaylorJet denom = z * (F + cplx{1.0, 0.0});
        if (std::abs(center) < 1e-14) {
            // both vanish at 0 (F(0) = 1 for the normalized measure)
            return numer.deflated() / (F + cplx{1.0, 0.0}).truncated(order - 1);
        }
        return numer / denom;
    }
    std::string kind() const override { return "measure"; }
    bool boundary_continuous() const override { return mu.atoms().empty(); }
    std::vector<cplx> boundary_samples(const CircleGrid& grid) const override {
        if (!(grid == mu.grid())) return Impl::boundary_samples(grid);
        std::vector<cplx> out(f_boundary.size());
        for (std::size_t j = 0; j < f_boundary.size(); ++j) {
            const cplx t = grid.node(static_cast<int>(j));
            out[j] = (f_boundary[j] - mu.total_mass()) /
                     (t * (f_boundary[j] + mu.total_mass()));
        }
        return out;
    }
};

struct CustomImpl final : SchurFunction::Impl {
    std::string name;
    std::function<TaylorJet(cplx, int)> eval;
    int max_order;
    bool bc;
    TaylorJet jet(cplx center, int order) const override {
        if (max_order >= 0 && order > max_order)
            throw DerivativeUnavailable("custom Schur function '" + name +
                                        "' supplies jets only up to order " +
                                        std::to_string(max_order));
        return eval(center, order);
    }
    std::string kind() const override { return name; }
    bool boundary_continuous() const override { return bc; }
};

}  // namespace

TaylorJet SchurFunction::jet(cplx center, int order) const { return impl_->jet(center, order); }
bool SchurFunction::boundary_continuous() const { return impl_->boundary_continuous(); }
std::string SchurFunction::kind() const { return impl_->kind(); }

SchurFunction SchurFunction::constant(cplx c) {
    if (std::abs(c) > 1.0)
        throw ValidationError("SchurFunction::constant: |c| must be <= 1");
    return SchurFunction(std::make_shared<ConstantImpl>(c));
}

SchurFunction SchurFunction::scaled_identity(cplx lambda) {
    if (std::abs(lambda) > 1.0)
        throw ValidationError("SchurFunction::scaled_identity: |lambda| must be <= 1");
    return SchurFunction(std::make_shared<ScaledIdentityImpl>(lambda));
}

SchurFunction SchurFunction::rational(std::vector<cplx> num, std::vector<cplx> den) {
    if (den.empty()) throw ValidationError("SchurFunction::rational: empty denominator");
    auto impl = std::make_shared<RationalImpl>(std::move(num), std::move(den));
    // validate the Schur bound on a fine circle grid (4x the largest default grid)
    const int m = 16384;
    double maxmod = 0.0;
    for (int j = 0; j < m; ++j) {
        const cplx t = std::polar(1.0, 2.0 * std::numbers::pi * j / m);
        maxmod = std::max(maxmod, std::abs(impl->jet(t, 1).value()));
    }
    if (!(maxmod <= 1.0 + 1e-9))
        throw ValidationError("SchurFunction::rational: max |p/q| on the circle is " +
                              std::to_string(maxmod) + " > 1 + 1e-9");
    return SchurFunction(std::move(impl));
}

SchurFunction SchurFunction::product(SchurFunction f, SchurFunction g) {
    return SchurFunction(std::make_shared<ProductImpl>(std::move(f), std::move(g)));
}

SchurFunction SchurFunction::compose(SchurFunction outer, SchurFunction inner) {
    return SchurFunction(std::make_shared<ComposeImpl>(std::move(outer), std::move(inner)));
}

SchurFunction SchurFunction::from_measure(CircleMeasure mu) {
    return SchurFunction(std::make_shared<MeasureImpl>(std::move(mu)));
}

SchurFunction SchurFunction::custom(std::string name,
                                    std::function<TaylorJet(cplx, int)> eval,
                                    int max_order, bool boundary_continuous) {
    auto impl = std::make_shared<CustomImpl>();
    impl->name = std::move(name);
    impl->eval = std::move(eval);
    impl->max_order = max_order;
    impl->bc = boundary_continuous;
    return SchurFunction(std::move(impl));
}

SchurParams::SchurParams(std::vector<cplx> gammas) : gammas_(std::move(gammas)) {
    omegas_.reserve(gammas_.size());
    double acc = 1.0;
    for (const cplx& g : gammas_) {
        if (!(std::abs(g) < 1.0))
            throw ValidationError("SchurParams: |gamma_k| must be < 1");
        acc *= 1.0 - std::norm(g);
        omegas_.push_back(acc);
    }
}

namespace {

// One step of the algorithm applied to the jet of f_j about w:
// f_{j+1} = (f_j - gamma_j) / ((1 - conj(gamma_j) f_j) zeta_{j+1}).
// `confluent` marks w == alpha_{j+1}, where the simple zeros of numerator and
// zeta cancel and the jet order drops by one.
TaylorJet schur_step_jet(const TaylorJet& g, cplx gamma, cplx alpha, cplx w,
                         bool confluent) {
    const int order = g.order();
    auto linear = [](cplx c0, cplx c1, int len) {
        std::vector<cplx> v(static_cast<std::size_t>(std::max(len, 1)), cplx{0.0, 0.0});
        v[0] = c0;
        if (len > 1) v[1] = c1;
        return TaylorJet(std::move(v));
    };
    const TaylorJet moebius =
        (g - gamma) / (TaylorJet::constant(1.0, order) - std::conj(gamma) * g);
    if (confluent) {
        // divide by zeta = (z - w)/(1 - conj(w) z): multiply the deflated
        // series by (1 - conj(w) z) expanded about w
        return moebius.deflated() * linear(1.0 - std::norm(w), -std::conj(w), order - 1);
    }
    const TaylorJet zeta_jet = linear(w - alpha, 1.0, order) /
                               linear(1.0 - std::conj(alpha) * w, -std::conj(alpha), order);
    return moebius / zeta_jet;
}

}  // namespace

namespace {

// gamma_k by the interior chain, given gamma_0 .. gamma_{k-1}
cplx chain_gamma(const SchurFunction& f, const AlphaSequence& alphas,
                 const std::vector<cplx>& gammas, int k, double* amplification) {
    const cplx w = alphas[k + 1];
    const int mult = alphas.multiplicity_through(k + 1);
    TaylorJet g = f.jet(w, mult);
    double amp = 1.0;
    for (int j = 0; j < k; ++j) {
        const bool confluent = (alphas[j + 1] == w);
        if (!confluent) amp /= std::abs(zeta(alphas[j + 1], w));
        g = schur_step_jet(g, gammas[static_cast<std::size_t>(j)], alphas[j + 1], w,
                           confluent);
    }
    if (amplification) *amplification = amp;
    return g.value();
}

void check_gamma(cplx gk, int k, double amplification) {
    if (!(std::abs(gk) < 1.0 - 1e-12)) {
        std::string msg = "schur_parameters: |gamma_" + std::to_string(k) + "| = " +
                          std::to_string(std::abs(gk)) +
                          " reached the unit circle; the input behaves like a finite "
                          "Blaschke product";
        if (amplification * 1e-16 > 1e-4)
            msg +=
                " (the interior chain is ill-conditioned here, estimated error "
                "amplification " +
                std::to_string(amplification) +
                "; extract with the grid-assisted overload instead)";
        throw FiniteBlaschkeDetected(msg);
    }
}

}  // namespace

SchurParams schur_parameters(const SchurFunction& f, const AlphaSequence& alphas, int n) {
    if (n < 0) throw ValidationError("schur_parameters: n must be >= 0");
    if (alphas.size() < n + 1)
        throw ValidationError("schur_parameters: alpha sequence too short");
    std::vector<cplx> gammas;
    gammas.reserve(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        double amp = 1.0;
        const cplx gk = chain_gamma(f, alphas, gammas, k, &amp);
        check_gamma(gk, k, amp);
        gammas.push_back(gk);
    }
    return SchurParams(std::move(gammas));
}

SchurParams schur_parameters(const SchurFunction& f, const AlphaSequence& alphas, int n,
                             const CircleGrid& grid) {
    if (n < 0) throw ValidationError("schur_parameters: n must be >= 0");
    if (alphas.size() < n + 1)
        throw ValidationError("schur_parameters: alpha sequence too short");
    std::vector<cplx> gammas;
    gammas.reserve(static_cast<std::size_t>(n));
    std::vector<cplx> row = schur_boundary_samples(f, grid);
    const auto& nodes = grid.nodes();
    for (int k = 0; k < n; ++k) {
        const cplx w = alphas[k + 1];
        const double margin = grid.size() * (1.0 - std::abs(w));
        cplx gk;
        if (margin >= 25.0) {
            // Poisson mean of the remainder row: exact for the analytic
            // completion and bounded by the row's sup modulus
            long double re = 0.0L, im = 0.0L;
            for (std::size_t j = 0; j < nodes.size(); ++j) {
                const cplx v = row[j] * poisson_kernel(nodes[j], w);
                re += v.real();
                im += v.imag();
            }
            const long double inv = 1.0L / static_cast<long double>(grid.size());
            gk = cplx{static_cast<double>(re * inv), static_cast<double>(im * inv)};
            check_gamma(gk, k, 1.0);
        } else {
            double amp = 1.0;
            gk = chain_gamma(f, alphas, gammas, k, &amp);
            check_gamma(gk, k, amp);
        }
        gammas.push_back(gk);
        for (std::size_t j = 0; j < nodes.size(); ++j)
            row[j] = (row[j] - gk) /
                     ((1.0 - std::conj(gk) * row[j]) * zeta(w, nodes[j]));
    }
    return SchurParams(std::move(gammas));
}

std::vector<cplx> schur_boundary_samples(const SchurFunction& f, const CircleGrid& grid) {
    return f.impl()->boundary_samples(grid);
}

std::vector<std::vector<cplx>> remainder_chain_on_grid(const SchurFunction& f,
                                                       const AlphaSequence& alphas,
                                                       const SchurParams& params, int n_max,
                                                       const CircleGrid& grid) {
    if (params.count() < n_max)
        throw ValidationError("remainder_chain_on_grid: params hold too few gammas");
    std::vector<std::vector<cplx>> rows;
    rows.reserve(static_cast<std::size_t>(n_max) + 1);
    std::vector<cplx> row = schur_boundary_samples(f, grid);
    rows.push_back(row);
    for (int k = 0; k < n_max; ++k) {
        const cplx gamma = params.gamma(k);
        const cplx alpha = alphas[k + 1];
        for (int j = 0; j < grid.size(); ++j) {
            const cplx t = grid.node(j);
            cplx& v = row[static_cast<std::size_t>(j)];
            v = (v - gamma) / ((1.0 - std::conj(gamma) * v) * zeta(alpha, t));
        }
        rows.push_back(row);
    }
    return rows;
}

std::vector<cplx> remainder_on_grid(const SchurFunction& f, const AlphaSequence& alphas,
                                    const SchurParams& params, int n,
                                    const CircleGrid& grid) {
    auto rows = remainder_chain_on_grid(f, alphas, params, n, grid);
    return std::move(rows.back());
}

cplx remainder_at(const SchurFunction& f, const AlphaSequence& alphas,
                  const SchurParams& params, int n, cplx z) {
    if (params.count() < n) throw ValidationError("remainder_at: params hold too few gammas");
    int mult = 1;
    for (int j = 1; j <= n; ++j)
        if (alphas[j] == z) ++mult;
    TaylorJet g = f.jet(z, mult);
    for (int j = 0; j < n; ++j)
        g = schur_step_jet(g, params.gamma(j), alphas[j + 1], z, alphas[j + 1] == z);
    return g.value();
}

SchurValidation validate_schur(const SchurFunction& f, const CircleGrid& grid) {
    const std::vector<cplx> vals = schur_boundary_samples(f, grid);
    SchurValidation v{};
    v.max_modulus = 0.0;
    v.min_modulus = std::numeric_limits<double>::infinity();
    v.max_adjacent_jump = 0.0;
    cplx prev = vals.back();
    for (const cplx& val : vals) {
        const double m = std::abs(val);
        v.max_modulus = std::max(v.max_modulus, m);
        v.min_modulus = std::min(v.min_modulus, m);
        v.max_adjacent_jump = std::max(v.max_adjacent_jump, std::abs(val - prev));
        prev = val;
    }
    v.finite_blaschke = v.min_modulus > 1.0 - 1e-9;
    v.pass = v.max_modulus <= 1.0 + 1e-9;
    return v;
}

CircleMeasure measure_from_schur(const SchurFunction& f, const CircleGrid& grid,
                                 bool probability) {
    const std::vector<cplx> vals = schur_boundary_samples(f, grid);
    std::vector<double> density(static_cast<std::size_t>(grid.size()));
    for (int j = 0; j < grid.size(); ++j) {
        const cplx t = grid.node(j);
        const cplx v = vals[static_cast<std::size_t>(j)];
        const double num = 1.0 - std::norm(v);
        const double den = std::norm(1.0 - t * v);
        if (den < 1e-28) {
            if (num < 1e-12) {
                density[static_cast<std::size_t>(j)] = 0.0;  // 0/0: |f| = 1 here
                continue;
            }
            throw ValidationError(
                "measure_from_schur: pole of the density at a grid node (t f(t) = 1); "
                "the Herglotz measure has an atom there");
        }
        density[static_cast<std::size_t>(j)] = std::max(num, 0.0) / den;
    }
    return CircleMeasure(grid, std::move(density), {}, probability);
}

double degenerate_density_fraction(const CircleMeasure& mu) {
    int low = 0;
    for (double d : mu.density())
        if (d < density_floor) ++low;
    return double(low) / double(mu.grid().size());
}

}  // namespace mpsorf
