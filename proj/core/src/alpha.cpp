#include "mpsorf/alpha.hpp"

#include <cmath>

namespace mpsorf {

AlphaSequence::AlphaSequence(std::vector<cplx> pts, Generator g, bool divergent)
    : points_(std::move(pts)), generator_(g), declared_divergent_(divergent) {
    if (points_.empty() || points_[0] != cplx{0.0, 0.0})
        throw ValidationError("AlphaSequence: alpha_0 = 0 is required");
    gap_sums_.reserve(points_.size());
    double acc = 0.0;
    for (const cplx& a : points_) {
        const double r = std::abs(a);
        if (!(r < 1.0 - boundary_guard))
            throw ValidationError("AlphaSequence: |alpha_k| must be < 1 - 1e-12");
        acc += 1.0 - r;
        gap_sums_.push_back(acc);
    }
}

AlphaSequence AlphaSequence::classical(int count) {
    std::vector<cplx> pts(static_cast<std::size_t>(std::max(count, 1)), cplx{0.0, 0.0});
    return AlphaSequence(std::move(pts), Generator::Classical, true);
}

AlphaSequence AlphaSequence::compact_circle(int count, double r, double theta_step) {
    std::vector<cplx> pts;
    pts.reserve(static_cast<std::size_t>(std::max(count, 1)));
    pts.emplace_back(0.0, 0.0);
    for (int k = 1; k < count; ++k) pts.push_back(std::polar(r, theta_step * k));
    return AlphaSequence(std::move(pts), Generator::CompactCircle, true);
}

AlphaSequence AlphaSequence::radial(int count, cplx xi, double c) {
    if (std::abs(std::abs(xi) - 1.0) > 1e-12)
        throw ValidationError("AlphaSequence::radial: |xi| must be 1");
    xi /= std::abs(xi);
    std::vector<cplx> pts;
    pts.reserve(static_cast<std::size_t>(std::max(count, 1)));
    pts.emplace_back(0.0, 0.0);
    for (int k = 1; k < count; ++k) {
        const double rho = std::max(0.0, 1.0 - c / double(k + 1));
        pts.push_back(rho * xi);
    }
    return AlphaSequence(std::move(pts), Generator::Radial, true);
}

AlphaSequence AlphaSequence::nontangential(int count, cplx xi, double aperture) {
    if (std::abs(std::abs(xi) - 1.0) > 1e-12)
        throw ValidationError("AlphaSequence::nontangential: |xi| must be 1");
    if (!(aperture >= 0.0 && aperture < 1.0))
        throw ValidationError("AlphaSequence::nontangential: aperture must be in [0, 1)");
    xi /= std::abs(xi);
    std::vector<cplx> pts;
    pts.reserve(static_cast<std::size_t>(std::max(count, 1)));
    pts.emplace_back(0.0, 0.0);
    for (int k = 1; k < count; ++k) {
        const double rk = 1.0 / double(k + 1);
        const double sk = (k % 2 == 0) ? 1.0 : -1.0;
        pts.push_back(xi * (1.0 - rk * std::polar(1.0, aperture * sk)));
    }
    return AlphaSequence(std::move(pts), Generator::Nontangential, true);
}

AlphaSequence AlphaSequence::explicit_list(std::vector<cplx> points, bool declared_divergent,
                                           int count, bool cycle) {
    std::vector<cplx> pts;
    if (points.empty() || points.front() != cplx{0.0, 0.0})
        pts.emplace_back(0.0, 0.0);
    pts.insert(pts.end(), points.begin(), points.end());
    if (cycle) {
        if (count <= 0)
            throw ValidationError("AlphaSequence::explicit_list: cycling needs a count");
        if (points.empty())
            throw ValidationError("AlphaSequence::explicit_list: cycling needs points");
        std::size_t i = 0;
        while (static_cast<int>(pts.size()) < count) {
            pts.push_back(points[i % points.size()]);
            ++i;
        }
    }
    if (count > 0 && static_cast<int>(pts.size()) < count)
        throw ValidationError("AlphaSequence::explicit_list: fewer points than requested");
    if (count > 0) pts.resize(static_cast<std::size_t>(count));
    return AlphaSequence(std::move(pts), Generator::ExplicitList, declared_divergent);
}

cplx AlphaSequence::operator[](int k) const {
    if (k < 0 || k >= size())
        throw ValidationError("AlphaSequence: index out of the materialized range");
    return points_[static_cast<std::size_t>(k)];
}

std::string AlphaSequence::generator_name() const {
    switch (generator_) {
        case Generator::Classical: return "classical";
        case Generator::CompactCircle: return "circle";
        case Generator::Radial: return "radial";
        case Generator::Nontangential: return "nontangential";
        case Generator::ExplicitList: return "list";
    }
    return "unknown";
}

double AlphaSequence::gap_sum(int n) const {
    if (n < 0 || n >= size())
        throw ValidationError("AlphaSequence::gap_sum: index out of range");
    return gap_sums_[static_cast<std::size_t>(n)];
}

int AlphaSequence::multiplicity_through(int k) const {
    if (k < 1 || k >= size())
        throw ValidationError("AlphaSequence::multiplicity_through: index out of range");
    const cplx v = points_[static_cast<std::size_t>(k)];
    int m = 0;
    for (int j = 1; j <= k; ++j)
        if (points_[static_cast<std::size_t>(j)] == v) ++m;
    return m;
}

cplx blaschke_partial(const AlphaSequence& alphas, int i, int n, cplx z) {
    if (i < 1 || i > n + 1)
        throw ValidationError("blaschke_partial: need 1 <= i <= n+1");
    cplx acc{1.0, 0.0};
    for (int k = i; k <= n; ++k) acc *= zeta(alphas[k], z);
    return acc;
}

}  // namespace mpsorf
