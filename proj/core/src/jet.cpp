#include "mpsorf/jet.hpp"

#include <algorithm>

namespace mpsorf {

namespace {

int common_order(const TaylorJet& a, const TaylorJet& b) {
    return std::min(a.order(), b.order());
}

}  // namespace

TaylorJet TaylorJet::operator+(const TaylorJet& o) const {
    const int n = common_order(*this, o);
    std::vector<cplx> r(static_cast<std::size_t>(n));
    for (int m = 0; m < n; ++m) r[static_cast<std::size_t>(m)] = (*this)[m] + o[m];
    return TaylorJet(std::move(r));
}

TaylorJet TaylorJet::operator-(const TaylorJet& o) const {
    const int n = common_order(*this, o);
    std::vector<cplx> r(static_cast<std::size_t>(n));
    for (int m = 0; m < n; ++m) r[static_cast<std::size_t>(m)] = (*this)[m] - o[m];
    return TaylorJet(std::move(r));
}

TaylorJet TaylorJet::operator*(const TaylorJet& o) const {
    const int n = common_order(*this, o);
    std::vector<cplx> r(static_cast<std::size_t>(n), cplx{0.0, 0.0});
    for (int m = 0; m < n; ++m)
        for (int k = 0; k <= m; ++k) r[static_cast<std::size_t>(m)] += (*this)[k] * o[m - k];
    return TaylorJet(std::move(r));
}

TaylorJet TaylorJet::operator/(const TaylorJet& o) const {
    const int n = common_order(*this, o);
    if (n == 0) return TaylorJet{};
    if (std::abs(o[0]) < 1e-300)
        throw DerivativeUnavailable(
            "TaylorJet: division by a series with vanishing constant term");
    std::vector<cplx> r(static_cast<std::size_t>(n), cplx{0.0, 0.0});
    for (int m = 0; m < n; ++m) {
        cplx acc = (*this)[m];
        for (int k = 0; k < m; ++k) acc -= r[static_cast<std::size_t>(k)] * o[m - k];
        r[static_cast<std::size_t>(m)] = acc / o[0];
    }
    return TaylorJet(std::move(r));
}

TaylorJet TaylorJet::operator+(cplx s) const {
    std::vector<cplx> r = c_;
    if (!r.empty()) r[0] += s;
    return TaylorJet(std::move(r));
}

TaylorJet TaylorJet::operator-(cplx s) const { return *this + (-s); }

TaylorJet TaylorJet::operator*(cplx s) const {
    std::vector<cplx> r = c_;
    for (auto& v : r) v *= s;
    return TaylorJet(std::move(r));
}

TaylorJet TaylorJet::deflated() const {
    if (order() <= 1)
        throw DerivativeUnavailable(
            "TaylorJet: jet order exhausted while cancelling a repeated node; "
            "seed a higher-order expansion");
    std::vector<cplx> r(c_.begin() + 1, c_.end());
    return TaylorJet(std::move(r));
}

TaylorJet TaylorJet::truncated(int order) const {
    if (order >= this->order()) return *this;
    std::vector<cplx> r(c_.begin(), c_.begin() + order);
    return TaylorJet(std::move(r));
}

TaylorJet jet_exp(const TaylorJet& g) {
    const int n = g.order();
    if (n == 0) return g;
    const cplx c0 = g.value();
    const TaylorJet v = g - c0;  // vanishing constant term
    TaylorJet acc = TaylorJet::constant(1.0, n);
    TaylorJet term = TaylorJet::constant(1.0, n);
    for (int k = 1; k < n; ++k) {
        term = term * v * (1.0 / double(k));
        acc = acc + term;
    }
    return acc * std::exp(c0);
}

}  // namespace mpsorf
