#include "mpsorf/szego.hpp"

#include <cmath>

#include "mpsorf/fft.hpp"

namespace mpsorf {

SzegoFunction::SzegoFunction(const CircleMeasure& mu) : grid_(mu.grid()), clipped_(0) {
    const auto& d = mu.density();
    half_log_.resize(d.size());
    for (std::size_t j = 0; j < d.size(); ++j) {
        double v = d[j];
        if (v < density_floor) {
            v = density_floor;
            ++clipped_;
        }
        half_log_[j] = 0.5 * std::log(v);
    }
    if (clip_fraction() > 0.05)
        throw NotSzego("SzegoFunction: more than 5% of the density samples clipped (" +
                       std::to_string(clipped_) + " of " + std::to_string(d.size()) + ")");
    half_log_conj_ = detail::conjugate_function(half_log_);
    s0_ = std::exp(integrate_real(grid_, half_log_));
}

double SzegoFunction::clip_fraction() const {
    return double(clipped_) / double(grid_.size());
}

cplx SzegoFunction::at_interior(cplx z) const {
    if (!(std::abs(z) < 1.0))
        throw ValidationError("SzegoFunction::at_interior: z must be interior");
    const auto& nodes = grid_.nodes();
    long double re = 0.0L, im = 0.0L;
    for (std::size_t j = 0; j < nodes.size(); ++j) {
        const cplx v = (nodes[j] + z) / (nodes[j] - z) * half_log_[j];
        re += v.real();
        im += v.imag();
    }
    const long double inv = 1.0L / static_cast<long double>(grid_.size());
    return std::exp(cplx{static_cast<double>(re * inv), static_cast<double>(im * inv)});
}

cplx SzegoFunction::at_node(int j) const {
    if (j < 0 || j >= grid_.size())
        throw ValidationError("SzegoFunction::at_node: index out of range");
    const auto k = static_cast<std::size_t>(j);
    return std::exp(cplx{half_log_[k], half_log_conj_[k]});
}

std::vector<cplx> SzegoFunction::boundary_samples() const {
    std::vector<cplx> out(half_log_.size());
    for (std::size_t j = 0; j < out.size(); ++j)
        out[j] = std::exp(cplx{half_log_[j], half_log_conj_[j]});
    return out;
}

}  // namespace mpsorf
