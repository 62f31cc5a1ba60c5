#include "mpsorf/grid.hpp"

#include <cmath>
#include <numbers>

namespace mpsorf {

namespace {

bool is_pow2(int m) { return m > 0 && (m & (m - 1)) == 0; }

double wrap_angle(double t) {
    const double twopi = 2.0 * std::numbers::pi;
    t = std::fmod(t, twopi);
    if (t < 0) t += twopi;
    return t;
}

}  // namespace

CircleGrid::CircleGrid(int m, double phase) : m_(m), phase_(phase) {
    if (!is_pow2(m) || m < 256)
        throw ValidationError("CircleGrid: M must be a power of two >= 256");
    spacing_ = 2.0 * std::numbers::pi / double(m);
    nodes_.resize(static_cast<std::size_t>(m));
    for (int j = 0; j < m; ++j)
        nodes_[static_cast<std::size_t>(j)] = std::polar(1.0, phase + spacing_ * j);
}

CircleGrid CircleGrid::with_clearance(int m, std::span<const double> thetas) {
    const double spacing = 2.0 * std::numbers::pi / double(m);
    for (double th : thetas) {
        const double local = wrap_angle(th) / spacing;
        const double frac = std::abs(local - std::round(local)) * spacing;
        if (frac < 1e-9) return CircleGrid(m, 0.5 * spacing);
    }
    return CircleGrid(m, 0.0);
}

cplx integrate(const CircleGrid& grid, std::span<const cplx> samples) {
    if (static_cast<int>(samples.size()) != grid.size())
        throw ValidationError("integrate: sample count does not match grid");
    long double re = 0.0L, im = 0.0L;
    for (const cplx& s : samples) {
        re += s.real();
        im += s.imag();
    }
    const long double inv = 1.0L / static_cast<long double>(grid.size());
    return {static_cast<double>(re * inv), static_cast<double>(im * inv)};
}

double integrate_real(const CircleGrid& grid, std::span<const double> samples) {
    if (static_cast<int>(samples.size()) != grid.size())
        throw ValidationError("integrate_real: sample count does not match grid");
    long double acc = 0.0L;
    for (double s : samples) acc += s;
    return static_cast<double>(acc / static_cast<long double>(grid.size()));
}

}  // namespace mpsorf
