#include "mpsorf/fft.hpp"

#include <cmath>
#include <numbers>

namespace mpsorf::detail {

void fft_pow2(std::vector<cplx>& data, int sign) {
    const std::size_t n = data.size();
    if (n == 0 || (n & (n - 1)) != 0)
        throw ValidationError("fft_pow2: length must be a power of two");

    // bit-reversal permutation
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(data[i], data[j]);
    }

    for (std::size_t len = 2; len <= n; len <<= 1) {
        const double ang = sign * 2.0 * std::numbers::pi / double(len);
        const cplx wlen = std::polar(1.0, ang);
        for (std::size_t i = 0; i < n; i += len) {
            cplx w{1.0, 0.0};
            for (std::size_t k = 0; k < len / 2; ++k) {
                const cplx u = data[i + k];
                const cplx v = data[i + k + len / 2] * w;
                data[i + k] = u + v;
                data[i + k + len / 2] = u - v;
                w *= wlen;
            }
        }
    }
}

std::vector<cplx> fourier_coefficients(std::span<const cplx> samples) {
    std::vector<cplx> work(samples.begin(), samples.end());
    fft_pow2(work, -1);
    const double inv = 1.0 / double(work.size());
    for (auto& c : work) c *= inv;
    return work;
}

std::vector<double> conjugate_function(std::span<const double> samples) {
    const std::size_t m = samples.size();
    std::vector<cplx> work(m);
    for (std::size_t j = 0; j < m; ++j) work[j] = samples[j];
    fft_pow2(work, -1);

    const cplx mi{0.0, -1.0};
    work[0] = 0.0;
    for (std::size_t k = 1; k < m / 2; ++k) work[k] *= mi;
    work[m / 2] = 0.0;  // Nyquist: sign ambiguous, real input keeps it real
    for (std::size_t k = m / 2 + 1; k < m; ++k) work[k] *= -mi;

    fft_pow2(work, +1);
    std::vector<double> out(m);
    const double inv = 1.0 / double(m);
    for (std::size_t j = 0; j < m; ++j) out[j] = work[j].real() * inv;
    return out;
}

cplx interpolate_samples(std::span<const cplx> samples, double theta) {
    const std::vector<cplx> c = fourier_coefficients(samples);
    const std::size_t m = c.size();
    // signed frequencies: k in [0, m/2) positive, (m/2, m) negative
    cplx acc{0.0, 0.0};
    for (std::size_t k = m / 2 + 1; k < m; ++k)
        acc += c[k] * std::polar(1.0, (double(k) - double(m)) * theta);
    for (std::size_t k = 0; k < m / 2; ++k)
        acc += c[k] * std::polar(1.0, double(k) * theta);
    acc += c[m / 2] * std::cos(double(m / 2) * theta);
    return acc;
}

}  // namespace mpsorf::detail
