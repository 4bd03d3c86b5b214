#include "fft.hpp"

#include <bit>
#include <cstdint>
#include <numbers>
#include <utility>

namespace zcz::fft {

namespace {

// In-place radix-2 DIT transform, size must be a power of two.
// sign = -1 forward, +1 inverse (unnormalized).
void transform_pow2(std::vector<cdouble>& a, double sign)
{
    const std::size_t n = a.size();
    if (n < 2) {
        return;
    }
    // bit reversal permutation
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) {
            j ^= bit;
        }
        j ^= bit;
        if (i < j) {
            std::swap(a[i], a[j]);
        }
    }
    for (std::size_t len = 2; len <= n; len <<= 1) {
        const double angle = sign * 2.0 * std::numbers::pi / static_cast<double>(len);
        for (std::size_t block = 0; block < n; block += len) {
            for (std::size_t j = 0; j < len / 2; ++j) {
                const cdouble w = std::polar(1.0, angle * static_cast<double>(j));
                const cdouble u = a[block + j];
                const cdouble v = a[block + j + len / 2] * w;
                a[block + j] = u + v;
                a[block + j + len / 2] = u - v;
            }
        }
    }
}

// Bluestein chirp: exp(sign * pi * m^2 / n), with m^2 reduced mod 2n in exact
// integer arithmetic (the chirp has period 2n in m).
cdouble chirp(std::size_t m, std::size_t n, double sign)
{
    const std::uint64_t m2 = (static_cast<std::uint64_t>(m) * m) % (2 * n);
    return std::polar(1.0, sign * std::numbers::pi * static_cast<double>(m2)
                               / static_cast<double>(n));
}

std::vector<cdouble> dft_bluestein(const std::vector<cdouble>& x)
{
    const std::size_t n = x.size();
    const std::size_t m = std::bit_ceil(2 * n - 1);

    // u = x * chirp, padded; v = conjugate chirp kernel over offsets (-n, n)
    std::vector<cdouble> u(m, cdouble{});
    std::vector<cdouble> v(m, cdouble{});
    for (std::size_t i = 0; i < n; ++i) {
        u[i] = x[i] * chirp(i, n, -1.0);
    }
    v[0] = chirp(0, n, +1.0);
    for (std::size_t j = 1; j < n; ++j) {
        v[j] = v[m - j] = chirp(j, n, +1.0);
    }

    transform_pow2(u, -1.0);
    transform_pow2(v, -1.0);
    for (std::size_t i = 0; i < m; ++i) {
        u[i] *= v[i];
    }
    transform_pow2(u, +1.0);

    std::vector<cdouble> out(n);
    const double scale = 1.0 / static_cast<double>(m);
    for (std::size_t k = 0; k < n; ++k) {
        out[k] = u[k] * scale * chirp(k, n, -1.0);
    }
    return out;
}

} // namespace

std::vector<cdouble> dft(const std::vector<cdouble>& x)
{
    if (x.size() < 2) {
        return x;
    }
    if (std::has_single_bit(x.size())) {
        std::vector<cdouble> a = x;
        transform_pow2(a, -1.0);
        return a;
    }
    return dft_bluestein(x);
}

std::vector<cdouble> idft(const std::vector<cdouble>& x)
{
    std::vector<cdouble> a(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        a[i] = std::conj(x[i]);
    }
    a = dft(a);
    const double scale = 1.0 / static_cast<double>(x.size());
    for (auto& value : a) {
        value = std::conj(value) * scale;
    }
    return a;
}

} // namespace zcz::fft
