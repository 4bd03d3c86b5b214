#include "correlation.hpp"

#include "errors.hpp"
#include "fft.hpp"
#include "parallel.hpp"

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>

namespace zcz {

namespace {

using cdouble = std::complex<double>;

// Complex values of a sequence via a per-modulus root table, so equal
// exponents map to bit-identical values.
std::vector<cdouble> to_values(const Sequence& s)
{
    std::vector<cdouble> roots(static_cast<std::size_t>(s.modulus()));
    for (std::int64_t e = 0; e < s.modulus(); ++e) {
        roots[static_cast<std::size_t>(e)] = to_complex(UnitRootExponent{e, s.modulus()});
    }
    std::vector<cdouble> values;
    values.reserve(static_cast<std::size_t>(s.period()));
    for (const std::int64_t e : s.exponents()) {
        values.push_back(roots[static_cast<std::size_t>(e)]);
    }
    return values;
}

std::int64_t normalize_shift(std::int64_t shift, std::int64_t period)
{
    std::int64_t r = shift % period;
    if (r < 0) {
        r += period;
    }
    return r;
}

void require_compatible(const Sequence& a, const Sequence& b)
{
    if (a.period() != b.period()) {
        throw MismatchError("correlation: sequence periods differ (" + std::to_string(a.period())
                            + " vs " + std::to_string(b.period()) + ")");
    }
    if (a.modulus() != b.modulus()) {
        throw MismatchError("correlation: sequence moduli differ (" + std::to_string(a.modulus())
                            + " vs " + std::to_string(b.modulus()) + ")");
    }
}

// One shift of sum_i a_i conj(b_{i+tau}), i ascending, wrap split in two runs.
cdouble shift_sum(std::span<const cdouble> a, std::span<const cdouble> b, std::int64_t tau)
{
    const std::int64_t period = static_cast<std::int64_t>(a.size());
    cdouble acc{0.0, 0.0};
    for (std::int64_t i = 0; i < period - tau; ++i) {
        acc += a[static_cast<std::size_t>(i)] * std::conj(b[static_cast<std::size_t>(i + tau)]);
    }
    for (std::int64_t i = period - tau; i < period; ++i) {
        acc += a[static_cast<std::size_t>(i)]
             * std::conj(b[static_cast<std::size_t>(i + tau - period)]);
    }
    return acc;
}

std::vector<cdouble> direct_profile(const std::vector<cdouble>& a, const std::vector<cdouble>& b)
{
    const std::int64_t period = static_cast<std::int64_t>(a.size());
    std::vector<cdouble> out(static_cast<std::size_t>(period));
    const std::int64_t min_chunk = std::max<std::int64_t>(1, 65536 / period);
    detail::parallel_chunks(period, min_chunk, [&](std::int64_t begin, std::int64_t end) {
        for (std::int64_t tau = begin; tau < end; ++tau) {
            out[static_cast<std::size_t>(tau)] = shift_sum(a, b, tau);
        }
    });
    return out;
}

// theta(tau) = (1/L) sum_k |A_k|^2 exp(-2 pi i tau k / L): the power spectrum
// pushed through a second forward transform.
std::vector<cdouble> transform_auto_profile(const std::vector<cdouble>& values)
{
    const auto spectrum = fft::dft(values);
    std::vector<cdouble> power(spectrum.size());
    for (std::size_t k = 0; k < spectrum.size(); ++k) {
        power[k] = cdouble{std::norm(spectrum[k]), 0.0};
    }
    auto out = fft::dft(power);
    const double scale = 1.0 / static_cast<double>(values.size());
    for (auto& v : out) {
        v *= scale;
    }
    return out;
}

// DFT of the cross profile is A_{-k} conj(B_{-k}).
std::vector<cdouble> transform_cross_profile(const std::vector<cdouble>& a,
                                             const std::vector<cdouble>& b)
{
    const std::size_t period = a.size();
    const auto sa = fft::dft(a);
    const auto sb = fft::dft(b);
    std::vector<cdouble> spec(period);
    for (std::size_t k = 0; k < period; ++k) {
        const std::size_t rk = k == 0 ? 0 : period - k;
        spec[k] = sa[rk] * std::conj(sb[rk]);
    }
    return fft::idft(spec);
}

} // namespace

const char* to_string(Method m)
{
    return m == Method::Direct ? "direct" : "transform";
}

CorrelationProfile::CorrelationProfile(std::vector<cdouble> values, double tolerance)
    : values_(std::move(values)), tolerance_(tolerance)
{
    if (values_.empty()) {
        throw InvalidArgument("CorrelationProfile: empty value list");
    }
    if (tolerance_ < 0.0) {
        throw InvalidArgument("CorrelationProfile: tolerance must be >= 0");
    }
}

cdouble CorrelationProfile::value(std::int64_t shift) const
{
    return values_[static_cast<std::size_t>(normalize_shift(shift, period()))];
}

cdouble cross_correlation(const Sequence& a, const Sequence& b, std::int64_t shift)
{
    require_compatible(a, b);
    const auto va = to_values(a);
    const auto vb = to_values(b);
    return shift_sum(va, vb, normalize_shift(shift, a.period()));
}

CorrelationProfile auto_profile(const Sequence& s, Method method, double tolerance)
{
    const double tol = tolerance > 0.0 ? tolerance : auto_tolerance(s.period());
    const auto values = to_values(s);
    auto profile = method == Method::Direct ? direct_profile(values, values)
                                            : transform_auto_profile(values);
    return CorrelationProfile(std::move(profile), tol);
}

CorrelationProfile cross_profile(const Sequence& a, const Sequence& b, Method method,
                                 double tolerance)
{
    require_compatible(a, b);
    const double tol = tolerance > 0.0 ? tolerance : auto_tolerance(a.period());
    const auto va = to_values(a);
    const auto vb = to_values(b);
    auto profile = method == Method::Direct ? direct_profile(va, vb)
                                            : transform_cross_profile(va, vb);
    return CorrelationProfile(std::move(profile), tol);
}

} // namespace zcz
