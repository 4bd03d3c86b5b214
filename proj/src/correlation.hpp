#pragma once

#include "construction.hpp"

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

namespace zcz {

// How a full correlation profile is computed. Direct is the literal
// quadratic shift-and-sum and is the trusted reference; Transform goes
// through a DFT power-spectrum round trip. The two must agree within
// 1e-9 * period elementwise.
enum class Method {
    Direct,
    Transform,
};

const char* to_string(Method m);

// Default zero-classification tolerance: roundoff in an L-term sum of
// unit-magnitude terms scales with L.
inline double auto_tolerance(std::int64_t period)
{
    return 1e-9 * static_cast<double>(period);
}

// Complex correlation value for every shift tau in [0, period), plus the
// tolerance used to classify values as zero.
class CorrelationProfile {
public:
    CorrelationProfile(std::vector<std::complex<double>> values, double tolerance);

    std::int64_t period() const { return static_cast<std::int64_t>(values_.size()); }
    double tolerance() const { return tolerance_; }
    std::span<const std::complex<double>> values() const { return values_; }

    std::complex<double> value(std::int64_t shift) const; // shift taken mod period
    bool is_zero(std::int64_t shift) const { return std::abs(value(shift)) < tolerance_; }

private:
    std::vector<std::complex<double>> values_;
    double tolerance_;
};

// theta_{a,b}(shift) = sum_i a_i * conj(b_{i+shift mod L}), terms in
// ascending i. Shift may be any integer; it is normalized mod L. Throws
// MismatchError if the sequences differ in period or modulus.
std::complex<double> cross_correlation(const Sequence& a, const Sequence& b, std::int64_t shift);

// Full autocorrelation profile. tolerance <= 0 selects auto_tolerance(L).
// Shifts of the direct method may be evaluated in parallel; results are
// bitwise independent of the degree of parallelism.
CorrelationProfile auto_profile(const Sequence& s, Method method = Method::Direct,
                                double tolerance = 0.0);

// Full cross-correlation profile of a against b.
CorrelationProfile cross_profile(const Sequence& a, const Sequence& b,
                                 Method method = Method::Direct, double tolerance = 0.0);

} // namespace zcz
