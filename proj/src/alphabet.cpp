#include "alphabet.hpp"

#include "errors.hpp"

#include <numbers>
#include <string>

namespace zcz {

UnitRootExponent reduce(std::int64_t raw_exponent, std::int64_t modulus)
{
    if (modulus < 1) {
        throw InvalidArgument("reduce: modulus must be >= 1, got " + std::to_string(modulus));
    }
    std::int64_t r = raw_exponent % modulus;
    if (r < 0) {
        r += modulus;
    }
    return UnitRootExponent{r, modulus};
}

std::complex<double> to_complex(const UnitRootExponent& e)
{
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(e.exponent)
                       / static_cast<double>(e.modulus);
    return std::polar(1.0, angle);
}

std::complex<double> gaussian_sum(std::int64_t q, std::int64_t modulus)
{
    const std::int64_t step = reduce(q, modulus).exponent;
    // Exponent advances by q mod N each term; no q*k product can overflow.
    std::complex<double> acc{0.0, 0.0};
    std::int64_t e = 0;
    for (std::int64_t k = 0; k < modulus; ++k) {
        acc += to_complex(UnitRootExponent{e, modulus});
        e += step;
        if (e >= modulus) {
            e -= modulus;
        }
    }
    return acc;
}

} // namespace zcz
