#pragma once

#include <complex>
#include <cstdint>

namespace zcz {

// One element of the cyclic group of N-th roots of unity, kept in the exact
// integer exponent domain: the value is exp(2*pi*sqrt(-1) * exponent / modulus).
// All construction-time arithmetic stays on exponents; conversion to complex
// happens only when a correlation or analysis actually needs numbers.
struct UnitRootExponent {
    std::int64_t exponent = 0; // canonical residue in [0, modulus)
    std::int64_t modulus = 1;

    bool operator==(const UnitRootExponent&) const = default;
};

// Canonical residue of raw_exponent mod modulus, in [0, modulus).
// Negative inputs map to the non-negative representative. Throws
// InvalidArgument for modulus < 1.
UnitRootExponent reduce(std::int64_t raw_exponent, std::int64_t modulus);

// exp(2*pi*i * e.exponent / e.modulus) in double precision.
std::complex<double> to_complex(const UnitRootExponent& e);

// Sum_{k=0}^{modulus-1} omega^{q k} with omega the primitive modulus-th root
// of unity. Equals modulus when q == 0 (mod modulus) -- bit-exactly, since
// every term reduces to 1 -- and cancels to zero otherwise.
std::complex<double> gaussian_sum(std::int64_t q, std::int64_t modulus);

} // namespace zcz
