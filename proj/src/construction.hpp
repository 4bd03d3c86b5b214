#pragma once

#include "alphabet.hpp"

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

namespace zcz {

// Which way the half-integer index function rounds. Both variants produce a
// valid ZCZ construction; they differ in the sign of the off-peak value.
enum class RoundingVariant {
    Floor,
    Ceiling,
};

const char* to_string(RoundingVariant v);

// A periodic sequence over the modulus()-th roots of unity, stored as
// canonical exponent residues.
class Sequence {
public:
    // Throws InvalidArgument if exponents is empty, modulus < 1, or any
    // exponent is outside [0, modulus) (the message names the first offending
    // index).
    Sequence(std::vector<std::int64_t> exponents, std::int64_t modulus);

    std::int64_t period() const { return static_cast<std::int64_t>(exponents_.size()); }
    std::int64_t modulus() const { return modulus_; }
    std::span<const std::int64_t> exponents() const { return exponents_; }

    UnitRootExponent at(std::int64_t i) const
    {
        return UnitRootExponent{exponents_[static_cast<std::size_t>(i)], modulus_};
    }
    std::complex<double> value_at(std::int64_t i) const { return to_complex(at(i)); }

    bool operator==(const Sequence&) const = default;

private:
    std::vector<std::int64_t> exponents_;
    std::int64_t modulus_;
};

// An R x C array of unit-root exponents sharing one modulus, row-major.
// The column count is the divisor of the associated sequence.
class PhaseArray {
public:
    Sequence column(std::int64_t j) const; // column j as a standalone sequence

    PhaseArray(std::int64_t rows, std::int64_t cols, std::int64_t modulus,
               std::vector<std::int64_t> entries);

    std::int64_t rows() const { return rows_; }
    std::int64_t cols() const { return cols_; }
    std::int64_t modulus() const { return modulus_; }

    std::int64_t exponent_at(std::int64_t i, std::int64_t j) const
    {
        return entries_[static_cast<std::size_t>(i * cols_ + j)];
    }
    UnitRootExponent at(std::int64_t i, std::int64_t j) const
    {
        return UnitRootExponent{exponent_at(i, j), modulus_};
    }
    std::span<const std::int64_t> entries() const { return entries_; }

    bool operator==(const PhaseArray&) const = default;

private:
    std::int64_t rows_;
    std::int64_t cols_;
    std::int64_t modulus_;
    std::vector<std::int64_t> entries_;
};

// Largest n for which every intermediate index product i*(i+j) in
// build_zcz_array fits a 64-bit integer, and largest Frank divisor for which
// i*j and d*d do. Larger inputs are rejected with SizeLimitError rather than
// silently wrapping.
inline constexpr std::int64_t kMaxZczParameter = 126541687;
inline constexpr std::int64_t kMaxFrankDivisor = 3037000499;

// The 12(2n+1) x 2 array A[i][j] = omega^{round(i*(i+j)/2)} over the
// 6(2n+1)-th roots of unity, with round = floor or ceiling on the
// half-integer. Throws InvalidArgument for n < 0 and SizeLimitError for
// n > kMaxZczParameter.
PhaseArray build_zcz_array(std::int64_t n, RoundingVariant variant);

// Row-major enumeration: s[i*C + j] = A[i][j], period rows*cols.
Sequence flatten_row_major(const PhaseArray& a);

// flatten_row_major(build_zcz_array(n, variant)): period 24(2n+1) over the
// 6(2n+1)-th roots of unity. Off-peak autocorrelation vanishes everywhere
// except shifts 6(2n+1) and 18(2n+1).
Sequence build_zcz_sequence(std::int64_t n, RoundingVariant variant);

// Frank sequence of period d^2 over the d-th roots of unity: the row-major
// flattening of F[i][j] = omega^{i j}. Perfect periodic autocorrelation;
// used as an independent oracle for the correlation engine.
Sequence build_frank_sequence(std::int64_t d);

} // namespace zcz
