#include "construction.hpp"

#include "errors.hpp"

#include <string>
#include <utility>

namespace zcz {

const char* to_string(RoundingVariant v)
{
    return v == RoundingVariant::Floor ? "floor" : "ceiling";
}

Sequence::Sequence(std::vector<std::int64_t> exponents, std::int64_t modulus)
    : exponents_(std::move(exponents)), modulus_(modulus)
{
    if (modulus_ < 1) {
        throw InvalidArgument("Sequence: modulus must be >= 1, got " + std::to_string(modulus_));
    }
    if (exponents_.empty()) {
        throw InvalidArgument("Sequence: exponent list must be non-empty");
    }
    for (std::size_t i = 0; i < exponents_.size(); ++i) {
        if (exponents_[i] < 0 || exponents_[i] >= modulus_) {
            throw InvalidArgument("Sequence: exponent at index " + std::to_string(i) + " is "
                                  + std::to_string(exponents_[i]) + ", outside [0, "
                                  + std::to_string(modulus_) + ")");
        }
    }
}

PhaseArray::PhaseArray(std::int64_t rows, std::int64_t cols, std::int64_t modulus,
                       std::vector<std::int64_t> entries)
    : rows_(rows), cols_(cols), modulus_(modulus), entries_(std::move(entries))
{
    if (rows_ < 1 || cols_ < 1) {
        throw InvalidArgument("PhaseArray: rows and cols must be >= 1");
    }
    if (modulus_ < 1) {
        throw InvalidArgument("PhaseArray: modulus must be >= 1");
    }
    if (entries_.size() != static_cast<std::size_t>(rows_) * static_cast<std::size_t>(cols_)) {
        throw InvalidArgument("PhaseArray: entry count does not match rows*cols");
    }
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (entries_[i] < 0 || entries_[i] >= modulus_) {
            throw InvalidArgument("PhaseArray: entry at flat index " + std::to_string(i)
                                  + " is outside [0, " + std::to_string(modulus_) + ")");
        }
    }
}

Sequence PhaseArray::column(std::int64_t j) const
{
    if (j < 0 || j >= cols_) {
        throw InvalidArgument("PhaseArray::column: index " + std::to_string(j)
                              + " outside [0, " + std::to_string(cols_) + ")");
    }
    std::vector<std::int64_t> col;
    col.reserve(static_cast<std::size_t>(rows_));
    for (std::int64_t i = 0; i < rows_; ++i) {
        col.push_back(exponent_at(i, j));
    }
    return Sequence(std::move(col), modulus_);
}

PhaseArray build_zcz_array(std::int64_t n, RoundingVariant variant)
{
    if (n < 0) {
        throw InvalidArgument("build_zcz_array: n must be >= 0, got " + std::to_string(n));
    }
    if (n > kMaxZczParameter) {
        throw SizeLimitError("build_zcz_array: n = " + std::to_string(n)
                             + " exceeds the supported maximum " + std::to_string(kMaxZczParameter)
                             + " (index products would overflow 64-bit integers)");
    }
    const std::int64_t odd = 2 * n + 1;
    const std::int64_t rows = 12 * odd;
    const std::int64_t modulus = 6 * odd;

    std::vector<std::int64_t> entries;
    entries.reserve(static_cast<std::size_t>(rows) * 2);
    for (std::int64_t i = 0; i < rows; ++i) {
        for (std::int64_t j = 0; j < 2; ++j) {
            const std::int64_t p = i * (i + j); // fits: rows <= 12(2*kMax+1)
            const std::int64_t e = variant == RoundingVariant::Floor ? p / 2 : (p + 1) / 2;
            entries.push_back(reduce(e, modulus).exponent);
        }
    }
    return PhaseArray(rows, 2, modulus, std::move(entries));
}

Sequence flatten_row_major(const PhaseArray& a)
{
    std::vector<std::int64_t> exps(a.entries().begin(), a.entries().end());
    return Sequence(std::move(exps), a.modulus());
}

Sequence build_zcz_sequence(std::int64_t n, RoundingVariant variant)
{
    return flatten_row_major(build_zcz_array(n, variant));
}

Sequence build_frank_sequence(std::int64_t d)
{
    if (d < 1) {
        throw InvalidArgument("build_frank_sequence: d must be >= 1, got " + std::to_string(d));
    }
    if (d > kMaxFrankDivisor) {
        throw SizeLimitError("build_frank_sequence: d = " + std::to_string(d)
                             + " exceeds the supported maximum "
                             + std::to_string(kMaxFrankDivisor));
    }
    std::vector<std::int64_t> exps;
    exps.reserve(static_cast<std::size_t>(d) * static_cast<std::size_t>(d));
    for (std::int64_t i = 0; i < d; ++i) {
        for (std::int64_t j = 0; j < d; ++j) {
            exps.push_back((i * j) % d);
        }
    }
    return Sequence(std::move(exps), d);
}

} // namespace zcz
