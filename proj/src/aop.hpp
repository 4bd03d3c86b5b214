#pragma once

#include "construction.hpp"
#include "correlation.hpp"

#include <complex>
#include <cstdint>
#include <vector>

namespace zcz {

// The two conditions of the array orthogonality property. A sequence whose
// associated array satisfies both is perfect; each surviving exception in
// condition 2 pins a non-zero off-peak value of the sequence.
enum class AopCondition {
    ColumnCross = 1,   // distinct columns cross-correlate to zero at all shifts
    AutocorrSum = 2,   // column autocorrelations sum to zero at all non-zero shifts
};

struct ColumnPairValue {
    std::int64_t column_a = 0;
    std::int64_t column_b = 0;
    std::int64_t shift = 0; // kappa, in [0, rows)
    std::complex<double> value;
};

struct AutocorrSumValue {
    std::int64_t shift = 0; // kappa, in (0, rows)
    std::complex<double> value;
};

// tau = quotient * divisor + remainder with 0 <= remainder < divisor.
struct ShiftDecomposition {
    std::int64_t quotient = 0;
    std::int64_t remainder = 0;
};

// Where a sequence-domain shift lands in the array domain: which AOP
// condition it exercises and the set of array shifts kappa it can touch.
struct ShiftImage {
    AopCondition condition;
    std::vector<std::int64_t> kappas; // ascending, deduplicated
};

ShiftDecomposition decompose_shift(std::int64_t tau, std::int64_t divisor);

// remainder == 0 hits condition 2 at kappa = quotient; otherwise condition 1
// at kappa = quotient + floor((r + remainder)/divisor) over all 0 <= r < divisor.
ShiftImage map_shift_to_kappa(std::int64_t tau, std::int64_t divisor);

// The rows x divisor array whose row-major flattening is s.
// Throws InvalidArgument unless divisor >= 1 and divisor divides s.period().
PhaseArray associate_array(const Sequence& s, std::int64_t divisor);

// Every (unordered column pair, shift) whose cross-correlation magnitude
// reaches tol. Empty result means condition 1 holds.
std::vector<ColumnPairValue> check_condition1(const PhaseArray& a, double tol);

// Every non-zero shift where the sum of column autocorrelations reaches tol.
std::vector<AutocorrSumValue> check_condition2(const PhaseArray& a, double tol);

struct AopReport {
    std::int64_t divisor = 1;
    double tolerance = 0.0;
    std::vector<ColumnPairValue> condition1_violations;
    std::vector<AutocorrSumValue> condition2_exceptions;

    bool condition1_holds() const { return condition1_violations.empty(); }
    std::vector<std::int64_t> condition2_shifts() const;
};

// Associates s with its divisor-column array and runs both condition checks.
// tolerance <= 0 selects auto_tolerance(rows).
AopReport check_aop(const Sequence& s, std::int64_t divisor, double tolerance = 0.0);

} // namespace zcz
