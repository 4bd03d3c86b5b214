#include "aop.hpp"

#include "errors.hpp"

#include <algorithm>
#include <string>
#include <utility>

namespace zcz {

ShiftDecomposition decompose_shift(std::int64_t tau, std::int64_t divisor)
{
    if (divisor < 1) {
        throw InvalidArgument("decompose_shift: divisor must be >= 1");
    }
    if (tau < 0) {
        throw InvalidArgument("decompose_shift: tau must be >= 0");
    }
    return ShiftDecomposition{tau / divisor, tau % divisor};
}

ShiftImage map_shift_to_kappa(std::int64_t tau, std::int64_t divisor)
{
    const auto [quotient, remainder] = decompose_shift(tau, divisor);
    if (remainder == 0) {
        return ShiftImage{AopCondition::AutocorrSum, {quotient}};
    }
    std::vector<std::int64_t> kappas;
    for (std::int64_t r = 0; r < divisor; ++r) {
        kappas.push_back(quotient + (r + remainder) / divisor);
    }
    std::sort(kappas.begin(), kappas.end());
    kappas.erase(std::unique(kappas.begin(), kappas.end()), kappas.end());
    return ShiftImage{AopCondition::ColumnCross, std::move(kappas)};
}

PhaseArray associate_array(const Sequence& s, std::int64_t divisor)
{
    if (divisor < 1) {
        throw InvalidArgument("associate_array: divisor must be >= 1");
    }
    if (s.period() % divisor != 0) {
        throw InvalidArgument("associate_array: divisor " + std::to_string(divisor)
                              + " does not divide the period " + std::to_string(s.period()));
    }
    std::vector<std::int64_t> entries(s.exponents().begin(), s.exponents().end());
    return PhaseArray(s.period() / divisor, divisor, s.modulus(), std::move(entries));
}

std::vector<ColumnPairValue> check_condition1(const PhaseArray& a, double tol)
{
    std::vector<ColumnPairValue> violations;
    for (std::int64_t ca = 0; ca < a.cols(); ++ca) {
        const Sequence col_a = a.column(ca);
        for (std::int64_t cb = ca + 1; cb < a.cols(); ++cb) {
            const CorrelationProfile profile = cross_profile(col_a, a.column(cb));
            for (std::int64_t kappa = 0; kappa < a.rows(); ++kappa) {
                const auto value = profile.value(kappa);
                if (std::abs(value) >= tol) {
                    violations.push_back(ColumnPairValue{ca, cb, kappa, value});
                }
            }
        }
    }
    return violations;
}

std::vector<AutocorrSumValue> check_condition2(const PhaseArray& a, double tol)
{
    std::vector<std::complex<double>> sums(static_cast<std::size_t>(a.rows()), {0.0, 0.0});
    for (std::int64_t j = 0; j < a.cols(); ++j) {
        const CorrelationProfile profile = auto_profile(a.column(j));
        for (std::int64_t kappa = 0; kappa < a.rows(); ++kappa) {
            sums[static_cast<std::size_t>(kappa)] += profile.value(kappa);
        }
    }
    std::vector<AutocorrSumValue> exceptions;
    for (std::int64_t kappa = 1; kappa < a.rows(); ++kappa) {
        const auto value = sums[static_cast<std::size_t>(kappa)];
        if (std::abs(value) >= tol) {
            exceptions.push_back(AutocorrSumValue{kappa, value});
        }
    }
    return exceptions;
}

std::vector<std::int64_t> AopReport::condition2_shifts() const
{
    std::vector<std::int64_t> shifts;
    shifts.reserve(condition2_exceptions.size());
    for (const auto& e : condition2_exceptions) {
        shifts.push_back(e.shift);
    }
    return shifts;
}

AopReport check_aop(const Sequence& s, std::int64_t divisor, double tolerance)
{
    const PhaseArray array = associate_array(s, divisor);
    const double tol = tolerance > 0.0 ? tolerance : auto_tolerance(array.rows());
    AopReport report;
    report.divisor = divisor;
    report.tolerance = tol;
    report.condition1_violations = check_condition1(array, tol);
    report.condition2_exceptions = check_condition2(array, tol);
    return report;
}

} // namespace zcz
