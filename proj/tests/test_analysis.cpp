#include "analysis.hpp"
#include "construction.hpp"
#include "correlation.hpp"
#include "errors.hpp"

#include <doctest.h>

#include <array>
#include <cmath>
#include <numbers>
#include <vector>

using namespace zcz;

TEST_CASE("zcz profile extraction")
{
    SUBCASE("zcz n=0")
    {
        const auto p = auto_profile(build_zcz_sequence(0, RoundingVariant::Floor));
        const ZczProfile z = zcz_profile(p);
        CHECK(z.period == 24);
        CHECK(z.peak == doctest::Approx(24.0).epsilon(1e-9));
        REQUIRE(z.nonzero_offpeak.size() == 2);
        CHECK(z.nonzero_offpeak[0].shift == 6);
        CHECK(z.nonzero_offpeak[1].shift == 18);
        CHECK(std::abs(z.nonzero_offpeak[0].value - std::complex<double>{-6.0, 0.0}) < 1e-9 * 24);
        CHECK(std::abs(z.nonzero_offpeak[1].value - std::complex<double>{-6.0, 0.0}) < 1e-9 * 24);
        CHECK(z.zcz_width == 5);
        CHECK(z.offpeak_ratio == doctest::Approx(0.25).epsilon(1e-9));
    }
    SUBCASE("frank d=4 has an empty off-peak set")
    {
        const auto p = auto_profile(build_frank_sequence(4));
        const ZczProfile z = zcz_profile(p);
        CHECK(z.nonzero_offpeak.empty());
        CHECK(z.zcz_width == 15);
        CHECK(z.offpeak_ratio == 0.0);
    }
    SUBCASE("all-ones length 4 has no zone at all")
    {
        const auto p = auto_profile(Sequence({0, 0, 0, 0}, 1));
        const ZczProfile z = zcz_profile(p);
        REQUIRE(z.nonzero_offpeak.size() == 3);
        for (const auto& [shift, value] : z.nonzero_offpeak) {
            CHECK(std::abs(value - 4.0) < 1e-9 * 4);
        }
        CHECK(z.zcz_width == 0);
        CHECK(z.offpeak_ratio == doctest::Approx(1.0).epsilon(1e-9));
    }
}

TEST_CASE("off-peak ratio of the construction shrinks like sin(pi/N)/2")
{
    double previous = 1.0;
    for (std::int64_t n = 0; n <= 10; ++n) {
        const auto p = auto_profile(build_zcz_sequence(n, RoundingVariant::Floor));
        const ZczProfile z = zcz_profile(p);
        const double modulus = 6.0 * static_cast<double>(2 * n + 1);
        const double expected = std::sin(std::numbers::pi / modulus) / 2.0;
        CHECK(z.offpeak_ratio == doctest::Approx(expected).epsilon(1e-9));
        CHECK(z.offpeak_ratio < previous);
        previous = z.offpeak_ratio;
    }
}

TEST_CASE("closed-form off-peak value")
{
    CHECK(closed_form_offpeak(0) == doctest::Approx(-6.0).epsilon(1e-12));
    CHECK(closed_form_offpeak(1) == doctest::Approx(6.251334396009492).epsilon(1e-12));
    CHECK(closed_form_offpeak(3) == doctest::Approx(6.2773278612596375).epsilon(1e-12));
    CHECK_THROWS_AS(closed_form_offpeak(-1), InvalidArgument);

    // magnitude approaches 2*pi from below, sign alternates with n
    for (std::int64_t n = 0; n < 50; ++n) {
        const double v = closed_form_offpeak(n);
        CHECK(std::abs(v) < 2.0 * std::numbers::pi);
        CHECK((n % 2 == 0 ? v < 0.0 : v > 0.0));
    }
}

TEST_CASE("asymptote report")
{
    const std::array<std::int64_t, 5> ns{0, 1, 2, 3, 100};
    const auto rows = asymptote_report(ns);
    REQUIRE(rows.size() == 5);

    CHECK(rows[0].deviation == doctest::Approx(-0.28318530717958623).epsilon(1e-12));
    CHECK(std::abs(rows[4].deviation) < 1e-5);
    for (const auto& row : rows) {
        CHECK(row.deviation < 0.0);
    }
    for (std::size_t i = 1; i < rows.size(); ++i) {
        CHECK(std::abs(rows[i].deviation) < std::abs(rows[i - 1].deviation));
    }
    const std::vector<std::int64_t> empty;
    CHECK_THROWS_AS(asymptote_report(empty), InvalidArgument);
}

TEST_CASE("claim verification, floor variant")
{
    SUBCASE("n=0")
    {
        const ClaimReport r = verify_zcz_claims(0, RoundingVariant::Floor);
        CHECK(r.expected_shifts == std::vector<std::int64_t>{6, 18});
        REQUIRE(r.measured.size() == 2);
        CHECK(std::abs(r.measured[0].value - std::complex<double>{-6.0, 0.0}) < 1e-9 * 24);
        CHECK(r.shifts_match);
        CHECK(r.values_equal);
        CHECK(r.matches_closed_form);
        CHECK(r.imag_negligible);
        CHECK(r.closed_form_gated);
        CHECK(r.aop.condition1_holds());
        CHECK(r.aop_exceptions_match);
        CHECK(r.passed());
    }
    SUBCASE("n=3")
    {
        const ClaimReport r = verify_zcz_claims(3, RoundingVariant::Floor);
        CHECK(r.expected_shifts == std::vector<std::int64_t>{42, 126});
        REQUIRE(r.measured.size() == 2);
        CHECK(std::abs(r.measured[0].value - 6.2773278612596375) < 1e-9 * 168);
        CHECK(r.passed());
    }
    SUBCASE("an absurdly tight tolerance breaks the zero classification")
    {
        const ClaimReport r = verify_zcz_claims(0, RoundingVariant::Floor, 1e-30);
        CHECK(!r.passed());
    }
}

TEST_CASE("claim verification, ceiling variant")
{
    const ClaimReport r = verify_zcz_claims(0, RoundingVariant::Ceiling);
    CHECK(r.shifts_match);
    CHECK(r.values_equal);
    CHECK(r.imag_negligible);
    CHECK(!r.closed_form_gated);
    // measured value is the negated floor closed form; reported, not gated
    CHECK(!r.matches_closed_form);
    REQUIRE(r.measured.size() == 2);
    CHECK(std::abs(r.measured[0].value - std::complex<double>{6.0, 0.0}) < 1e-9 * 24);
    CHECK(r.aop.condition1_holds());
    CHECK(r.aop_exceptions_match);
    CHECK(r.passed());
}
