#include "alphabet.hpp"
#include "errors.hpp"

#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

using namespace zcz;

TEST_CASE("reduce produces canonical residues")
{
    CHECK(reduce(12, 6).exponent == 0);
    CHECK(reduce(-1, 6).exponent == 5);
    CHECK(reduce(7, 6).exponent == 1);
    CHECK(reduce(0, 1).exponent == 0);
    CHECK(reduce(-13, 5).exponent == 2);
    CHECK(reduce(7, 6).modulus == 6);
}

TEST_CASE("reduce rejects non-positive modulus")
{
    CHECK_THROWS_AS(reduce(3, 0), InvalidArgument);
    CHECK_THROWS_AS(reduce(3, -2), InvalidArgument);
}

TEST_CASE("reduce is idempotent")
{
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<std::int64_t> raw(-1'000'000, 1'000'000);
    std::uniform_int_distribution<std::int64_t> mod(1, 997);
    for (int trial = 0; trial < 200; ++trial) {
        const std::int64_t m = mod(rng);
        const auto once = reduce(raw(rng), m);
        const auto twice = reduce(once.exponent, m);
        CHECK(once == twice);
        CHECK(once.exponent >= 0);
        CHECK(once.exponent < m);
    }
}

TEST_CASE("to_complex hits the unit circle at the expected angles")
{
    const auto one = to_complex(UnitRootExponent{0, 6});
    CHECK(std::abs(one - std::complex<double>{1.0, 0.0}) < 1e-12);

    const auto half_turn = to_complex(UnitRootExponent{3, 6});
    CHECK(std::abs(half_turn - std::complex<double>{-1.0, 0.0}) < 1e-12);

    const auto quarter_turn = to_complex(UnitRootExponent{1, 4});
    CHECK(std::abs(quarter_turn - std::complex<double>{0.0, 1.0}) < 1e-12);
}

TEST_CASE("to_complex values have unit magnitude")
{
    std::mt19937_64 rng(12);
    std::uniform_int_distribution<std::int64_t> mod(1, 5000);
    for (int trial = 0; trial < 200; ++trial) {
        const std::int64_t m = mod(rng);
        std::uniform_int_distribution<std::int64_t> exp(0, m - 1);
        const auto v = to_complex(UnitRootExponent{exp(rng), m});
        CHECK(std::abs(std::abs(v) - 1.0) < 1e-12);
    }
}

TEST_CASE("exponent addition maps to value multiplication")
{
    std::mt19937_64 rng(13);
    std::uniform_int_distribution<std::int64_t> raw(-10'000, 10'000);
    std::uniform_int_distribution<std::int64_t> mod(1, 1000);
    for (int trial = 0; trial < 300; ++trial) {
        const std::int64_t m = mod(rng);
        const std::int64_t a = raw(rng);
        const std::int64_t b = raw(rng);
        const auto sum_value = to_complex(reduce(a + b, m));
        const auto product = to_complex(reduce(a, m)) * to_complex(reduce(b, m));
        CHECK(std::abs(sum_value - product) < 1e-12);
    }
}

TEST_CASE("gaussian sum examples")
{
    const auto full = gaussian_sum(0, 6);
    CHECK(full.real() == 6.0);
    CHECK(full.imag() == 0.0);

    CHECK(std::abs(gaussian_sum(3, 6)) < 1e-12);

    // independent five-term summation for q=2, N=5
    std::complex<double> expected{0.0, 0.0};
    for (int k = 0; k < 5; ++k) {
        expected += std::polar(1.0, 2.0 * std::numbers::pi * (2.0 * k) / 5.0);
    }
    CHECK(std::abs(expected) < 1e-12);
    CHECK(std::abs(gaussian_sum(2, 5) - expected) < 1e-12);
}

TEST_CASE("gaussian sum vanishes exactly when q is not a multiple of the modulus")
{
    for (std::int64_t n = 1; n <= 64; ++n) {
        for (std::int64_t q = -2 * n; q <= 2 * n; ++q) {
            const auto sum = gaussian_sum(q, n);
            if (q % n == 0) {
                CHECK(sum.real() == static_cast<double>(n));
                CHECK(sum.imag() == 0.0);
            } else {
                CHECK(std::abs(sum) < 1e-10 * static_cast<double>(n));
            }
        }
    }
}
