#include "lvm/bounds.hpp"
#include "lvm/error.hpp"

#include <doctest.h>

#include <cmath>

using namespace lvm;

TEST_CASE("simple_minor_bound") {
    for (std::size_t n : {1, 5, 40}) {
        auto b = simple_minor_bound(n, 1);
        CHECK(b.value == doctest::Approx(2.0 * n));
    }
    // C(20,5) (3/4)^10 = 57218481/65536, frozen from exact fraction arithmetic.
    CHECK(simple_minor_bound_exact(10, 5) == Rational(57218481, 65536));
    CHECK(simple_minor_bound(10, 5).log_value == doctest::Approx(6.772032609612738).epsilon(1e-12));

    // Tighter than the coarse bound that replaces C(2n,k) by 2^(2n).
    auto big = simple_minor_bound(500, 100);
    const double coarse = 1000 * std::log(2.0) + 4950 * std::log(0.75);
    CHECK(big.log_value <= coarse);
    CHECK(big.log_value == doctest::Approx(-1102.112971203051).epsilon(1e-10));
    CHECK(big.flag == ValueFlag::underflow);

    CHECK_THROWS_AS(simple_minor_bound(10, 0), InvalidArgument);
    CHECK_THROWS_AS(simple_minor_bound(10, 21), InvalidArgument);
}

TEST_CASE("double_minor_bound") {
    for (std::size_t n : {1, 7, 100}) CHECK(double_minor_bound(n, 1).value == doctest::Approx(4.0 * n * n));
    // log of 200^100 (255/256)^1225, frozen from an mpmath evaluation.
    CHECK(double_minor_bound(100, 50).log_value == doctest::Approx(525.0372099864117).epsilon(1e-12));
    CHECK(double_minor_bound(100, 50).flag == ValueFlag::ok);
    CHECK_THROWS_AS(double_minor_bound(10, 11), InvalidArgument);
    CHECK_THROWS_AS(double_minor_bound(10, 0), InvalidArgument);

    // Eventually decreasing in m for fixed n; the peak sits near 511 ln(2n).
    const std::size_t n = 10000;
    double peak = -INFINITY;
    std::size_t peak_m = 0;
    for (std::size_t m = 1; m <= n; ++m) {
        auto v = double_minor_bound(n, m).log_value;
        if (v > peak) {
            peak = v;
            peak_m = m;
        }
    }
    CHECK(peak_m < n);
    for (std::size_t m = peak_m + 1; m <= n; ++m)
        CHECK(double_minor_bound(n, m).log_value < double_minor_bound(n, m - 1).log_value);
}

TEST_CASE("no_edge_between_pairs_prob") {
    auto p = no_edge_between_pairs_prob();
    CHECK(p.exact == Rational(1, 256));
    CHECK(p.value == 1.0 / 256.0);
    CHECK(1 - p.exact == Rational(255, 256));
}

TEST_CASE("expected counts") {
    for (std::size_t n : {1, 9, 30}) CHECK(expected_clique_count(n, 1) == doctest::Approx(2.0 * n));
    CHECK(expected_clique_count_exact(10, 3) == 405);
    CHECK(expected_clique_count(10, 3) == doctest::Approx(405.0).epsilon(1e-12));
    CHECK(expected_clique_count(5, 6) == 0.0);
    CHECK(expected_clique_count_exact(5, 6) == 0);

    CHECK(expected_quadruple_count(3) == 0.0);
    CHECK(expected_quadruple_count_exact(12) == Rational(1485, 128));
    CHECK(expected_quadruple_count(12) == doctest::Approx(11.6015625));
    CHECK(expected_quadruple_count_exact(4) == Rational(6, 256));
}

TEST_CASE("log-space and exact backends agree for n <= 100") {
    for (std::size_t n = 1; n <= 100; n += (n < 10 ? 1 : 9)) {
        for (std::size_t k = 1; k <= 2 * n; k += 1 + n / 5) {
            auto exact = log_of(simple_minor_bound_exact(n, k));
            CHECK(std::abs(simple_minor_bound(n, k).log_value - exact) <= 1e-9 * std::max(1.0, std::abs(exact)));
        }
        for (std::size_t m = 1; m <= n; m += 1 + n / 5) {
            auto exact = log_of(double_minor_bound_exact(n, m));
            CHECK(std::abs(double_minor_bound(n, m).log_value - exact) <= 1e-9 * std::max(1.0, std::abs(exact)));
        }
        for (std::size_t k = 1; k <= n; k += 1 + n / 5) {
            auto exact = log_of(expected_clique_count_exact(n, k));
            if (exact < -700) continue; // below double range
            CHECK(std::abs(std::log(expected_clique_count(n, k)) - exact) <= 1e-9 * std::max(1.0, std::abs(exact)));
        }
        if (n >= 4) CHECK(expected_quadruple_count(n) == doctest::Approx(expected_quadruple_count_exact(n).convert_to<double>()));
    }
}

TEST_CASE("bounds stay finite in log space up to n = 10^6") {
    for (std::size_t n : {1000u, 100000u, 1000000u}) {
        auto s = simple_minor_bound(n, n / 5);
        auto d = double_minor_bound(n, n / 20);
        CHECK(std::isfinite(s.log_value));
        CHECK(std::isfinite(d.log_value));
        CHECK(s.flag == ValueFlag::underflow);
    }
    auto huge = double_minor_bound(1000000, 10);
    CHECK(huge.flag == ValueFlag::ok);
    auto over = double_minor_bound(1000000, 100);
    CHECK(over.flag == ValueFlag::overflow);
    CHECK(std::isinf(over.value));
}

TEST_CASE("combined_minor_bound") {
    auto vacuous = combined_minor_bound(50, 1, 1);
    CHECK(vacuous.failure >= 1.0);
    CHECK(vacuous.triple_cap == 33);
    CHECK(vacuous.min_excluded_minor == 1 + 3 + 33 - 3);

    for (std::size_t n : {3u, 10u, 999u}) CHECK(combined_minor_bound(n, 1, 1).triple_cap == 2 * n / 3);

    auto c = combined_minor_bound(1000000, 100, 16000);
    CHECK(c.log_failure < std::log(1e-6));
    CHECK(c.excluded_double == 3 * 16000 - 2);
    CHECK(c.min_excluded_minor == 100 + 48000 + 666666 - 3);
    CHECK(static_cast<double>(c.min_excluded_minor) < 0.75 * 1000000);

    // The failure bound is the sum of its two parts.
    auto mid = combined_minor_bound(200, 40, 3);
    CHECK(std::exp(mid.log_failure) == doctest::Approx(mid.simple.value + mid.doubles.value));
}

TEST_CASE("ceil_fraction") {
    CHECK(ceil_fraction(50, 2, 10) == 10);
    CHECK(ceil_fraction(51, 2, 10) == 11);
    CHECK(ceil_fraction(1000, 5, 100) == 50);
    CHECK(ceil_fraction(0, 1, 3) == 0);
    CHECK_THROWS_AS(ceil_fraction(3, 1, 0), InvalidArgument);
}
