#include "lvm/bounds.hpp"

#include "lvm/error.hpp"
#include "lvm/minor.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace lvm {

const char* to_string(ValueFlag f) {
    switch (f) {
    case ValueFlag::ok: return "ok";
    case ValueFlag::underflow: return "underflow";
    case ValueFlag::overflow: return "overflow";
    }
    return "unknown";
}

BoundReport make_bound_report(std::string formula_id, std::size_t n, std::size_t parameter, double log_value) {
    BoundReport r{std::move(formula_id), n, parameter, log_value, 0.0, ValueFlag::ok};
    // log(DBL_MIN) and log(DBL_MAX): outside this window exp() is subnormal or inf.
    constexpr double lowest = -708.3964185322641;
    constexpr double highest = 709.782712893384;
    if (log_value < lowest) {
        r.flag = ValueFlag::underflow;
        r.value = 0.0;
    } else if (log_value > highest) {
        r.flag = ValueFlag::overflow;
        r.value = std::numeric_limits<double>::infinity();
    } else {
        r.value = std::exp(log_value);
    }
    return r;
}

double log_choose(std::uint64_t n, std::uint64_t k) {
    if (k > n) return -std::numeric_limits<double>::infinity();
    if (k == 0 || k == n) return 0.0;
    const double dn = static_cast<double>(n), dk = static_cast<double>(k);
    return std::lgamma(dn + 1.0) - std::lgamma(dk + 1.0) - std::lgamma(dn - dk + 1.0);
}

namespace {

double log_of_int(const BigInt& x) {
    const auto bits = boost::multiprecision::msb(x);
    if (bits < 1000) return std::log(x.convert_to<double>());
    const auto shift = bits - 60;
    BigInt top = x >> shift;
    return std::log(top.convert_to<double>()) + static_cast<double>(shift) * std::log(2.0);
}

double pairs_of(std::size_t k) { return k == 0 ? 0.0 : static_cast<double>(k) * static_cast<double>(k - 1) / 2.0; }

BigInt big_choose(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    BigInt r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

} // namespace

double log_of(const Rational& r) {
    if (r <= 0) throw InvalidArgument("log of a non-positive rational");
    return log_of_int(boost::multiprecision::numerator(r)) - log_of_int(boost::multiprecision::denominator(r));
}

BoundReport simple_minor_bound(std::size_t n, std::size_t k) {
    if (k < 1 || k > 2 * n)
        throw InvalidArgument("simple_minor_bound needs 1 <= k <= 2n, got n=" + std::to_string(n) +
                              " k=" + std::to_string(k));
    const double log_value = log_choose(2 * n, k) + pairs_of(k) * std::log(0.75);
    return make_bound_report("simple_minor_bound", n, k, log_value);
}

Rational simple_minor_bound_exact(std::size_t n, std::size_t k) {
    if (k < 1 || k > 2 * n) throw InvalidArgument("simple_minor_bound needs 1 <= k <= 2n");
    const auto e = static_cast<unsigned>(k * (k - 1) / 2);
    return Rational(big_choose(2 * n, k) * boost::multiprecision::pow(BigInt(3), e),
                    boost::multiprecision::pow(BigInt(4), e));
}

BoundReport double_minor_bound(std::size_t n, std::size_t m) {
    if (m < 1 || m > n)
        throw InvalidArgument("double_minor_bound needs 1 <= m <= n, got n=" + std::to_string(n) +
                              " m=" + std::to_string(m));
    const double log_value =
        2.0 * static_cast<double>(m) * std::log(2.0 * static_cast<double>(n)) + pairs_of(m) * std::log1p(-1.0 / 256.0);
    return make_bound_report("double_minor_bound", n, m, log_value);
}

Rational double_minor_bound_exact(std::size_t n, std::size_t m) {
    if (m < 1 || m > n) throw InvalidArgument("double_minor_bound needs 1 <= m <= n");
    const auto e = static_cast<unsigned>(m * (m - 1) / 2);
    return Rational(boost::multiprecision::pow(BigInt(2 * n), static_cast<unsigned>(2 * m)) *
                        boost::multiprecision::pow(BigInt(255), e),
                    boost::multiprecision::pow(BigInt(256), e));
}

Probability no_edge_between_pairs_prob() { return {Rational(1, 256), 1.0 / 256.0}; }

double expected_clique_count(std::size_t n, std::size_t k) {
    if (k > n) return 0.0;
    if (k == 0) return 1.0;
    return std::exp(log_choose(n, k) + static_cast<double>(k) * std::log(2.0) + pairs_of(k) * std::log(0.75));
}

Rational expected_clique_count_exact(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    const auto e = static_cast<unsigned>(k * (k - 1) / 2);
    return Rational(big_choose(n, k) * boost::multiprecision::pow(BigInt(2), static_cast<unsigned>(k)) *
                        boost::multiprecision::pow(BigInt(3), e),
                    boost::multiprecision::pow(BigInt(4), e));
}

double expected_quadruple_count(std::size_t n) {
    if (n < 4) return 0.0;
    const double d = static_cast<double>(n);
    return d * (d - 1) * (d - 2) * (d - 3) / 4.0 / 256.0;
}

Rational expected_quadruple_count_exact(std::size_t n) {
    if (n < 4) return 0;
    BigInt falling = BigInt(n) * (n - 1) * (n - 2) * (n - 3);
    return Rational(falling, 4 * 256);
}

CombinedBound combined_minor_bound(std::size_t n, std::size_t k_simple, std::size_t m_double) {
    CombinedBound c;
    c.simple = simple_minor_bound(n, k_simple);
    c.doubles = double_minor_bound(n, m_double);
    const double hi = std::max(c.simple.log_value, c.doubles.log_value);
    const double lo = std::min(c.simple.log_value, c.doubles.log_value);
    c.log_failure = hi + std::log1p(std::exp(lo - hi));
    c.failure = make_bound_report("combined", n, 0, c.log_failure).value;
    c.excluded_simple = k_simple;
    c.excluded_double = 3 * m_double - 2;
    c.triple_cap = triple_minor_cap(n);
    // a <= k_simple - 1, b <= 3 m_double - 3, c <= triple_cap.
    c.min_excluded_minor = k_simple + 3 * m_double + c.triple_cap - 3;
    return c;
}

std::size_t ceil_fraction(std::size_t n, std::uint64_t num, std::uint64_t den) {
    if (den == 0) throw InvalidArgument("fraction with zero denominator");
    const auto prod = static_cast<unsigned __int128>(n) * num;
    return static_cast<std::size_t>((prod + den - 1) / den);
}

} // namespace lvm
