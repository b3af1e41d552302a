#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <cstdint>
#include <string>

namespace lvm {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

enum class ValueFlag { ok, underflow, overflow };

const char* to_string(ValueFlag f);

/// A bound evaluated in log space. `value` is exp(log_value) when that is a
/// normal double; otherwise it is 0 or +inf and `flag` says which.
struct BoundReport {
    std::string formula_id;
    std::size_t n = 0;
    std::size_t parameter = 0;
    double log_value = 0.0;
    double value = 0.0;
    ValueFlag flag = ValueFlag::ok;
};

BoundReport make_bound_report(std::string formula_id, std::size_t n, std::size_t parameter, double log_value);

/// log C(n, k) via lgamma; -inf when k > n.
double log_choose(std::uint64_t n, std::uint64_t k);

/// Natural log of a positive rational, accurate for arbitrarily large parts.
double log_of(const Rational& r);

/// C(2n, k) (3/4)^C(k,2): union bound on some k-subset inducing a clique.
/// Requires 1 <= k <= 2n.
BoundReport simple_minor_bound(std::size_t n, std::size_t k);
Rational simple_minor_bound_exact(std::size_t n, std::size_t k);

/// (2n)^(2m) (255/256)^C(m,2): union bound on m group-disjoint pairs being
/// pairwise joined. Requires 1 <= m <= n.
BoundReport double_minor_bound(std::size_t n, std::size_t m);
Rational double_minor_bound_exact(std::size_t n, std::size_t m);

struct Probability {
    Rational exact;
    double value = 0.0;
};

/// Probability that two group-disjoint pairs have no edge between them: (1/4)^4.
Probability no_edge_between_pairs_prob();

/// Expected number of k-cliques in G_n: C(n,k) 2^k (3/4)^C(k,2); 0 for k > n.
double expected_clique_count(std::size_t n, std::size_t k);
Rational expected_clique_count_exact(std::size_t n, std::size_t k);

/// Expected number of valid quadruples up to rotation: n(n-1)(n-2)(n-3)/4 / 256.
double expected_quadruple_count(std::size_t n);
Rational expected_quadruple_count_exact(std::size_t n);

/// Union of the simple and double bounds together with the triple counting cap.
/// With probability at least 1 - failure, G_n has no clique on k_simple
/// vertices and no m_double group-disjoint pairwise-joined pairs. Since every
/// double minor on b bags keeps ceil(b/3) group-disjoint bags, double minors
/// with b >= 3 m_double - 2 bags are then excluded, and every K_p minor with
/// p >= min_excluded_minor is excluded.
struct CombinedBound {
    BoundReport simple;
    BoundReport doubles;
    double log_failure = 0.0;
    double failure = 0.0;
    std::size_t excluded_simple = 0;
    std::size_t excluded_double = 0;
    std::size_t triple_cap = 0;
    std::size_t min_excluded_minor = 0;
};

CombinedBound combined_minor_bound(std::size_t n, std::size_t k_simple, std::size_t m_double);

/// Smallest integer >= num * n / den.
std::size_t ceil_fraction(std::size_t n, std::uint64_t num, std::uint64_t den);

} // namespace lvm
