#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

namespace lvm {

enum class EventKind {
    quadruple_exists,       // some valid quadruple (Bernoulli)
    quadruple_count,        // number of valid quadruples up to rotation
    clique_at_least,        // clique on >= k vertices (Bernoulli)
    k_clique_count,         // number of k-cliques
    cross_pair_edge,        // random cross pair x_i y_j is an edge (Bernoulli)
    no_edge_between_pairs,  // two random group-disjoint pairs see no edge (Bernoulli)
    double_minor_at_least,  // double K_m minor exists (Bernoulli, n <= 12)
};

struct Event {
    EventKind kind = EventKind::quadruple_exists;
    std::size_t parameter = 0;

    bool is_bernoulli() const;
    /// e.g. "quadrupleExists", "cliqueAtLeast(4)".
    std::string id() const;
    /// Inverse of id(). Throws InvalidArgument on an unknown event.
    static Event parse(std::string_view id);

    friend bool operator==(const Event&, const Event&) = default;
};

inline constexpr std::size_t double_minor_event_n_limit = 12;
inline constexpr std::uint64_t min_trials_for_interval = 100;
/// Two-sided 99% standard normal quantile.
inline constexpr double z99 = 2.5758293035489004;

struct EstimateReport {
    std::string event_id;
    std::size_t n = 0;
    std::uint64_t trials = 0;
    std::uint64_t seed_base = 0;
    bool bernoulli = false;
    std::uint64_t successes = 0; // sum of outcomes; equals successes for Bernoulli events
    double mean = 0.0;
    double standard_error = 0.0;
    /// 99% normal-approximation interval, reported for trials >= 100.
    std::optional<std::pair<double, double>> interval99;

    friend bool operator==(const EstimateReport&, const EstimateReport&) = default;
};

/// Throws InvalidArgument if (event, n, trials) is not a valid experiment.
void validate_experiment(const Event& event, std::size_t n, std::uint64_t trials);

/// Outcome of one trial: the instance is generate(n, seed), and any extra
/// sampling (cross pairs) draws from SplitMix64 seeded with seed.
std::uint64_t trial_outcome(const Event& event, std::size_t n, std::uint64_t seed);

/// Reference implementation: trials run in order on the calling thread.
EstimateReport mc_estimate_serial(const Event& event, std::size_t n, std::uint64_t trials, std::uint64_t seed_base);

/// OpenMP kernel. Outcomes are integers summed exactly, so the report is
/// bitwise equal to mc_estimate_serial for any thread count. threads = 0 uses
/// the OpenMP default.
EstimateReport mc_estimate(const Event& event, std::size_t n, std::uint64_t trials, std::uint64_t seed_base,
                           int threads = 0);

} // namespace lvm
