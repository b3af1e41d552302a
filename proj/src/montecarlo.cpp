#include "lvm/montecarlo.hpp"

#include "lvm/construction.hpp"
#include "lvm/error.hpp"
#include "lvm/minor.hpp"
#include "lvm/rng.hpp"

#include <cmath>
#include <exception>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace lvm {

namespace {

struct EventName {
    EventKind kind;
    std::string_view name;
    bool parameterised;
};

constexpr EventName event_names[] = {
    {EventKind::quadruple_exists, "quadrupleExists", false},
    {EventKind::quadruple_count, "quadrupleCount", false},
    {EventKind::clique_at_least, "cliqueAtLeast", true},
    {EventKind::k_clique_count, "kCliqueCount", true},
    {EventKind::cross_pair_edge, "crossPairEdge", false},
    {EventKind::no_edge_between_pairs, "noEdgeBetweenPairs", false},
    {EventKind::double_minor_at_least, "doubleMinorAtLeast", true},
};

const EventName& name_of(EventKind k) {
    for (const auto& e : event_names)
        if (e.kind == k) return e;
    throw InvalidArgument("unknown event kind");
}

} // namespace

bool Event::is_bernoulli() const {
    return kind != EventKind::quadruple_count && kind != EventKind::k_clique_count;
}

std::string Event::id() const {
    const auto& e = name_of(kind);
    std::string out(e.name);
    if (e.parameterised) out += "(" + std::to_string(parameter) + ")";
    return out;
}

Event Event::parse(std::string_view id) {
    auto open = id.find('(');
    auto head = id.substr(0, open);
    for (const auto& e : event_names) {
        if (e.name != head) continue;
        if (!e.parameterised) {
            if (open != std::string_view::npos) break;
            return Event{e.kind, 0};
        }
        if (open == std::string_view::npos || id.back() != ')') break;
        auto digits = id.substr(open + 1, id.size() - open - 2);
        if (digits.empty() || digits.find_first_not_of("0123456789") != std::string_view::npos) break;
        return Event{e.kind, std::stoull(std::string(digits))};
    }
    throw InvalidArgument("unknown event '" + std::string(id) + "'");
}

void validate_experiment(const Event& event, std::size_t n, std::uint64_t trials) {
    if (trials == 0) throw InvalidArgument("at least one trial is required");
    if (n == 0) throw InvalidArgument("n must be at least 1");
    switch (event.kind) {
    case EventKind::clique_at_least:
    case EventKind::k_clique_count:
        if (event.parameter == 0) throw InvalidArgument(event.id() + ": k must be at least 1");
        break;
    case EventKind::cross_pair_edge:
        if (n < 2) throw InvalidArgument("crossPairEdge needs n >= 2");
        break;
    case EventKind::no_edge_between_pairs:
        if (n < 4) throw InvalidArgument("noEdgeBetweenPairs needs n >= 4");
        break;
    case EventKind::double_minor_at_least:
        if (event.parameter == 0) throw InvalidArgument(event.id() + ": m must be at least 1");
        if (n > double_minor_event_n_limit)
            throw InvalidArgument("doubleMinorAtLeast is limited to n <= " +
                                  std::to_string(double_minor_event_n_limit));
        break;
    default: break;
    }
}

std::uint64_t trial_outcome(const Event& event, std::size_t n, std::uint64_t seed) {
    const auto inst = generate(n, seed);
    SplitMix64 extra(seed);
    switch (event.kind) {
    case EventKind::quadruple_exists: return find_quadruple(inst).has_value() ? 1 : 0;
    case EventKind::quadruple_count: return count_quadruples(inst);
    case EventKind::clique_at_least: return find_clique(inst.graph(), event.parameter).has_value() ? 1 : 0;
    case EventKind::k_clique_count: return count_cliques(inst.graph(), event.parameter);
    case EventKind::cross_pair_edge: {
        const auto i = uniform_below(extra, n) + 1;
        auto j = uniform_below(extra, n - 1) + 1;
        if (j >= i) ++j;
        const auto x = static_cast<Side>(uniform_below(extra, 2));
        const auto y = static_cast<Side>(uniform_below(extra, 2));
        return inst.cross_edge(x, i, y, j) ? 1 : 0;
    }
    case EventKind::no_edge_between_pairs: {
        // Partial Fisher-Yates draw of four distinct indices.
        std::vector<std::size_t> idx(n);
        for (std::size_t p = 0; p < n; ++p) idx[p] = p + 1;
        for (std::size_t p = 0; p < 4; ++p) std::swap(idx[p], idx[p + uniform_below(extra, n - p)]);
        Vertex v[4];
        for (std::size_t p = 0; p < 4; ++p) v[p] = vertex_of(static_cast<Side>(uniform_below(extra, 2)), idx[p]);
        const auto& g = inst.graph();
        const bool joined = g.adjacent(v[0], v[2]) || g.adjacent(v[0], v[3]) || g.adjacent(v[1], v[2]) ||
                            g.adjacent(v[1], v[3]);
        return joined ? 0 : 1;
    }
    case EventKind::double_minor_at_least:
        return find_double_minor(inst.graph(), event.parameter).has_value() ? 1 : 0;
    }
    throw InvalidArgument("unknown event kind");
}

namespace {

EstimateReport summarise(const Event& event, std::size_t n, std::uint64_t seed_base,
                         const std::vector<std::uint64_t>& outcomes) {
    EstimateReport r;
    r.event_id = event.id();
    r.n = n;
    r.trials = outcomes.size();
    r.seed_base = seed_base;
    r.bernoulli = event.is_bernoulli();

    unsigned __int128 sum = 0, sum_sq = 0;
    for (auto x : outcomes) {
        sum += x;
        sum_sq += static_cast<unsigned __int128>(x) * x;
    }
    r.successes = static_cast<std::uint64_t>(sum);
    const long double t = static_cast<long double>(r.trials);
    const long double mean = static_cast<long double>(sum) / t;
    r.mean = static_cast<double>(mean);
    if (r.trials > 1) {
        long double ss = static_cast<long double>(sum_sq) - static_cast<long double>(sum) * mean;
        if (ss < 0) ss = 0;
        r.standard_error = static_cast<double>(std::sqrt(ss / (t - 1) / t));
    }
    if (r.trials >= min_trials_for_interval)
        r.interval99 = std::make_pair(r.mean - z99 * r.standard_error, r.mean + z99 * r.standard_error);
    return r;
}

} // namespace

EstimateReport mc_estimate_serial(const Event& event, std::size_t n, std::uint64_t trials, std::uint64_t seed_base) {
    validate_experiment(event, n, trials);
    std::vector<std::uint64_t> outcomes(trials);
    for (std::uint64_t t = 0; t < trials; ++t) outcomes[t] = trial_outcome(event, n, trial_seed(seed_base, t));
    return summarise(event, n, seed_base, outcomes);
}

EstimateReport mc_estimate(const Event& event, std::size_t n, std::uint64_t trials, std::uint64_t seed_base,
                           int threads) {
    validate_experiment(event, n, trials);
    std::vector<std::uint64_t> outcomes(trials);
    std::exception_ptr failure;
    const auto count = static_cast<std::int64_t>(trials);
#ifdef _OPENMP
    const int team = threads > 0 ? threads : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 16) num_threads(team)
#else
    (void)threads;
#endif
    for (std::int64_t t = 0; t < count; ++t) {
        try {
            outcomes[static_cast<std::size_t>(t)] =
                trial_outcome(event, n, trial_seed(seed_base, static_cast<std::uint64_t>(t)));
        } catch (...) {
#ifdef _OPENMP
#pragma omp critical(lvm_mc_failure)
#endif
            if (!failure) failure = std::current_exception();
        }
    }
    if (failure) std::rethrow_exception(failure);
    return summarise(event, n, seed_base, outcomes);
}

} // namespace lvm
