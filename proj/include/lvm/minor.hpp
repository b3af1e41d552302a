#pragma once

#include "lvm/colouring.hpp"
#include "lvm/construction.hpp"
#include "lvm/graph.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

namespace lvm {

enum class MinorKind { minor, quasi_minor, simple, double_pairs, triple };

std::string_view to_string(MinorKind k);

struct MinorWitness {
    BagFamily bags;
    MinorKind kind = MinorKind::minor;
};

/// Whether every bag has the size the kind demands (1, exactly 2, at least 3).
/// minor and quasi_minor place no size constraint.
bool matches_size_class(const MinorWitness& w);

/// Bags individually connected and pairwise joined by an edge. Structural
/// problems (empty, overlapping, out of range) throw instead of returning false.
bool verify_minor_model(const Graph& g, const BagFamily& bags);

/// Every pairwise union of bags induces a connected subgraph.
bool verify_quasi_minor(const Graph& g, const BagFamily& bags);

inline constexpr std::uint64_t default_search_budget = 50'000'000;

/// Lexicographically least maximum clique (sorted), by branch and bound with
/// greedy-colouring bounds. Throws ResourceLimit after `budget` search nodes.
std::vector<Vertex> max_clique(const Graph& g, std::uint64_t budget = default_search_budget);

/// Lexicographically least clique of exactly k vertices, if one exists.
std::optional<std::vector<Vertex>> find_clique(const Graph& g, std::size_t k,
                                               std::uint64_t budget = default_search_budget);

/// Number of k-vertex cliques.
std::uint64_t count_cliques(const Graph& g, std::size_t k);

/// Optional restriction on double-minor searches: when `group_of` is nonempty,
/// the chosen pairs may use at most one vertex from each group.
struct PairingConstraints {
    std::vector<std::size_t> group_of;

    static PairingConstraints one_per_index(const LvmInstance& inst);
};

/// Searches families of k disjoint edges that are pairwise joined by an edge.
/// Families are explored as increasing sequences of edges in lexicographic
/// order, so the first hit is the least such family.
std::optional<MinorWitness> find_double_minor(const Graph& g, std::size_t k,
                                              const PairingConstraints& constraints = {},
                                              std::uint64_t budget = default_search_budget);

using VertexPair = std::pair<Vertex, Vertex>;

/// Keeps a pair iff it shares no index group {a_i, b_i} with a pair kept
/// earlier. Throws InvalidArgument on a pair {a_i, b_i} or on overlapping pairs.
std::vector<VertexPair> greedy_independent_pairs(const LvmInstance& inst, std::span<const VertexPair> pairs);

inline constexpr std::size_t exact_minor_order_limit = 12;

struct ExactMinorResult {
    bool found = false;
    std::optional<MinorWitness> witness;
    std::uint64_t states = 0;
};

/// Exact K_t-minor decision on graphs of order <= 12 by contracting edges
/// inside each connected component, memoising refuted states by canonical
/// form. A returned witness always passes verify_minor_model.
ExactMinorResult has_kt_minor_exact(const Graph& g, std::size_t t, std::uint64_t budget = default_search_budget);

/// Exhaustive search for a K_t minor model whose bag sizes all lie in
/// [min_bag, max_bag]. Order limit as for has_kt_minor_exact.
std::optional<MinorWitness> find_minor_with_bag_sizes(const Graph& g, std::size_t t, std::size_t min_bag,
                                                      std::size_t max_bag,
                                                      std::uint64_t budget = default_search_budget);

/// floor(2n/3): a triple minor needs three vertices per bag out of 2n.
std::size_t triple_minor_cap(std::size_t n);

struct SizeClassCounts {
    std::size_t simple = 0;
    std::size_t doubles = 0;
    std::size_t triple = 0;

    friend bool operator==(const SizeClassCounts&, const SizeClassCounts&) = default;
};

SizeClassCounts decompose_minor(const BagFamily& bags);

/// Canonical byte string of g: equal for isomorphic graphs where the
/// refinement leaves small cells, otherwise the labelled adjacency string.
/// Distinct strings may still name isomorphic graphs; equal strings never
/// name non-isomorphic ones.
std::vector<std::uint8_t> canonical_key(const Graph& g);

} // namespace lvm
