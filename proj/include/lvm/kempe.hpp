#pragma once

#include "lvm/colouring.hpp"
#include "lvm/graph.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace lvm {

/// Maximal connected set of vertices coloured with one of two colours.
struct KempeChain {
    std::vector<Vertex> vertices; // sorted
    std::pair<Colour, Colour> colours; // first < second

    friend bool operator==(const KempeChain&, const KempeChain&) = default;
};

/// The chain through v for colours {c(v), other}. Requires c proper and
/// other != c(v), both inside the palette.
KempeChain kempe_chain(const Graph& g, const Colouring& c, Vertex v, Colour other);

/// Checks the three chain invariants (colours, connectivity, maximality)
/// against c.
bool is_valid_chain(const Graph& g, const Colouring& c, const KempeChain& chain);

/// Swaps the chain's two colours on its vertices. Throws InvalidArgument on a
/// stale chain.
Colouring apply_kempe_change(const Graph& g, const Colouring& c, const KempeChain& chain);

/// Every pair of nonempty colour classes induces a connected subgraph, and
/// when some palette colour is unused every class is a single vertex.
/// Throws InvalidArgument on an improper colouring.
bool is_frozen(const Graph& g, const Colouring& c);

/// Applies every Kempe change available in c and reports whether all of them
/// keep partition_of unchanged. No frozen precondition.
bool kempe_changes_preserve_partition(const Graph& g, const Colouring& c);

/// kempe_changes_preserve_partition with is_frozen as a checked precondition.
bool frozen_class_check(const Graph& g, const Colouring& c);

inline constexpr std::size_t default_colouring_cap = 1'000'000;

/// All proper colourings with palette k in lexicographic order. Throws
/// ResourceLimit once more than `cap` would be produced.
std::vector<Colouring> enumerate_proper_colourings(const Graph& g, std::size_t k,
                                                   std::size_t cap = default_colouring_cap);

struct KempeClassReport {
    /// Each class sorted; classes ordered by their least (representative) member.
    std::vector<std::vector<Colouring>> classes;
    /// Distinct partitions occurring in each class, sorted.
    std::vector<std::vector<ColourPartition>> partition_classes;
    std::size_t colouring_count = 0;

    std::size_t class_count() const { return classes.size(); }
    /// Number of distinct partition sets across classes: labelled classes that
    /// differ only by a colour permutation collapse.
    std::size_t partition_class_count() const;
};

/// Kempe equivalence classes of all proper k-colourings, by breadth-first
/// closure under single Kempe changes.
KempeClassReport kempe_classes(const Graph& g, std::size_t k, std::size_t cap = default_colouring_cap);

} // namespace lvm
