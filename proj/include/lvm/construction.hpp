#pragma once

#include "lvm/colouring.hpp"
#include "lvm/graph.hpp"

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

namespace lvm {

/// Which cross pair of an index pair i < j is left out of the graph. The first
/// letter is the side of i, the second the side of j: AB excludes a_i b_j.
enum class ExclusionChoice : std::uint8_t { AA = 0, AB = 1, BA = 2, BB = 3 };

enum class Side : std::uint8_t { A = 0, B = 1 };

std::string_view to_string(ExclusionChoice c);
/// Throws InvalidArgument on anything other than "AA", "AB", "BA", "BB".
ExclusionChoice parse_exclusion_choice(std::string_view token);

/// Vertex naming: a_i -> 2(i-1), b_i -> 2(i-1)+1 for 1-based index i.
constexpr Vertex vertex_of(Side s, std::size_t index) {
    return static_cast<Vertex>(2 * (index - 1) + static_cast<std::size_t>(s));
}
constexpr Vertex a_vertex(std::size_t index) { return vertex_of(Side::A, index); }
constexpr Vertex b_vertex(std::size_t index) { return vertex_of(Side::B, index); }
constexpr std::size_t index_of(Vertex v) { return v / 2 + 1; }
constexpr Side side_of(Vertex v) { return (v & 1u) ? Side::B : Side::A; }

struct ExclusionEntry {
    std::size_t i = 0;
    std::size_t j = 0;
    ExclusionChoice choice = ExclusionChoice::AA;

    friend bool operator==(const ExclusionEntry&, const ExclusionEntry&) = default;
};

/// One random graph G_n together with the choices that determine it.
class LvmInstance {
public:
    std::size_t n() const { return n_; }
    /// Absent for instances built from an explicit table.
    std::optional<std::uint64_t> seed() const { return seed_; }
    const Graph& graph() const { return graph_; }

    /// Choice for the unordered index pair {i, j}, 1-based, i < j.
    ExclusionChoice exclusion(std::size_t i, std::size_t j) const;
    /// All choices in lexicographic (i, j) order.
    std::vector<ExclusionEntry> exclusion_table() const;

    /// Whether x_i y_j is an edge, for distinct indices. Equivalent to
    /// graph().adjacent(...) but answered from the table.
    bool cross_edge(Side x, std::size_t i, Side y, std::size_t j) const;

    friend bool operator==(const LvmInstance&, const LvmInstance&) = default;

private:
    friend LvmInstance generate(std::size_t n, std::uint64_t seed);
    friend LvmInstance from_exclusions(std::size_t n, std::span<const ExclusionEntry> table);
    static LvmInstance build(std::size_t n, std::optional<std::uint64_t> seed,
                             std::vector<ExclusionChoice> choices);
    std::size_t slot(std::size_t i, std::size_t j) const;

    std::size_t n_ = 0;
    std::optional<std::uint64_t> seed_;
    std::vector<ExclusionChoice> choices_;
    Graph graph_;
};

/// Draws one choice per index pair in lexicographic (i, j) order from
/// std::mt19937_64 seeded with `seed`. Each 64-bit output supplies 32 choices,
/// least significant two bits first. Throws InvalidArgument for n = 0.
LvmInstance generate(std::size_t n, std::uint64_t seed);

/// Builds an instance from a table covering every pair i < j exactly once.
LvmInstance from_exclusions(std::size_t n, std::span<const ExclusionEntry> table);

/// ({a_1,b_1}, ..., {a_n,b_n}).
BagFamily canonical_bags(const LvmInstance& inst);

/// a_p and b_p both get colour p-1; palette size n.
Colouring canonical_colouring(const LvmInstance& inst);

/// Four distinct 1-based indices (i, j, k, l) such that none of a_i b_j,
/// a_j b_k, a_k b_l, a_l b_i is an edge.
using Quadruple = std::array<std::size_t, 4>;

bool is_valid_quadruple(const LvmInstance& inst, const Quadruple& q);

/// Lexicographically first valid ordered quadruple, if any.
std::optional<Quadruple> find_quadruple(const LvmInstance& inst);

/// Number of valid quadruples up to rotation (each absence set counted once).
std::uint64_t count_quadruples(const LvmInstance& inst);

/// The rotated n-colouring: a_i, b_j share colour i-1, a_j, b_k share j-1,
/// a_k, b_l share k-1, a_l, b_i share l-1; every other index p keeps
/// a_p, b_p on colour p-1. Throws InvalidArgument if q is not valid.
Colouring alternative_colouring(const LvmInstance& inst, const Quadruple& q);

} // namespace lvm
