#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace lvm {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

/// Dense bitset row. Bit v of word v/64 is set iff v is a member.
class VertexBits {
public:
    VertexBits() = default;
    explicit VertexBits(std::size_t universe) : words_((universe + 63) / 64, 0), universe_(universe) {}

    std::size_t universe() const { return universe_; }
    bool test(Vertex v) const { return (words_[v >> 6] >> (v & 63)) & 1u; }
    void set(Vertex v) { words_[v >> 6] |= std::uint64_t{1} << (v & 63); }
    void reset(Vertex v) { words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }
    std::size_t count() const;
    bool none() const;
    /// Least member, or universe() when empty.
    Vertex first() const;
    std::span<const std::uint64_t> words() const { return words_; }
    std::span<std::uint64_t> words() { return words_; }

    VertexBits& operator&=(const VertexBits& o);
    VertexBits& operator|=(const VertexBits& o);
    /// Set difference.
    VertexBits& operator-=(const VertexBits& o);
    bool intersects(const VertexBits& o) const;

    /// Calls f(v) for each member in increasing order.
    template <class F>
    void for_each(F&& f) const {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            std::uint64_t bits = words_[w];
            while (bits) {
                f(static_cast<Vertex>(w * 64 + static_cast<std::size_t>(__builtin_ctzll(bits))));
                bits &= bits - 1;
            }
        }
    }

    std::vector<Vertex> to_vector() const;

    friend bool operator==(const VertexBits&, const VertexBits&) = default;

private:
    std::vector<std::uint64_t> words_;
    std::size_t universe_ = 0;
};

/// Simple undirected graph on vertices 0..order-1 with bitset adjacency rows.
/// Immutable after construction.
class Graph {
public:
    Graph() = default;

    /// Throws InvalidArgument on an out-of-range endpoint or a self-loop.
    /// Duplicate edges (in either orientation) collapse.
    Graph(std::size_t order, std::span<const Edge> edges);

    std::size_t order() const { return rows_.size(); }
    std::size_t edge_count() const { return edge_count_; }
    bool adjacent(Vertex u, Vertex v) const { return rows_[u].test(v); }
    const VertexBits& neighbours(Vertex v) const { return rows_[v]; }
    std::size_t degree(Vertex v) const { return rows_[v].count(); }

    /// Edges (u,v) with u < v in lexicographic order.
    std::vector<Edge> edges() const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    std::vector<VertexBits> rows_;
    std::size_t edge_count_ = 0;
};

Graph make_graph(std::size_t order, std::span<const Edge> edges);
inline Graph make_graph(std::size_t order, std::initializer_list<Edge> edges) {
    return make_graph(order, std::span<const Edge>(edges.begin(), edges.size()));
}

/// Subgraph induced by `s`, relabelled by rank within `s` (duplicates ignored).
Graph induced_subgraph(const Graph& g, std::span<const Vertex> s);

/// Whether `s` induces a connected subgraph. A singleton is connected; an
/// empty set throws InvalidArgument.
bool is_connected(const Graph& g, std::span<const Vertex> s);
bool is_connected(const Graph& g, const VertexBits& s);

/// Merges adjacent u and v. The merged vertex takes id min(u,v); ids above
/// max(u,v) shift down by one.
Graph contract_edge(const Graph& g, Vertex u, Vertex v);

/// Named small graphs used by tests and the CLI.
Graph complete_graph(std::size_t order);
Graph cycle_graph(std::size_t order);
Graph path_graph(std::size_t order);

} // namespace lvm
