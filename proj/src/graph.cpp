#include "lvm/graph.hpp"

#include "lvm/error.hpp"

#include <algorithm>
#include <string>

namespace lvm {

std::size_t VertexBits::count() const {
    std::size_t n = 0;
    for (auto w : words_) n += static_cast<std::size_t>(__builtin_popcountll(w));
    return n;
}

bool VertexBits::none() const {
    return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

VertexBits& VertexBits::operator&=(const VertexBits& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
}

VertexBits& VertexBits::operator|=(const VertexBits& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
}

VertexBits& VertexBits::operator-=(const VertexBits& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
}

bool VertexBits::intersects(const VertexBits& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
        if (words_[i] & o.words_[i]) return true;
    return false;
}

Vertex VertexBits::first() const {
    for (std::size_t w = 0; w < words_.size(); ++w)
        if (words_[w]) return static_cast<Vertex>(w * 64 + static_cast<std::size_t>(__builtin_ctzll(words_[w])));
    return static_cast<Vertex>(universe_);
}

std::vector<Vertex> VertexBits::to_vector() const {
    std::vector<Vertex> out;
    out.reserve(count());
    for_each([&](Vertex v) { out.push_back(v); });
    return out;
}

Graph::Graph(std::size_t order, std::span<const Edge> edges) : rows_(order, VertexBits(order)) {
    for (auto [u, v] : edges) {
        if (u >= order || v >= order)
            throw InvalidArgument("edge (" + std::to_string(u) + "," + std::to_string(v) +
                                  ") has an endpoint outside 0.." + std::to_string(order));
        if (u == v) throw InvalidArgument("self-loop at vertex " + std::to_string(u));
        if (!rows_[u].test(v)) {
            rows_[u].set(v);
            rows_[v].set(u);
            ++edge_count_;
        }
    }
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (Vertex u = 0; u < order(); ++u)
        rows_[u].for_each([&](Vertex v) {
            if (u < v) out.emplace_back(u, v);
        });
    return out;
}

Graph make_graph(std::size_t order, std::span<const Edge> edges) { return Graph(order, edges); }

Graph induced_subgraph(const Graph& g, std::span<const Vertex> s) {
    std::vector<Vertex> members(s.begin(), s.end());
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    for (auto v : members)
        if (v >= g.order()) throw InvalidArgument("vertex " + std::to_string(v) + " out of range");

    std::vector<Edge> edges;
    for (std::size_t i = 0; i < members.size(); ++i)
        for (std::size_t j = i + 1; j < members.size(); ++j)
            if (g.adjacent(members[i], members[j]))
                edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
    return Graph(members.size(), edges);
}

bool is_connected(const Graph& g, const VertexBits& s) {
    if (s.universe() != g.order()) throw InvalidArgument("vertex set universe does not match graph order");
    if (s.none()) throw InvalidArgument("connectivity of the empty set is undefined");
    VertexBits seen(g.order());
    const Vertex start = s.first();
    seen.set(start);
    std::vector<Vertex> stack{start};
    std::size_t reached = 1;
    while (!stack.empty()) {
        Vertex u = stack.back();
        stack.pop_back();
        auto next = g.neighbours(u);
        next &= s;
        next.for_each([&](Vertex w) {
            if (!seen.test(w)) {
                seen.set(w);
                stack.push_back(w);
                ++reached;
            }
        });
    }
    return reached == s.count();
}

bool is_connected(const Graph& g, std::span<const Vertex> s) {
    if (s.empty()) throw InvalidArgument("connectivity of the empty set is undefined");
    VertexBits bits(g.order());
    for (auto v : s) {
        if (v >= g.order()) throw InvalidArgument("vertex " + std::to_string(v) + " out of range");
        bits.set(v);
    }
    return is_connected(g, bits);
}

Graph contract_edge(const Graph& g, Vertex u, Vertex v) {
    if (u >= g.order() || v >= g.order() || u == v || !g.adjacent(u, v))
        throw InvalidArgument("contract_edge: " + std::to_string(u) + " and " + std::to_string(v) +
                              " are not adjacent");
    const Vertex keep = std::min(u, v);
    const Vertex drop = std::max(u, v);
    auto relabel = [&](Vertex x) -> Vertex {
        if (x == drop) return keep;
        return x > drop ? x - 1 : x;
    };
    std::vector<Edge> edges;
    for (auto [a, b] : g.edges()) {
        Vertex ra = relabel(a), rb = relabel(b);
        if (ra != rb) edges.emplace_back(ra, rb);
    }
    return Graph(g.order() - 1, edges);
}

Graph complete_graph(std::size_t order) {
    std::vector<Edge> edges;
    for (Vertex u = 0; u < order; ++u)
        for (Vertex v = u + 1; v < order; ++v) edges.emplace_back(u, v);
    return Graph(order, edges);
}

Graph cycle_graph(std::size_t order) {
    std::vector<Edge> edges;
    for (Vertex u = 0; u < order; ++u) edges.emplace_back(u, static_cast<Vertex>((u + 1) % order));
    return Graph(order, edges);
}

Graph path_graph(std::size_t order) {
    std::vector<Edge> edges;
    for (Vertex u = 0; u + 1 < order; ++u) edges.emplace_back(u, u + 1);
    return Graph(order, edges);
}

} // namespace lvm
