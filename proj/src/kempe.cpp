#include "lvm/kempe.hpp"

#include "lvm/error.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <string>
#include <unordered_map>

namespace lvm {

namespace {

void require_proper(const Graph& g, const Colouring& c) {
    if (!is_proper(g, c)) throw InvalidArgument("colouring is not proper");
}

VertexBits colour_class_union(const Colouring& c, Colour x, Colour y) {
    VertexBits bits(c.size());
    for (Vertex v = 0; v < c.size(); ++v)
        if (c[v] == x || c[v] == y) bits.set(v);
    return bits;
}

VertexBits reach_within(const Graph& g, const VertexBits& allowed, Vertex start) {
    VertexBits seen(g.order());
    seen.set(start);
    std::vector<Vertex> stack{start};
    while (!stack.empty()) {
        Vertex u = stack.back();
        stack.pop_back();
        auto next = g.neighbours(u);
        next &= allowed;
        next.for_each([&](Vertex w) {
            if (!seen.test(w)) {
                seen.set(w);
                stack.push_back(w);
            }
        });
    }
    return seen;
}

std::vector<Colour> used_colours(const Colouring& c) {
    std::vector<Colour> used(c.assignment());
    std::sort(used.begin(), used.end());
    used.erase(std::unique(used.begin(), used.end()), used.end());
    return used;
}

Colouring swap_on(const Colouring& c, const std::vector<Vertex>& vertices, Colour x, Colour y) {
    auto assignment = c.assignment();
    for (auto v : vertices) assignment[v] = assignment[v] == x ? y : x;
    return Colouring(std::move(assignment), c.palette_size());
}

KempeChain chain_unchecked(const Graph& g, const Colouring& c, Vertex v, Colour other) {
    auto allowed = colour_class_union(c, c[v], other);
    return KempeChain{reach_within(g, allowed, v).to_vector(), std::minmax(c[v], other)};
}

} // namespace

KempeChain kempe_chain(const Graph& g, const Colouring& c, Vertex v, Colour other) {
    require_proper(g, c);
    if (v >= g.order()) throw InvalidArgument("vertex " + std::to_string(v) + " out of range");
    if (other >= c.palette_size()) throw InvalidArgument("colour " + std::to_string(other) + " outside palette");
    if (other == c[v]) throw InvalidArgument("a Kempe chain needs two distinct colours");
    return chain_unchecked(g, c, v, other);
}

bool is_valid_chain(const Graph& g, const Colouring& c, const KempeChain& chain) {
    if (chain.vertices.empty() || c.size() != g.order()) return false;
    auto [x, y] = chain.colours;
    if (x == y) return false;
    VertexBits members(g.order());
    for (auto v : chain.vertices) {
        if (v >= g.order() || (c[v] != x && c[v] != y)) return false;
        members.set(v);
    }
    // Connected and maximal together: the bichromatic component of any member
    // is exactly the member set.
    auto component = reach_within(g, colour_class_union(c, x, y), chain.vertices.front());
    return component == members;
}

Colouring apply_kempe_change(const Graph& g, const Colouring& c, const KempeChain& chain) {
    if (!is_valid_chain(g, c, chain)) throw InvalidArgument("Kempe chain is stale for this colouring");
    return swap_on(c, chain.vertices, chain.colours.first, chain.colours.second);
}

bool is_frozen(const Graph& g, const Colouring& c) {
    require_proper(g, c);
    const auto used = used_colours(c);
    for (std::size_t i = 0; i < used.size(); ++i)
        for (std::size_t j = i + 1; j < used.size(); ++j)
            if (!is_connected(g, colour_class_union(c, used[i], used[j]))) return false;
    if (used.size() == c.palette_size()) return true;
    // An unused colour gives every vertex a one-vertex chain, which splits
    // its class unless the class is that vertex alone.
    std::vector<std::size_t> class_size(c.palette_size(), 0);
    for (Vertex v = 0; v < g.order(); ++v)
        if (++class_size[c[v]] > 1) return false;
    return true;
}

bool kempe_changes_preserve_partition(const Graph& g, const Colouring& c) {
    require_proper(g, c);
    const auto before = partition_of(c);
    for (Vertex v = 0; v < g.order(); ++v)
        for (Colour other = 0; other < c.palette_size(); ++other) {
            if (other == c[v]) continue;
            auto chain = chain_unchecked(g, c, v, other);
            if (partition_of(swap_on(c, chain.vertices, chain.colours.first, chain.colours.second)) != before)
                return false;
        }
    return true;
}

bool frozen_class_check(const Graph& g, const Colouring& c) {
    if (!is_frozen(g, c)) throw InvalidArgument("frozen_class_check requires a frozen colouring");
    return kempe_changes_preserve_partition(g, c);
}

std::vector<Colouring> enumerate_proper_colourings(const Graph& g, std::size_t k, std::size_t cap) {
    if (k == 0) throw InvalidArgument("palette size must be at least 1");
    std::vector<Colouring> out;
    const std::size_t order = g.order();
    std::vector<Colour> assignment(order, 0);

    auto fits = [&](Vertex v, Colour col) {
        for (Vertex u = 0; u < v; ++u)
            if (assignment[u] == col && g.adjacent(u, v)) return false;
        return true;
    };
    auto recurse = [&](auto& self, Vertex v) -> void {
        if (v == order) {
            if (out.size() == cap)
                throw ResourceLimit("more than " + std::to_string(cap) + " proper colourings");
            out.emplace_back(assignment, k);
            return;
        }
        for (Colour col = 0; col < k; ++col) {
            if (!fits(v, col)) continue;
            assignment[v] = col;
            self(self, v + 1);
        }
    };
    recurse(recurse, 0);
    return out;
}

std::size_t KempeClassReport::partition_class_count() const {
    std::set<std::vector<ColourPartition>> distinct(partition_classes.begin(), partition_classes.end());
    return distinct.size();
}

KempeClassReport kempe_classes(const Graph& g, std::size_t k, std::size_t cap) {
    const auto all = enumerate_proper_colourings(g, k, cap);

    std::map<std::vector<Colour>, std::size_t> index;
    for (std::size_t i = 0; i < all.size(); ++i) index.emplace(all[i].assignment(), i);

    constexpr std::size_t unassigned = static_cast<std::size_t>(-1);
    std::vector<std::size_t> class_of(all.size(), unassigned);
    KempeClassReport report;
    report.colouring_count = all.size();

    // Seeds are visited in lexicographic order, so each class is discovered
    // from its least member.
    for (std::size_t seed = 0; seed < all.size(); ++seed) {
        if (class_of[seed] != unassigned) continue;
        const std::size_t id = report.classes.size();
        std::vector<std::size_t> members{seed};
        class_of[seed] = id;
        std::queue<std::size_t> frontier;
        frontier.push(seed);
        while (!frontier.empty()) {
            const auto& c = all[frontier.front()];
            frontier.pop();
            for (Vertex v = 0; v < g.order(); ++v)
                for (Colour other = 0; other < k; ++other) {
                    if (other == c[v]) continue;
                    auto chain = chain_unchecked(g, c, v, other);
                    auto next = swap_on(c, chain.vertices, chain.colours.first, chain.colours.second);
                    auto j = index.at(next.assignment());
                    if (class_of[j] == unassigned) {
                        class_of[j] = id;
                        members.push_back(j);
                        frontier.push(j);
                    }
                }
        }
        std::sort(members.begin(), members.end());
        std::vector<Colouring> cls;
        std::set<ColourPartition> partitions;
        for (auto m : members) {
            cls.push_back(all[m]);
            partitions.insert(partition_of(all[m]));
        }
        report.classes.push_back(std::move(cls));
        report.partition_classes.emplace_back(partitions.begin(), partitions.end());
    }
    return report;
}

} // namespace lvm
