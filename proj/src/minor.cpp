#include "lvm/minor.hpp"

#include "lvm/error.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

namespace lvm {

std::string_view to_string(MinorKind k) {
    switch (k) {
    case MinorKind::minor: return "minor";
    case MinorKind::quasi_minor: return "quasiMinor";
    case MinorKind::simple: return "simple";
    case MinorKind::double_pairs: return "double";
    case MinorKind::triple: return "triple";
    }
    return "unknown";
}

bool matches_size_class(const MinorWitness& w) {
    auto all = [&](auto pred) { return std::all_of(w.bags.begin(), w.bags.end(), pred); };
    switch (w.kind) {
    case MinorKind::simple: return all([](const auto& b) { return b.size() == 1; });
    case MinorKind::double_pairs: return all([](const auto& b) { return b.size() == 2; });
    case MinorKind::triple: return all([](const auto& b) { return b.size() >= 3; });
    default: return true;
    }
}

namespace {

VertexBits to_bits(const Graph& g, const std::vector<Vertex>& bag) {
    VertexBits bits(g.order());
    for (auto v : bag) bits.set(v);
    return bits;
}

VertexBits closed_neighbourhood(const Graph& g, const std::vector<Vertex>& bag) {
    VertexBits out(g.order());
    for (auto v : bag) out |= g.neighbours(v);
    return out;
}

} // namespace

bool verify_minor_model(const Graph& g, const BagFamily& bags) {
    bags.check_range(g.order());
    std::vector<VertexBits> members, reach;
    for (const auto& bag : bags) {
        if (!is_connected(g, bag)) return false;
        members.push_back(to_bits(g, bag));
        reach.push_back(closed_neighbourhood(g, bag));
    }
    for (std::size_t i = 0; i < bags.size(); ++i)
        for (std::size_t j = i + 1; j < bags.size(); ++j)
            if (!reach[i].intersects(members[j])) return false;
    return true;
}

bool verify_quasi_minor(const Graph& g, const BagFamily& bags) {
    bags.check_range(g.order());
    std::vector<VertexBits> members;
    for (const auto& bag : bags) members.push_back(to_bits(g, bag));
    for (std::size_t i = 0; i < bags.size(); ++i)
        for (std::size_t j = i + 1; j < bags.size(); ++j) {
            auto both = members[i];
            both |= members[j];
            if (!is_connected(g, both)) return false;
        }
    return true;
}

namespace {

class CliqueSearch {
public:
    CliqueSearch(const Graph& g, std::uint64_t budget) : g_(g), budget_(budget) {}

    std::vector<Vertex> maximum() {
        best_.clear();
        std::vector<Vertex> current;
        VertexBits all(g_.order());
        for (Vertex v = 0; v < g_.order(); ++v) all.set(v);
        grow_maximum(current, all);
        return best_;
    }

    std::optional<std::vector<Vertex>> of_size(std::size_t k) {
        target_ = k;
        std::vector<Vertex> current;
        VertexBits all(g_.order());
        for (Vertex v = 0; v < g_.order(); ++v) all.set(v);
        if (k == 0) return current;
        if (grow_to_target(current, all)) return best_;
        return std::nullopt;
    }

private:
    void tick() {
        if (++nodes_ > budget_)
            throw ResourceLimit("clique search exceeded its budget of " + std::to_string(budget_) + " nodes");
    }

    // Number of colour classes in a sequential greedy colouring of p.
    std::size_t colour_bound(VertexBits p) const {
        std::size_t colours = 0;
        while (!p.none()) {
            ++colours;
            auto q = p;
            while (!q.none()) {
                Vertex v = q.first();
                q.reset(v);
                p.reset(v);
                q -= g_.neighbours(v);
            }
        }
        return colours;
    }

    // Candidates in p are all greater than every vertex of current, so the
    // recursion visits cliques in lexicographic order and keeps only strict
    // improvements: the first maximum found is the least one.
    void grow_maximum(std::vector<Vertex>& current, VertexBits p) {
        tick();
        if (current.size() > best_.size()) best_ = current;
        if (p.none() || current.size() + colour_bound(p) <= best_.size()) return;
        std::size_t remaining = p.count();
        for (auto v : p.to_vector()) {
            if (current.size() + remaining <= best_.size()) return;
            --remaining;
            p.reset(v);
            auto next = p;
            next &= g_.neighbours(v);
            current.push_back(v);
            grow_maximum(current, next);
            current.pop_back();
        }
    }

    bool grow_to_target(std::vector<Vertex>& current, VertexBits p) {
        tick();
        if (current.size() == target_) {
            best_ = current;
            return true;
        }
        if (current.size() + p.count() < target_ || current.size() + colour_bound(p) < target_) return false;
        std::size_t remaining = p.count();
        for (auto v : p.to_vector()) {
            if (current.size() + remaining < target_) return false;
            --remaining;
            p.reset(v);
            auto next = p;
            next &= g_.neighbours(v);
            current.push_back(v);
            if (grow_to_target(current, next)) return true;
            current.pop_back();
        }
        return false;
    }

    const Graph& g_;
    std::uint64_t budget_;
    std::uint64_t nodes_ = 0;
    std::size_t target_ = 0;
    std::vector<Vertex> best_;
};

std::uint64_t count_from(const Graph& g, std::size_t depth_left, VertexBits p) {
    if (depth_left == 0) return 1;
    if (p.count() < depth_left) return 0;
    std::uint64_t total = 0;
    for (auto v : p.to_vector()) {
        p.reset(v);
        auto next = p;
        next &= g.neighbours(v);
        total += count_from(g, depth_left - 1, next);
    }
    return total;
}

} // namespace

std::vector<Vertex> max_clique(const Graph& g, std::uint64_t budget) { return CliqueSearch(g, budget).maximum(); }

std::optional<std::vector<Vertex>> find_clique(const Graph& g, std::size_t k, std::uint64_t budget) {
    return CliqueSearch(g, budget).of_size(k);
}

std::uint64_t count_cliques(const Graph& g, std::size_t k) {
    VertexBits all(g.order());
    for (Vertex v = 0; v < g.order(); ++v) all.set(v);
    return count_from(g, k, all);
}

PairingConstraints PairingConstraints::one_per_index(const LvmInstance& inst) {
    PairingConstraints c;
    c.group_of.resize(2 * inst.n());
    for (Vertex v = 0; v < c.group_of.size(); ++v) c.group_of[v] = index_of(v);
    return c;
}

std::optional<MinorWitness> find_double_minor(const Graph& g, std::size_t k, const PairingConstraints& constraints,
                                              std::uint64_t budget) {
    if (k == 0) throw InvalidArgument("double minor target must be at least 1");
    const bool grouped = !constraints.group_of.empty();
    if (grouped && constraints.group_of.size() != g.order())
        throw InvalidArgument("pairing constraints do not cover every vertex");

    std::vector<Edge> pairs;
    for (auto e : g.edges())
        if (!grouped || constraints.group_of[e.first] != constraints.group_of[e.second]) pairs.push_back(e);

    // Compatibility graph on candidate pairs: disjoint, joined by an edge, and
    // (when grouped) touching four distinct groups.
    auto compatible = [&](const Edge& e, const Edge& f) {
        const Vertex ev[2] = {e.first, e.second};
        const Vertex fv[2] = {f.first, f.second};
        bool joined = false;
        for (auto x : ev)
            for (auto y : fv) {
                if (x == y) return false;
                if (grouped && constraints.group_of[x] == constraints.group_of[y]) return false;
                joined = joined || g.adjacent(x, y);
            }
        return joined;
    };
    std::vector<Edge> compat_edges;
    for (Vertex i = 0; i < pairs.size(); ++i)
        for (Vertex j = i + 1; j < pairs.size(); ++j)
            if (compatible(pairs[i], pairs[j])) compat_edges.emplace_back(i, j);
    Graph compat(pairs.size(), compat_edges);

    auto clique = find_clique(compat, k, budget);
    if (!clique) return std::nullopt;
    std::vector<std::vector<Vertex>> bags;
    for (auto idx : *clique) bags.push_back({pairs[idx].first, pairs[idx].second});
    return MinorWitness{BagFamily(std::move(bags)), MinorKind::double_pairs};
}

std::vector<VertexPair> greedy_independent_pairs(const LvmInstance& inst, std::span<const VertexPair> pairs) {
    const std::size_t order = 2 * inst.n();
    std::vector<bool> vertex_used(order, false);
    for (auto [u, v] : pairs) {
        if (u >= order || v >= order) throw InvalidArgument("pair vertex out of range");
        if (u == v) throw InvalidArgument("a pair needs two distinct vertices");
        if (index_of(u) == index_of(v))
            throw InvalidArgument("pair {a_" + std::to_string(index_of(u)) + ",b_" + std::to_string(index_of(u)) +
                                  "} cannot be a bag of a double minor");
        if (vertex_used[u] || vertex_used[v]) throw InvalidArgument("pairs are not disjoint");
        vertex_used[u] = vertex_used[v] = true;
    }

    std::vector<bool> group_used(inst.n() + 1, false);
    std::vector<VertexPair> kept;
    for (auto [u, v] : pairs) {
        if (group_used[index_of(u)] || group_used[index_of(v)]) continue;
        group_used[index_of(u)] = group_used[index_of(v)] = true;
        kept.emplace_back(u, v);
    }
    return kept;
}

std::vector<std::uint8_t> canonical_key(const Graph& g) {
    const std::size_t n = g.order();

    // Colour refinement from degrees; colours are ranks of sorted signatures,
    // so the final ordered cells do not depend on the labelling.
    std::vector<std::size_t> colour(n);
    for (Vertex v = 0; v < n; ++v) colour[v] = g.degree(v);
    std::size_t distinct = 0;
    for (;;) {
        std::vector<std::vector<std::size_t>> sig(n);
        for (Vertex v = 0; v < n; ++v) {
            sig[v].push_back(colour[v]);
            std::vector<std::size_t> around;
            g.neighbours(v).for_each([&](Vertex w) { around.push_back(colour[w]); });
            std::sort(around.begin(), around.end());
            sig[v].insert(sig[v].end(), around.begin(), around.end());
        }
        auto sorted = sig;
        std::sort(sorted.begin(), sorted.end());
        sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
        for (Vertex v = 0; v < n; ++v)
            colour[v] = static_cast<std::size_t>(std::lower_bound(sorted.begin(), sorted.end(), sig[v]) - sorted.begin());
        if (sorted.size() == distinct) break;
        distinct = sorted.size();
    }

    std::vector<std::vector<Vertex>> cells(distinct);
    for (Vertex v = 0; v < n; ++v) cells[colour[v]].push_back(v);

    auto encode = [&](const std::vector<Vertex>& order, std::uint8_t tag) {
        std::vector<std::uint8_t> key{tag, static_cast<std::uint8_t>(n & 0xff), static_cast<std::uint8_t>(n >> 8)};
        std::uint8_t byte = 0;
        int filled = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) {
                byte = static_cast<std::uint8_t>((byte << 1) | (g.adjacent(order[i], order[j]) ? 1 : 0));
                if (++filled == 8) {
                    key.push_back(byte);
                    byte = 0;
                    filled = 0;
                }
            }
        if (filled) key.push_back(static_cast<std::uint8_t>(byte << (8 - filled)));
        return key;
    };

    constexpr std::uint64_t max_orderings = 5040;
    std::uint64_t orderings = 1;
    for (const auto& cell : cells)
        for (std::size_t f = 2; f <= cell.size() && orderings <= max_orderings; ++f) orderings *= f;

    if (orderings > max_orderings) {
        std::vector<Vertex> identity(n);
        std::iota(identity.begin(), identity.end(), 0);
        return encode(identity, 0);
    }

    std::vector<std::uint8_t> best;
    for (;;) {
        std::vector<Vertex> order;
        for (const auto& cell : cells) order.insert(order.end(), cell.begin(), cell.end());
        auto key = encode(order, 1);
        if (best.empty() || key < best) best = std::move(key);
        std::size_t c = 0;
        while (c < cells.size() && !std::next_permutation(cells[c].begin(), cells[c].end())) ++c;
        if (c == cells.size()) break;
    }
    return best;
}

namespace {

class ExactMinorSearch {
public:
    ExactMinorSearch(std::size_t t, std::uint64_t budget) : t_(t), budget_(budget) {}

    // h is connected; bags[v] lists the original vertices merged into v.
    bool search(const Graph& h, const std::vector<std::vector<Vertex>>& bags) {
        if (++states_ > budget_)
            throw ResourceLimit("exact minor search exceeded its budget of " + std::to_string(budget_) + " states");
        if (h.order() < t_) return false;
        if (h.edge_count() < t_ * (t_ - 1) / 2) return false;
        if (auto clique = find_clique(h, t_)) {
            std::vector<std::vector<Vertex>> found;
            for (auto v : *clique) found.push_back(bags[v]);
            witness_ = BagFamily(std::move(found));
            return true;
        }
        if (h.order() == t_) return false;
        auto key = canonical_key(h);
        if (refuted_.count(key)) return false;
        for (auto [u, v] : h.edges()) {
            auto merged = bags;
            merged[u].insert(merged[u].end(), merged[v].begin(), merged[v].end());
            merged.erase(merged.begin() + v);
            if (search(contract_edge(h, u, v), merged)) return true;
        }
        refuted_.insert(std::move(key));
        return false;
    }

    std::uint64_t states() const { return states_; }
    const std::optional<BagFamily>& witness() const { return witness_; }

private:
    std::size_t t_;
    std::uint64_t budget_;
    std::uint64_t states_ = 0;
    std::set<std::vector<std::uint8_t>> refuted_;
    std::optional<BagFamily> witness_;
};

std::vector<std::vector<Vertex>> components(const Graph& g) {
    std::vector<std::vector<Vertex>> out;
    std::vector<bool> seen(g.order(), false);
    for (Vertex s = 0; s < g.order(); ++s) {
        if (seen[s]) continue;
        std::vector<Vertex> comp{s}, stack{s};
        seen[s] = true;
        while (!stack.empty()) {
            Vertex u = stack.back();
            stack.pop_back();
            g.neighbours(u).for_each([&](Vertex w) {
                if (!seen[w]) {
                    seen[w] = true;
                    comp.push_back(w);
                    stack.push_back(w);
                }
            });
        }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

void check_exact_limits(const Graph& g, std::size_t t) {
    if (t == 0) throw InvalidArgument("minor target t must be at least 1");
    if (g.order() > exact_minor_order_limit)
        throw InvalidArgument("exact minor search is limited to order " + std::to_string(exact_minor_order_limit) +
                              ", got " + std::to_string(g.order()));
}

} // namespace

ExactMinorResult has_kt_minor_exact(const Graph& g, std::size_t t, std::uint64_t budget) {
    check_exact_limits(g, t);
    ExactMinorSearch search(t, budget);
    for (const auto& comp : components(g)) {
        if (comp.size() < t) continue;
        auto sub = induced_subgraph(g, comp);
        std::vector<std::vector<Vertex>> bags;
        for (auto v : comp) bags.push_back({v});
        if (search.search(sub, bags)) {
            MinorWitness w{*search.witness(), MinorKind::minor};
            if (!verify_minor_model(g, w.bags))
                throw std::logic_error("exact minor search produced an invalid witness");
            return {true, std::move(w), search.states()};
        }
    }
    return {false, std::nullopt, search.states()};
}

std::optional<MinorWitness> find_minor_with_bag_sizes(const Graph& g, std::size_t t, std::size_t min_bag,
                                                      std::size_t max_bag, std::uint64_t budget) {
    check_exact_limits(g, t);
    if (min_bag == 0 || min_bag > max_bag) throw InvalidArgument("invalid bag size range");
    const std::size_t n = g.order();
    std::vector<std::vector<Vertex>> bags;
    std::uint64_t nodes = 0;
    std::optional<BagFamily> found;

    auto recurse = [&](auto& self, Vertex v) -> bool {
        if (++nodes > budget)
            throw ResourceLimit("bag-size minor search exceeded its budget of " + std::to_string(budget) + " nodes");
        std::size_t deficit = (t - bags.size()) * min_bag;
        for (const auto& b : bags) deficit += b.size() < min_bag ? min_bag - b.size() : 0;
        if (deficit > n - v) return false;
        if (v == n) {
            if (bags.size() != t) return false;
            BagFamily family(bags);
            if (!verify_minor_model(g, family)) return false;
            found = std::move(family);
            return true;
        }
        if (self(self, v + 1)) return true; // v left out
        // by index: deeper calls may reallocate bags
        for (std::size_t i = 0; i < bags.size(); ++i) {
            if (bags[i].size() == max_bag) continue;
            bags[i].push_back(v);
            if (self(self, v + 1)) return true;
            bags[i].pop_back();
        }
        if (bags.size() < t) {
            bags.push_back({v});
            if (self(self, v + 1)) return true;
            bags.pop_back();
        }
        return false;
    };
    if (!recurse(recurse, 0)) return std::nullopt;
    MinorKind kind = MinorKind::minor;
    if (min_bag == 1 && max_bag == 1) kind = MinorKind::simple;
    else if (min_bag == 2 && max_bag == 2) kind = MinorKind::double_pairs;
    else if (min_bag >= 3) kind = MinorKind::triple;
    return MinorWitness{*found, kind};
}

std::size_t triple_minor_cap(std::size_t n) { return 2 * n / 3; }

SizeClassCounts decompose_minor(const BagFamily& bags) {
    SizeClassCounts counts;
    for (const auto& bag : bags) {
        if (bag.size() == 1) ++counts.simple;
        else if (bag.size() == 2) ++counts.doubles;
        else ++counts.triple;
    }
    return counts;
}

} // namespace lvm
