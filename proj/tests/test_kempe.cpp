#include "lvm/construction.hpp"
#include "lvm/error.hpp"
#include "lvm/kempe.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <map>
#include <queue>
#include <random>
#include <set>

using namespace lvm;

TEST_CASE("kempe_chain") {
    auto k2 = complete_graph(2);
    auto chain = kempe_chain(k2, Colouring({0, 1}, 2), 0, 1);
    CHECK(chain.vertices == std::vector<Vertex>{0, 1});

    auto isolated = make_graph(1, {});
    CHECK(kempe_chain(isolated, Colouring({0}, 2), 0, 1).vertices == std::vector<Vertex>{0});

    auto p3 = path_graph(3);
    CHECK(kempe_chain(p3, Colouring({0, 1, 0}, 2), 0, 1).vertices == std::vector<Vertex>{0, 1, 2});

    CHECK_THROWS_AS(kempe_chain(k2, Colouring({0, 1}, 2), 0, 0), InvalidArgument);
    CHECK_THROWS_AS(kempe_chain(k2, Colouring({0, 0}, 2), 0, 1), InvalidArgument);
}

TEST_CASE("apply_kempe_change") {
    auto k2 = complete_graph(2);
    Colouring c({0, 1}, 2);
    auto swapped = apply_kempe_change(k2, c, kempe_chain(k2, c, 0, 1));
    CHECK(swapped.assignment() == std::vector<Colour>{1, 0});

    auto p3 = path_graph(3);
    Colouring d({0, 1, 0}, 2);
    auto chain = kempe_chain(p3, d, 0, 1);
    auto once = apply_kempe_change(p3, d, chain);
    CHECK(once.assignment() == std::vector<Colour>{1, 0, 1});
    CHECK(apply_kempe_change(p3, once, chain) == d);

    // A chain computed for one colouring is stale for another.
    KempeChain partial{{0}, {0, 1}};
    CHECK_THROWS_AS(apply_kempe_change(p3, d, partial), InvalidArgument);
}

TEST_CASE("is_frozen") {
    CHECK(is_frozen(cycle_graph(4), Colouring({0, 1, 0, 1}, 2)));
    CHECK_FALSE(is_frozen(path_graph(3), Colouring({0, 1, 2}, 3)));
    // Unused palette colours are ignored.
    CHECK(is_frozen(complete_graph(3), Colouring({0, 1, 2}, 4)));
    CHECK(is_frozen(make_graph(3, {}), Colouring({0, 0, 0}, 1)));
    CHECK_THROWS_AS(is_frozen(complete_graph(2), Colouring({0, 0}, 1)), InvalidArgument);
    for (std::uint64_t seed = 0; seed < 10; ++seed)
        for (std::size_t n = 2; n <= 12; ++n) {
            auto inst = generate(n, seed);
            CHECK(is_frozen(inst.graph(), canonical_colouring(inst)));
        }
}

TEST_CASE("enumerate_proper_colourings") {
    auto k2 = enumerate_proper_colourings(complete_graph(2), 2);
    REQUIRE(k2.size() == 2);
    CHECK(k2[0].assignment() == std::vector<Colour>{0, 1});
    CHECK(k2[1].assignment() == std::vector<Colour>{1, 0});
    CHECK(enumerate_proper_colourings(complete_graph(3), 3).size() == 6);
    CHECK(enumerate_proper_colourings(complete_graph(3), 2).empty());
    CHECK_THROWS_AS(enumerate_proper_colourings(make_graph(6, {}), 3, 100), ResourceLimit);
    CHECK_THROWS_AS(enumerate_proper_colourings(complete_graph(2), 0), InvalidArgument);
}

TEST_CASE("kempe_classes") {
    auto k2 = kempe_classes(complete_graph(2), 2);
    CHECK(k2.class_count() == 1);
    CHECK(k2.classes[0].size() == 2);

    auto p3 = kempe_classes(path_graph(3), 2);
    REQUIRE(p3.class_count() == 1);
    CHECK(p3.classes[0] == std::vector<Colouring>{Colouring({0, 1, 0}, 2), Colouring({1, 0, 1}, 2)});

    auto k3 = kempe_classes(complete_graph(3), 3);
    CHECK(k3.class_count() == 1);
    CHECK(k3.classes[0].size() == 6);
    CHECK(k3.partition_class_count() == 1);

    auto none = kempe_classes(complete_graph(3), 2);
    CHECK(none.class_count() == 0);
    CHECK(none.colouring_count == 0);
}

TEST_CASE("frozen_class_check") {
    CHECK(frozen_class_check(cycle_graph(4), Colouring({0, 1, 0, 1}, 2)));
    CHECK(frozen_class_check(complete_graph(3), Colouring({0, 1, 2}, 3)));
    std::vector<ExclusionEntry> table{
        {1, 2, ExclusionChoice::AB}, {1, 3, ExclusionChoice::AA}, {1, 4, ExclusionChoice::BA},
        {2, 3, ExclusionChoice::AB}, {2, 4, ExclusionChoice::AA}, {3, 4, ExclusionChoice::AB},
    };
    auto fx = from_exclusions(4, table);
    CHECK(frozen_class_check(fx.graph(), canonical_colouring(fx)));
    CHECK_THROWS_AS(frozen_class_check(path_graph(3), Colouring({0, 1, 2}, 3)), InvalidArgument);
}

namespace {

// Independent BFS over colourings: neighbours are found by recolouring
// whole bichromatic components, computed from an adjacency matrix.
std::set<std::vector<Colour>> class_by_oracle(const Graph& g, const std::vector<Colour>& start, std::size_t k) {
    const auto m = oracle::matrix_of(g);
    std::set<std::vector<Colour>> seen{start};
    std::queue<std::vector<Colour>> q;
    q.push(start);
    while (!q.empty()) {
        auto c = q.front();
        q.pop();
        for (std::uint32_t v = 0; v < g.order(); ++v)
            for (Colour other = 0; other < k; ++other) {
                if (other == c[v]) continue;
                std::vector<bool> in(g.order(), false);
                std::vector<std::uint32_t> stack{v};
                in[v] = true;
                while (!stack.empty()) {
                    auto u = stack.back();
                    stack.pop_back();
                    for (std::uint32_t w = 0; w < g.order(); ++w)
                        if (!in[w] && m[u][w] && (c[w] == c[v] || c[w] == other)) {
                            in[w] = true;
                            stack.push_back(w);
                        }
                }
                auto next = c;
                for (std::uint32_t w = 0; w < g.order(); ++w)
                    if (in[w]) next[w] = next[w] == c[v] ? other : c[v];
                if (seen.insert(next).second) q.push(next);
            }
    }
    return seen;
}

} // namespace

TEST_CASE("kempe_classes agree with an independent BFS") {
    std::mt19937_64 rng(4242);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t order = 1 + rng() % 6;
        const std::size_t k = 1 + rng() % 4;
        auto g = oracle::random_graph(rng, order, 1, 2);
        auto report = kempe_classes(g, k);
        for (const auto& cls : report.classes) {
            auto expected = class_by_oracle(g, cls.front().assignment(), k);
            CHECK(expected.size() == cls.size());
            for (const auto& c : cls) CHECK(expected.count(c.assignment()) == 1);
        }
    }
}

TEST_CASE("Kempe properties on random small instances") {
    std::mt19937_64 rng(777);
    for (int trial = 0; trial < 500; ++trial) {
        const std::size_t order = 1 + rng() % 8;
        auto g = oracle::random_graph(rng, order, 1, 2);
        const std::size_t k = 2 + rng() % 3;
        auto all = enumerate_proper_colourings(g, k);
        if (all.empty()) continue;
        const auto& c = all[rng() % all.size()];
        const Vertex v = static_cast<Vertex>(rng() % order);
        Colour other = static_cast<Colour>(rng() % k);
        if (other == c[v]) other = (other + 1) % k;
        auto chain = kempe_chain(g, c, v, other);
        CHECK(is_valid_chain(g, c, chain));
        auto once = apply_kempe_change(g, c, chain);
        CHECK(is_proper(g, once));
        CHECK(apply_kempe_change(g, once, chain) == c);
        CHECK(is_frozen(g, c) == kempe_changes_preserve_partition(g, c));
    }
}

TEST_CASE("unused colours and frozenness") {
    // K3 with a spare colour: singleton classes, still frozen
    auto k3 = complete_graph(3);
    CHECK(is_frozen(k3, Colouring({0, 1, 2}, 4)));
    CHECK(kempe_changes_preserve_partition(k3, Colouring({0, 1, 2}, 4)));
    // two isolated vertices sharing a colour with a spare colour: moving one
    // vertex alone splits the class
    auto e2 = make_graph(2, {});
    CHECK_FALSE(is_frozen(e2, Colouring({0, 0}, 2)));
    CHECK_FALSE(kempe_changes_preserve_partition(e2, Colouring({0, 0}, 2)));
    CHECK(is_frozen(e2, Colouring({0, 0}, 1)));
}
