#include "lvm/colouring.hpp"
#include "lvm/construction.hpp"
#include "lvm/error.hpp"
#include "lvm/graph.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

using namespace lvm;

TEST_CASE("make_graph") {
    auto k2 = make_graph(2, {{0, 1}});
    CHECK(k2.order() == 2);
    CHECK(k2.edge_count() == 1);
    CHECK(k2.adjacent(1, 0));

    auto k3 = make_graph(3, {{0, 1}, {1, 2}, {0, 2}});
    CHECK(k3 == complete_graph(3));

    auto dedup = make_graph(4, {{0, 1}, {1, 0}});
    CHECK(dedup.order() == 4);
    CHECK(dedup.edge_count() == 1);
    CHECK(dedup.edges() == std::vector<Edge>{{0, 1}});

    CHECK_THROWS_AS(make_graph(2, {{0, 2}}), InvalidArgument);
    CHECK_THROWS_AS(make_graph(2, {{1, 1}}), InvalidArgument);
}

TEST_CASE("induced_subgraph") {
    std::vector<Vertex> s{0, 1};
    CHECK(induced_subgraph(complete_graph(3), s) == complete_graph(2));

    std::vector<Vertex> corners{0, 2};
    auto opposite = induced_subgraph(cycle_graph(4), corners);
    CHECK(opposite.order() == 2);
    CHECK(opposite.edge_count() == 0);

    // G_2 with pair {1,2} excluding a1a2: the three retained cross pairs are
    // a1b2, b1a2, b1b2, which form the path a2 - b1 - b2 - a1.
    std::vector<ExclusionEntry> table{{1, 2, ExclusionChoice::AA}};
    auto inst = from_exclusions(2, table);
    std::vector<Vertex> all{0, 1, 2, 3};
    auto p = induced_subgraph(inst.graph(), all);
    CHECK(p.edges() == std::vector<Edge>{{0, 3}, {1, 2}, {1, 3}});
    std::vector<std::size_t> degrees;
    for (Vertex v = 0; v < 4; ++v) degrees.push_back(p.degree(v));
    std::sort(degrees.begin(), degrees.end());
    CHECK(degrees == std::vector<std::size_t>{1, 1, 2, 2});
    CHECK(is_connected(p, all));

    std::vector<Vertex> bad{5};
    CHECK_THROWS_AS(induced_subgraph(p, bad), InvalidArgument);
}

TEST_CASE("is_connected") {
    auto p4 = path_graph(4);
    std::vector<Vertex> all{0, 1, 2, 3}, ends{0, 3}, single{2}, none;
    CHECK(is_connected(p4, all));
    CHECK_FALSE(is_connected(p4, ends));
    CHECK(is_connected(p4, single));
    CHECK_THROWS_AS(is_connected(p4, none), InvalidArgument);
}

TEST_CASE("contract_edge") {
    CHECK(contract_edge(cycle_graph(4), 0, 1) == complete_graph(3));
    auto k1 = contract_edge(complete_graph(2), 0, 1);
    CHECK(k1.order() == 1);
    CHECK(k1.edge_count() == 0);
    for (auto [u, v] : cycle_graph(5).edges()) {
        auto c = contract_edge(cycle_graph(5), u, v);
        CHECK(c.order() == 4);
        CHECK(c.edge_count() == 4);
        for (Vertex x = 0; x < 4; ++x) CHECK(c.degree(x) == 2);
    }
    CHECK_THROWS_AS(contract_edge(cycle_graph(4), 0, 2), InvalidArgument);
}

TEST_CASE("partition_of and is_proper") {
    auto k2 = complete_graph(2);
    CHECK(partition_of(Colouring({0, 1}, 2)).blocks() == std::vector<std::vector<Vertex>>{{0}, {1}});
    CHECK(partition_of(Colouring({1, 0}, 2)) == partition_of(Colouring({0, 1}, 2)));
    CHECK(partition_of(Colouring({0, 1, 0}, 2)).blocks() == std::vector<std::vector<Vertex>>{{0, 2}, {1}});

    CHECK_FALSE(is_proper(k2, Colouring({0, 0}, 2)));
    CHECK(is_proper(k2, Colouring({0, 1}, 2)));
    CHECK_THROWS_AS(is_proper(k2, Colouring({0, 2}, 2)), InvalidArgument);

    auto c5 = cycle_graph(5);
    for (unsigned mask = 0; mask < 32; ++mask) {
        std::vector<Colour> cs;
        for (unsigned v = 0; v < 5; ++v) cs.push_back((mask >> v) & 1u);
        CHECK_FALSE(is_proper(c5, Colouring(cs, 2)));
    }
}

TEST_CASE("BagFamily and ColourPartition reject malformed blocks") {
    CHECK_THROWS_AS(BagFamily({{0}, {}}), InvalidArgument);
    CHECK_THROWS_AS(BagFamily({{0, 1}, {1, 2}}), InvalidArgument);
    CHECK_THROWS_AS(ColourPartition({{0}, {0}}), InvalidArgument);
    CHECK_THROWS_AS(BagFamily({{0}, {7}}).check_range(3), InvalidArgument);
    CHECK(ColourPartition({{3, 1}, {0, 2}}).blocks() == std::vector<std::vector<Vertex>>{{0, 2}, {1, 3}});
}

TEST_CASE("graph properties on random graphs") {
    std::mt19937_64 rng(20261015);
    for (int trial = 0; trial < 400; ++trial) {
        const std::size_t order = 1 + rng() % 7;
        auto g = oracle::random_graph(rng, order, 1 + rng() % 3, 4);
        const auto m = oracle::matrix_of(g);

        std::vector<Vertex> all(order);
        std::iota(all.begin(), all.end(), 0);
        CHECK(is_connected(g, all) == oracle::connected(m, all));

        for (auto [u, v] : g.edges()) {
            auto c = contract_edge(g, u, v);
            CHECK(c.order() == order - 1);
            for (Vertex x = 0; x < c.order(); ++x) CHECK_FALSE(c.adjacent(x, x));
        }

        std::vector<Vertex> subset;
        for (Vertex v = 0; v < order; ++v)
            if (rng() & 1) subset.push_back(v);
        auto h = induced_subgraph(g, subset);
        for (std::size_t i = 0; i < subset.size(); ++i)
            for (std::size_t j = 0; j < subset.size(); ++j)
                if (i != j)
                    CHECK(h.adjacent(static_cast<Vertex>(i), static_cast<Vertex>(j)) ==
                          g.adjacent(subset[i], subset[j]));

        std::vector<Colour> colours(order);
        for (auto& c : colours) c = static_cast<Colour>(rng() % 4);
        std::vector<Colour> perm{0, 1, 2, 3};
        std::shuffle(perm.begin(), perm.end(), rng);
        std::vector<Colour> permuted(order);
        for (std::size_t v = 0; v < order; ++v) permuted[v] = perm[colours[v]];
        CHECK(partition_of(Colouring(colours, 4)) == partition_of(Colouring(permuted, 4)));
    }
}
