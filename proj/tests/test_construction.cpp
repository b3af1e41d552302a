#include "lvm/construction.hpp"
#include "lvm/error.hpp"
#include "lvm/kempe.hpp"
#include "lvm/minor.hpp"

#include <doctest.h>

#include <random>

#include <cmath>
#include <map>

using namespace lvm;

namespace {

// Pair {1,2}: AB, {2,3}: AB, {3,4}: AB, {1,4}: BA; the rest fixed to AA.
// Then a1b2, a2b3, a3b4 and a4b1 are exactly the excluded pairs.
LvmInstance quadruple_fixture() {
    std::vector<ExclusionEntry> table{
        {1, 2, ExclusionChoice::AB}, {1, 3, ExclusionChoice::AA}, {1, 4, ExclusionChoice::BA},
        {2, 3, ExclusionChoice::AB}, {2, 4, ExclusionChoice::AA}, {3, 4, ExclusionChoice::AB},
    };
    return from_exclusions(4, table);
}

} // namespace

TEST_CASE("generate: sizes") {
    auto g1 = generate(1, 99);
    CHECK(g1.graph().order() == 2);
    CHECK(g1.graph().edge_count() == 0);
    CHECK(generate(5, 7).graph().edge_count() == 30);
    CHECK_THROWS_AS(generate(0, 1), InvalidArgument);
}

TEST_CASE("generate: forced edges for a given choice") {
    // Find a seed whose single choice is AA and check the resulting path.
    std::uint64_t seed = 0;
    while (generate(2, seed).exclusion(1, 2) != ExclusionChoice::AA) ++seed;
    auto inst = generate(2, seed);
    CHECK(inst.graph().edges() == std::vector<Edge>{{a_vertex(1), b_vertex(2)}, {b_vertex(1), a_vertex(2)},
                                                     {b_vertex(1), b_vertex(2)}});
}

TEST_CASE("generate is reproducible and honours the token stream contract") {
    CHECK(generate(17, 123) == generate(17, 123));
    CHECK_FALSE(generate(17, 123).exclusion_table() == generate(17, 124).exclusion_table());

    // 32 tokens per mt19937_64 word, low bits first.
    std::mt19937_64 engine(5);
    auto first = engine();
    auto inst = generate(9, 5); // 36 pairs: needs two words
    auto table = inst.exclusion_table();
    for (std::size_t t = 0; t < 32; ++t) CHECK(static_cast<unsigned>(table[t].choice) == ((first >> (2 * t)) & 3u));
    auto second = engine();
    CHECK(static_cast<unsigned>(table[32].choice) == (second & 3u));
}

TEST_CASE("from_exclusions") {
    std::vector<ExclusionEntry> bb{{1, 2, ExclusionChoice::BB}};
    CHECK(from_exclusions(2, bb).graph().edges() ==
          std::vector<Edge>{{a_vertex(1), a_vertex(2)}, {a_vertex(1), b_vertex(2)}, {b_vertex(1), a_vertex(2)}});

    auto fx = quadruple_fixture();
    CHECK_FALSE(fx.graph().adjacent(a_vertex(1), b_vertex(2)));
    CHECK_FALSE(fx.graph().adjacent(a_vertex(2), b_vertex(3)));
    CHECK_FALSE(fx.graph().adjacent(a_vertex(3), b_vertex(4)));
    CHECK_FALSE(fx.graph().adjacent(a_vertex(4), b_vertex(1)));

    CHECK(from_exclusions(1, {}).graph().edge_count() == 0);
    CHECK_FALSE(from_exclusions(1, {}).seed().has_value());

    std::vector<ExclusionEntry> missing{{1, 2, ExclusionChoice::AA}};
    CHECK_THROWS_AS(from_exclusions(3, missing), InvalidArgument);
    std::vector<ExclusionEntry> dup{{1, 2, ExclusionChoice::AA}, {1, 2, ExclusionChoice::AB}};
    CHECK_THROWS_AS(from_exclusions(2, dup), InvalidArgument);
    std::vector<ExclusionEntry> reversed{{2, 1, ExclusionChoice::AA}};
    CHECK_THROWS_AS(from_exclusions(2, reversed), InvalidArgument);
}

TEST_CASE("canonical bags and colouring") {
    CHECK(canonical_bags(generate(1, 0)).bags() == std::vector<std::vector<Vertex>>{{0, 1}});
    CHECK(canonical_bags(generate(3, 0)).bags() == std::vector<std::vector<Vertex>>{{0, 1}, {2, 3}, {4, 5}});
    auto ten = generate(10, 31337);
    CHECK(canonical_bags(ten).size() == 10);
    CHECK(verify_quasi_minor(ten.graph(), canonical_bags(ten)));

    CHECK(canonical_colouring(generate(2, 4)).assignment() == std::vector<Colour>{0, 0, 1, 1});
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        auto inst = generate(8, seed);
        auto c = canonical_colouring(inst);
        CHECK(c.palette_size() == 8);
        CHECK(is_proper(inst.graph(), c));
        CHECK(is_frozen(inst.graph(), c));
    }
}

TEST_CASE("find_quadruple") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        CHECK_FALSE(find_quadruple(generate(3, seed)).has_value());
        CHECK_FALSE(find_quadruple(generate(2, seed)).has_value());
    }
    auto fx = quadruple_fixture();
    auto q = find_quadruple(fx);
    REQUIRE(q.has_value());
    CHECK(*q == Quadruple{1, 2, 3, 4});
    CHECK(count_quadruples(fx) >= 1);
}

TEST_CASE("find_quadruple returns the lexicographically first valid tuple") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        auto inst = generate(7, seed);
        std::optional<Quadruple> brute;
        std::uint64_t ordered = 0;
        for (std::size_t i = 1; i <= 7; ++i)
            for (std::size_t j = 1; j <= 7; ++j)
                for (std::size_t k = 1; k <= 7; ++k)
                    for (std::size_t l = 1; l <= 7; ++l) {
                        Quadruple q{i, j, k, l};
                        if (i == j || i == k || i == l || j == k || j == l || k == l) continue;
                        const auto& g = inst.graph();
                        if (g.adjacent(a_vertex(i), b_vertex(j)) || g.adjacent(a_vertex(j), b_vertex(k)) ||
                            g.adjacent(a_vertex(k), b_vertex(l)) || g.adjacent(a_vertex(l), b_vertex(i)))
                            continue;
                        if (!brute) brute = q;
                        ++ordered;
                    }
        CHECK(find_quadruple(inst) == brute);
        CHECK(count_quadruples(inst) * 4 == ordered);
    }
}

TEST_CASE("alternative_colouring") {
    auto fx = quadruple_fixture();
    auto alt = alternative_colouring(fx, {1, 2, 3, 4});
    CHECK(is_proper(fx.graph(), alt));
    auto p = partition_of(alt);
    CHECK(p.blocks() == std::vector<std::vector<Vertex>>{{a_vertex(1), b_vertex(2)},
                                                        {b_vertex(1), a_vertex(4)},
                                                        {a_vertex(2), b_vertex(3)},
                                                        {a_vertex(3), b_vertex(4)}});
    auto canonical = partition_of(canonical_colouring(fx));
    std::size_t differing = 0;
    for (const auto& block : p.blocks())
        differing += std::find(canonical.blocks().begin(), canonical.blocks().end(), block) == canonical.blocks().end();
    CHECK(differing == 4);

    // (2,1,3,4) needs a2b1 absent, but pair {1,2} excludes a1b2 instead.
    CHECK_THROWS_AS(alternative_colouring(fx, {2, 1, 3, 4}), InvalidArgument);
}

TEST_CASE("construction invariants over many seeds") {
    for (std::size_t n = 2; n <= 40; n += 3)
        for (std::uint64_t seed = 0; seed < 10; ++seed) {
            auto inst = generate(n, seed * 7919 + n);
            const auto& g = inst.graph();
            CHECK(g.edge_count() == 3 * n * (n - 1) / 2);
            for (std::size_t i = 1; i <= n; ++i) CHECK_FALSE(g.adjacent(a_vertex(i), b_vertex(i)));
            for (std::size_t i = 1; i <= n; ++i)
                for (std::size_t j = i + 1; j <= n; ++j) {
                    std::vector<Vertex> four{a_vertex(i), b_vertex(i), a_vertex(j), b_vertex(j)};
                    auto h = induced_subgraph(g, four);
                    CHECK(h.edge_count() == 3);
                    CHECK(is_connected(h, std::vector<Vertex>{0, 1, 2, 3}));
                }
            if (auto q = find_quadruple(inst)) {
                auto alt = alternative_colouring(inst, *q);
                CHECK(is_proper(g, alt));
                CHECK(partition_of(alt) != partition_of(canonical_colouring(inst)));
            }
        }
}

TEST_CASE("each cross pair is an edge with frequency 3/4") {
    // Fixed cross pairs, one per side combination, over many seeds.
    const int seeds = 4000;
    std::map<int, int> hits;
    for (int s = 0; s < seeds; ++s) {
        auto inst = generate(5, static_cast<std::uint64_t>(s));
        hits[0] += inst.graph().adjacent(a_vertex(1), a_vertex(2));
        hits[1] += inst.graph().adjacent(a_vertex(2), b_vertex(4));
        hits[2] += inst.graph().adjacent(b_vertex(3), a_vertex(5));
        hits[3] += inst.graph().adjacent(b_vertex(1), b_vertex(5));
    }
    const double se = std::sqrt(0.75 * 0.25 / seeds);
    for (auto [k, h] : hits) CHECK(std::abs(h / double(seeds) - 0.75) <= 3 * se);
}
