#include "lvm/construction.hpp"

#include "lvm/error.hpp"

#include <random>
#include <string>

namespace lvm {

std::string_view to_string(ExclusionChoice c) {
    switch (c) {
    case ExclusionChoice::AA: return "AA";
    case ExclusionChoice::AB: return "AB";
    case ExclusionChoice::BA: return "BA";
    case ExclusionChoice::BB: return "BB";
    }
    return "??";
}

ExclusionChoice parse_exclusion_choice(std::string_view token) {
    if (token == "AA") return ExclusionChoice::AA;
    if (token == "AB") return ExclusionChoice::AB;
    if (token == "BA") return ExclusionChoice::BA;
    if (token == "BB") return ExclusionChoice::BB;
    throw InvalidArgument("unknown exclusion choice '" + std::string(token) + "'");
}

namespace {

Side first_side(ExclusionChoice c) { return (static_cast<unsigned>(c) & 2u) ? Side::B : Side::A; }
Side second_side(ExclusionChoice c) { return (static_cast<unsigned>(c) & 1u) ? Side::B : Side::A; }

std::size_t pair_count(std::size_t n) { return n * (n - 1) / 2; }

} // namespace

std::size_t LvmInstance::slot(std::size_t i, std::size_t j) const {
    // Pairs (1,2),(1,3),...,(1,n),(2,3),...: row i starts after sum_{r<i}(n-r).
    return (i - 1) * (2 * n_ - i) / 2 + (j - i - 1);
}

ExclusionChoice LvmInstance::exclusion(std::size_t i, std::size_t j) const {
    if (i < 1 || j > n_ || i >= j)
        throw InvalidArgument("index pair (" + std::to_string(i) + "," + std::to_string(j) +
                              ") is not 1 <= i < j <= n");
    return choices_[slot(i, j)];
}

std::vector<ExclusionEntry> LvmInstance::exclusion_table() const {
    std::vector<ExclusionEntry> out;
    out.reserve(choices_.size());
    for (std::size_t i = 1; i <= n_; ++i)
        for (std::size_t j = i + 1; j <= n_; ++j) out.push_back({i, j, choices_[slot(i, j)]});
    return out;
}

bool LvmInstance::cross_edge(Side x, std::size_t i, Side y, std::size_t j) const {
    if (i == j) return false;
    if (i > j) return cross_edge(y, j, x, i);
    auto c = choices_[slot(i, j)];
    return !(first_side(c) == x && second_side(c) == y);
}

LvmInstance LvmInstance::build(std::size_t n, std::optional<std::uint64_t> seed,
                               std::vector<ExclusionChoice> choices) {
    LvmInstance inst;
    inst.n_ = n;
    inst.seed_ = seed;
    inst.choices_ = std::move(choices);

    std::vector<Edge> edges;
    edges.reserve(3 * pair_count(n));
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = i + 1; j <= n; ++j)
            for (Side x : {Side::A, Side::B})
                for (Side y : {Side::A, Side::B})
                    if (inst.cross_edge(x, i, y, j)) edges.emplace_back(vertex_of(x, i), vertex_of(y, j));
    inst.graph_ = Graph(2 * n, edges);
    return inst;
}

LvmInstance generate(std::size_t n, std::uint64_t seed) {
    if (n == 0) throw InvalidArgument("n must be at least 1");
    std::mt19937_64 engine(seed);
    const std::size_t total = pair_count(n);
    std::vector<ExclusionChoice> choices;
    choices.reserve(total);
    std::uint64_t word = 0;
    for (std::size_t t = 0; t < total; ++t) {
        if (t % 32 == 0) word = engine();
        choices.push_back(static_cast<ExclusionChoice>(word & 3u));
        word >>= 2;
    }
    return LvmInstance::build(n, seed, std::move(choices));
}

LvmInstance from_exclusions(std::size_t n, std::span<const ExclusionEntry> table) {
    if (n == 0) throw InvalidArgument("n must be at least 1");
    const std::size_t total = pair_count(n);
    std::vector<ExclusionChoice> choices(total);
    std::vector<bool> filled(total, false);
    LvmInstance probe;
    probe.n_ = n;
    for (const auto& e : table) {
        if (e.i < 1 || e.j > n || e.i >= e.j)
            throw InvalidArgument("exclusion entry (" + std::to_string(e.i) + "," + std::to_string(e.j) +
                                  ") is not 1 <= i < j <= n");
        auto s = probe.slot(e.i, e.j);
        if (filled[s])
            throw InvalidArgument("duplicate exclusion entry (" + std::to_string(e.i) + "," +
                                  std::to_string(e.j) + ")");
        filled[s] = true;
        choices[s] = e.choice;
    }
    if (table.size() != total)
        throw InvalidArgument("exclusion table has " + std::to_string(table.size()) + " entries, expected " +
                              std::to_string(total));
    return LvmInstance::build(n, std::nullopt, std::move(choices));
}

BagFamily canonical_bags(const LvmInstance& inst) {
    std::vector<std::vector<Vertex>> bags;
    bags.reserve(inst.n());
    for (std::size_t p = 1; p <= inst.n(); ++p) bags.push_back({a_vertex(p), b_vertex(p)});
    return BagFamily(std::move(bags));
}

Colouring canonical_colouring(const LvmInstance& inst) {
    std::vector<Colour> assignment(2 * inst.n());
    for (Vertex v = 0; v < assignment.size(); ++v) assignment[v] = static_cast<Colour>(index_of(v) - 1);
    return Colouring(std::move(assignment), inst.n());
}

namespace {

// absent[p][q] (0-based) iff a_{p+1} b_{q+1} is a non-edge, p != q.
std::vector<std::vector<bool>> absence_matrix(const LvmInstance& inst) {
    const std::size_t n = inst.n();
    std::vector<std::vector<bool>> absent(n, std::vector<bool>(n, false));
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q)
            if (p != q) absent[p][q] = !inst.cross_edge(Side::A, p + 1, Side::B, q + 1);
    return absent;
}

// Visits directed 4-cycles i->j->k->l->i of the absence digraph in
// lexicographic order of (i,j,k,l). Stops when visit returns false.
template <class Visit>
void for_each_quadruple(const LvmInstance& inst, Visit&& visit) {
    const std::size_t n = inst.n();
    if (n < 4) return;
    const auto absent = absence_matrix(inst);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (!absent[i][j]) continue;
            for (std::size_t k = 0; k < n; ++k) {
                if (k == i || !absent[j][k]) continue;
                for (std::size_t l = 0; l < n; ++l) {
                    if (l == i || l == j || !absent[k][l] || !absent[l][i]) continue;
                    if (!visit(Quadruple{i + 1, j + 1, k + 1, l + 1})) return;
                }
            }
        }
}

} // namespace

bool is_valid_quadruple(const LvmInstance& inst, const Quadruple& q) {
    for (std::size_t x = 0; x < 4; ++x) {
        if (q[x] < 1 || q[x] > inst.n()) return false;
        for (std::size_t y = x + 1; y < 4; ++y)
            if (q[x] == q[y]) return false;
    }
    for (std::size_t x = 0; x < 4; ++x)
        if (inst.cross_edge(Side::A, q[x], Side::B, q[(x + 1) % 4])) return false;
    return true;
}

std::optional<Quadruple> find_quadruple(const LvmInstance& inst) {
    std::optional<Quadruple> found;
    for_each_quadruple(inst, [&](const Quadruple& q) {
        found = q;
        return false;
    });
    return found;
}

std::uint64_t count_quadruples(const LvmInstance& inst) {
    std::uint64_t ordered = 0;
    for_each_quadruple(inst, [&](const Quadruple&) {
        ++ordered;
        return true;
    });
    return ordered / 4;
}

Colouring alternative_colouring(const LvmInstance& inst, const Quadruple& q) {
    if (!is_valid_quadruple(inst, q))
        throw InvalidArgument("quadruple (" + std::to_string(q[0]) + "," + std::to_string(q[1]) + "," +
                              std::to_string(q[2]) + "," + std::to_string(q[3]) +
                              ") is not valid for this instance");
    auto assignment = canonical_colouring(inst).assignment();
    for (std::size_t x = 0; x < 4; ++x) {
        const auto colour = static_cast<Colour>(q[x] - 1);
        assignment[a_vertex(q[x])] = colour;
        assignment[b_vertex(q[(x + 1) % 4])] = colour;
    }
    return Colouring(std::move(assignment), inst.n());
}

} // namespace lvm
