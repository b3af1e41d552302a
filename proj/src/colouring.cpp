#include "lvm/colouring.hpp"

#include "lvm/error.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace lvm {

namespace {

void canonicalise(std::vector<std::vector<Vertex>>& sets) {
    std::vector<Vertex> all;
    for (auto& s : sets) {
        if (s.empty()) throw InvalidArgument("empty block");
        std::sort(s.begin(), s.end());
        s.erase(std::unique(s.begin(), s.end()), s.end());
        all.insert(all.end(), s.begin(), s.end());
    }
    std::sort(all.begin(), all.end());
    if (std::adjacent_find(all.begin(), all.end()) != all.end())
        throw InvalidArgument("blocks are not pairwise disjoint");
}

} // namespace

ColourPartition::ColourPartition(std::vector<std::vector<Vertex>> blocks) : blocks_(std::move(blocks)) {
    canonicalise(blocks_);
    std::sort(blocks_.begin(), blocks_.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
}

BagFamily::BagFamily(std::vector<std::vector<Vertex>> bags) : bags_(std::move(bags)) {
    canonicalise(bags_);
}

void BagFamily::check_range(std::size_t order) const {
    for (const auto& bag : bags_)
        if (bag.back() >= order)
            throw InvalidArgument("bag vertex " + std::to_string(bag.back()) + " out of range");
}

ColourPartition partition_of(const Colouring& c) {
    std::map<Colour, std::vector<Vertex>> classes;
    for (Vertex v = 0; v < c.size(); ++v) classes[c[v]].push_back(v);
    std::vector<std::vector<Vertex>> blocks;
    blocks.reserve(classes.size());
    for (auto& [colour, members] : classes) blocks.push_back(std::move(members));
    return ColourPartition(std::move(blocks));
}

bool is_proper(const Graph& g, const Colouring& c) {
    if (c.size() != g.order())
        throw InvalidArgument("colouring covers " + std::to_string(c.size()) + " vertices, graph has " +
                              std::to_string(g.order()));
    for (Vertex v = 0; v < c.size(); ++v)
        if (c[v] >= c.palette_size())
            throw InvalidArgument("colour " + std::to_string(c[v]) + " outside palette of size " +
                                  std::to_string(c.palette_size()));
    for (auto [u, v] : g.edges())
        if (c[u] == c[v]) return false;
    return true;
}

} // namespace lvm
