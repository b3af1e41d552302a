#pragma once

#include "lvm/graph.hpp"

#include <cstddef>
#include <cstdint>
#include <vector>

namespace lvm {

using Colour = std::uint32_t;

/// Total map vertex -> colour with a declared palette size. Properness is not
/// enforced here; operations that need it check it.
class Colouring {
public:
    Colouring() = default;
    Colouring(std::vector<Colour> assignment, std::size_t palette_size)
        : assignment_(std::move(assignment)), palette_size_(palette_size) {}

    std::size_t size() const { return assignment_.size(); }
    std::size_t palette_size() const { return palette_size_; }
    Colour operator[](Vertex v) const { return assignment_[v]; }
    const std::vector<Colour>& assignment() const { return assignment_; }

    friend bool operator==(const Colouring&, const Colouring&) = default;
    /// Lexicographic on the assignment vector, then palette size.
    friend auto operator<=>(const Colouring& a, const Colouring& b) {
        if (auto c = a.assignment_ <=> b.assignment_; c != 0) return c;
        return a.palette_size_ <=> b.palette_size_;
    }

private:
    std::vector<Colour> assignment_;
    std::size_t palette_size_ = 0;
};

/// Unlabelled colour classes. Each block is sorted and blocks are ordered by
/// their least element, so equal block sets compare equal.
class ColourPartition {
public:
    ColourPartition() = default;
    /// Throws InvalidArgument if a block is empty or two blocks overlap.
    explicit ColourPartition(std::vector<std::vector<Vertex>> blocks);

    const std::vector<std::vector<Vertex>>& blocks() const { return blocks_; }
    std::size_t size() const { return blocks_.size(); }

    friend bool operator==(const ColourPartition&, const ColourPartition&) = default;
    friend auto operator<=>(const ColourPartition&, const ColourPartition&) = default;

private:
    std::vector<std::vector<Vertex>> blocks_;
};

/// Ordered family of nonempty, pairwise disjoint vertex sets. Connectivity is
/// not part of the type since quasi-minor models drop it.
class BagFamily {
public:
    BagFamily() = default;
    /// Sorts each bag. Throws InvalidArgument on an empty bag or overlap.
    explicit BagFamily(std::vector<std::vector<Vertex>> bags);

    std::size_t size() const { return bags_.size(); }
    const std::vector<Vertex>& operator[](std::size_t i) const { return bags_[i]; }
    const std::vector<std::vector<Vertex>>& bags() const { return bags_; }
    auto begin() const { return bags_.begin(); }
    auto end() const { return bags_.end(); }

    /// Throws InvalidArgument if any vertex is >= order.
    void check_range(std::size_t order) const;

    friend bool operator==(const BagFamily&, const BagFamily&) = default;

private:
    std::vector<std::vector<Vertex>> bags_;
};

ColourPartition partition_of(const Colouring& c);

/// Throws InvalidArgument if the assignment does not cover g or a colour is
/// outside the palette.
bool is_proper(const Graph& g, const Colouring& c);

} // namespace lvm
