#pragma once

#include <cstdint>
#include <numeric>
#include <span>
#include <vector>

namespace stacked {

using Element = std::uint32_t;
using Block = std::vector<Element>;

enum class GroundKind { Vertices, Facets };

// Set partition in canonical form: elements ascending inside each block,
// blocks ordered by their smallest element. Construction canonicalizes and
// throws Error{NotAPartition} on empty or overlapping blocks.
class Partition {
public:
    Partition() = default;
    Partition(GroundKind kind, std::vector<Block> blocks);

    // Element i goes to block labels[i]; labels need not be contiguous.
    static Partition from_labels(GroundKind kind, std::span<const std::uint32_t> labels);

    // Every element of 0..n-1 in its own block.
    static Partition singletons(GroundKind kind, std::size_t n);

    GroundKind kind() const noexcept { return kind_; }
    const std::vector<Block>& blocks() const noexcept { return blocks_; }
    std::size_t size() const noexcept { return blocks_.size(); }
    bool empty() const noexcept { return blocks_.empty(); }
    std::size_t element_count() const;

    // True iff the blocks cover exactly 0..n-1.
    bool covers(std::size_t n) const;

    // block_of()[e] is the block index of e, or npos for elements outside
    // the partition. Sized to max element + 1 (or at least `n`).
    std::vector<std::uint32_t> block_of(std::size_t n = 0) const;

    static constexpr std::uint32_t npos = ~std::uint32_t{0};

    friend bool operator==(const Partition&, const Partition&) = default;
    friend bool operator<(const Partition& a, const Partition& b) { return a.blocks_ < b.blocks_; }

private:
    GroundKind kind_ = GroundKind::Vertices;
    std::vector<Block> blocks_;
};

// Intersect every block with `subset`, drop empties.
Partition restrict_partition(const Partition& P, std::span<const Element> subset);

// Union-find with path halving and union by size.
class DisjointSets {
public:
    explicit DisjointSets(std::size_t n)
        : parent_(n)
        , size_(n, 1)
    {
        std::iota(parent_.begin(), parent_.end(), 0u);
    }

    std::uint32_t find(std::uint32_t x)
    {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    bool unite(std::uint32_t a, std::uint32_t b)
    {
        a = find(a);
        b = find(b);
        if (a == b)
            return false;
        if (size_[a] < size_[b])
            std::swap(a, b);
        parent_[b] = a;
        size_[a] += size_[b];
        return true;
    }

    // Merges every class of `other` into this structure.
    void absorb(DisjointSets& other)
    {
        for (std::uint32_t x = 0; x < other.parent_.size(); ++x)
            unite(x, other.find(x));
    }

    std::size_t size() const noexcept { return parent_.size(); }

    Partition to_partition(GroundKind kind)
    {
        std::vector<std::uint32_t> labels(parent_.size());
        for (std::uint32_t x = 0; x < parent_.size(); ++x)
            labels[x] = find(x);
        return Partition::from_labels(kind, labels);
    }

private:
    std::vector<std::uint32_t> parent_;
    std::vector<std::uint32_t> size_;
};

} // namespace stacked
