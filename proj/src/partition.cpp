#include "stacked/partition.hpp"

#include "stacked/error.hpp"

#include <algorithm>
#include <unordered_map>

namespace stacked {

Partition::Partition(GroundKind kind, std::vector<Block> blocks)
    : kind_(kind)
    , blocks_(std::move(blocks))
{
    for (std::size_t i = 0; i < blocks_.size(); ++i) {
        if (blocks_[i].empty())
            throw Error::at_item(ErrorKind::NotAPartition, "empty block", i);
        std::sort(blocks_[i].begin(), blocks_[i].end());
        if (std::adjacent_find(blocks_[i].begin(), blocks_[i].end()) != blocks_[i].end())
            throw Error::at_item(ErrorKind::NotAPartition, "element repeated inside a block", i);
    }
    std::sort(blocks_.begin(), blocks_.end(), [](const Block& a, const Block& b) { return a.front() < b.front(); });
    std::vector<Element> all;
    for (const auto& b : blocks_)
        all.insert(all.end(), b.begin(), b.end());
    std::sort(all.begin(), all.end());
    if (auto it = std::adjacent_find(all.begin(), all.end()); it != all.end())
        throw Error(ErrorKind::NotAPartition, "element " + std::to_string(*it) + " is in two blocks");
}

Partition Partition::from_labels(GroundKind kind, std::span<const std::uint32_t> labels)
{
    std::unordered_map<std::uint32_t, std::size_t> slot;
    std::vector<Block> blocks;
    for (Element e = 0; e < labels.size(); ++e) {
        auto [it, fresh] = slot.emplace(labels[e], blocks.size());
        if (fresh)
            blocks.emplace_back();
        blocks[it->second].push_back(e);
    }
    return Partition(kind, std::move(blocks));
}

Partition Partition::singletons(GroundKind kind, std::size_t n)
{
    std::vector<Block> blocks;
    for (Element e = 0; e < n; ++e)
        blocks.push_back({e});
    return Partition(kind, std::move(blocks));
}

std::size_t Partition::element_count() const
{
    std::size_t n = 0;
    for (const auto& b : blocks_)
        n += b.size();
    return n;
}

bool Partition::covers(std::size_t n) const
{
    if (element_count() != n)
        return false;
    for (const auto& b : blocks_)
        if (b.back() >= n)
            return false;
    return true;
}

std::vector<std::uint32_t> Partition::block_of(std::size_t n) const
{
    std::size_t size = n;
    for (const auto& b : blocks_)
        size = std::max<std::size_t>(size, b.back() + 1);
    std::vector<std::uint32_t> out(size, npos);
    for (std::uint32_t i = 0; i < blocks_.size(); ++i)
        for (Element e : blocks_[i])
            out[e] = i;
    return out;
}

Partition restrict_partition(const Partition& P, std::span<const Element> subset)
{
    std::vector<Element> keep(subset.begin(), subset.end());
    std::sort(keep.begin(), keep.end());
    std::vector<Block> blocks;
    for (const auto& b : P.blocks()) {
        Block part;
        std::set_intersection(b.begin(), b.end(), keep.begin(), keep.end(), std::back_inserter(part));
        if (!part.empty())
            blocks.push_back(std::move(part));
    }
    return Partition(P.kind(), std::move(blocks));
}

} // namespace stacked
