#include "stacked/natline.hpp"

#include "stacked/error.hpp"
#include "stacked/partition_maps.hpp"

#include <algorithm>
#include <string>

namespace stacked {

PrefixPartition make_prefix_partition(int n, std::vector<std::vector<int>> blocks)
{
    if (n < 0)
        throw Error(ErrorKind::OutOfRange, "prefix length must be non-negative");
    std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
    int covered = 0;
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        auto& b = blocks[i];
        if (b.empty())
            throw Error::at_item(ErrorKind::NotAPartition, "empty block", i);
        std::sort(b.begin(), b.end());
        for (int x : b) {
            if (x < 1 || x > n)
                throw Error::at_item(ErrorKind::NotAPartition,
                                     std::to_string(x) + " outside [1.." + std::to_string(n) + "]", i);
            if (seen[static_cast<std::size_t>(x)]++)
                throw Error::at_item(ErrorKind::NotAPartition, std::to_string(x) + " appears twice", i);
            ++covered;
        }
    }
    if (covered != n)
        throw Error(ErrorKind::NotAPartition, "blocks do not cover [1.." + std::to_string(n) + "]");
    std::sort(blocks.begin(), blocks.end(), [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return PrefixPartition{n, std::move(blocks)};
}

int prefix_scatter(const PrefixPartition& P)
{
    int s = P.n;
    for (const auto& b : P.blocks)
        for (std::size_t i = 1; i < b.size(); ++i)
            s = std::min(s, b[i] - b[i - 1]);
    return s;
}

SimplicialComplex line_graph(int n)
{
    if (n < 1)
        throw Error(ErrorKind::OutOfRange, "line graph needs at least one edge");
    std::vector<std::vector<std::string>> edges;
    for (int i = 1; i <= n; ++i)
        edges.push_back({std::to_string(i), std::to_string(i + 1)});
    return SimplicialComplex::build(edges);
}

PrefixPartition refine_once(const PrefixPartition& P)
{
    const GalleryIndex gallery(line_graph(P.n));
    std::vector<Block> edge_blocks;
    for (const auto& b : P.blocks) {
        Block ids;
        for (int x : b)
            ids.push_back(static_cast<Element>(x - 1));
        edge_blocks.push_back(std::move(ids));
    }
    const Partition vertices = facet_to_vertex(gallery, Partition(GroundKind::Facets, std::move(edge_blocks)));
    std::vector<std::vector<int>> out;
    for (const auto& b : vertices.blocks()) {
        std::vector<int> ints;
        for (Element v : b)
            ints.push_back(static_cast<int>(v) + 1);
        out.push_back(std::move(ints));
    }
    return PrefixPartition{P.n + 1, std::move(out)};
}

PrefixPartition refine_iter(const PrefixPartition& P, int steps)
{
    if (steps < 0)
        throw Error(ErrorKind::OutOfRange, "step count must be non-negative");
    PrefixPartition out = P;
    for (int t = 0; t < steps; ++t)
        out = refine_once(out);
    return out;
}

PrefixPartition restrict_prefix(const PrefixPartition& P, int m)
{
    std::vector<std::vector<int>> blocks;
    for (const auto& b : P.blocks) {
        std::vector<int> kept;
        for (int x : b)
            if (x <= m)
                kept.push_back(x);
        if (!kept.empty())
            blocks.push_back(std::move(kept));
    }
    return PrefixPartition{std::min(m, P.n), std::move(blocks)};
}

bool check_colimit_compatibility(const PrefixPartition& P)
{
    if (P.n < 2)
        throw Error(ErrorKind::OutOfRange, "colimit check needs a prefix of length at least 2");
    const int n = P.n - 1;
    return refine_once(restrict_prefix(P, n)) == restrict_prefix(refine_once(P), n + 1);
}

} // namespace stacked
