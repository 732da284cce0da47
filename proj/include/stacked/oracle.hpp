#pragma once

#include "stacked/partition_maps.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace stacked {

// Family of partitions of {0..ground-1} into exactly `parts` blocks whose
// members are pairwise at distance >= `scatter`.
struct EnumerationSpec {
    GroundKind kind = GroundKind::Vertices;
    std::size_t ground = 0;
    int parts = 1;
    int scatter = 1;
    std::function<int(Element, Element)> distance;
};

EnumerationSpec vertex_family(const GalleryIndex& gallery, int parts, int scatter);
EnumerationSpec facet_family(const GalleryIndex& gallery, int parts, int scatter);
// Integer gap |i - j| on {0..n-1}; matches the line graph distances.
EnumerationSpec gap_family(std::size_t n, int parts, int scatter);

// Visits every member once, in restricted-growth-string order: lexicographic
// in the sequence of block indices block_of()[0], block_of()[1], ... Throws
// Error{OutOfRange} if parts < 1 or scatter < 1. Returning false from `visit`
// stops the enumeration.
void for_each_partition(const EnumerationSpec& spec, const std::function<bool(const Partition&)>& visit);
std::vector<Partition> enumerate_partitions(const EnumerationSpec& spec);
std::uint64_t count_partitions(const EnumerationSpec& spec);

// Enumerates both families of the correspondence on X and runs
// check_theorem_instance on them. The report is empty of failures iff the
// bijection holds on this instance.
TheoremReport verify_bijection(const GalleryIndex& gallery, int r, int s, unsigned threads = 1);
TheoremReport verify_bijection(const SimplicialComplex& X, int r, int s, unsigned threads = 1);

// One `key=value` per line.
std::string format_report(const TheoremReport& report);

// Exact, 0 <= k <= n <= 25; throws Error{OutOfRange} otherwise.
std::uint64_t stirling2(int n, int k);
std::uint64_t bell(int n);

struct CensusRow {
    int r = 0;
    std::uint64_t count = 0;    // vertex partitions into r + d independent blocks
    std::uint64_t expected = 0; // stirling2(n, r)
};

struct CensusReport {
    int facets = 0;
    int dimension = 0;
    std::vector<CensusRow> rows;
    std::uint64_t total = 0;
    std::uint64_t bell = 0;

    bool ok() const
    {
        for (const auto& row : rows)
            if (row.count != row.expected)
                return false;
        return total == bell;
    }
};

CensusReport census(const GalleryIndex& gallery);
std::string format_census(const CensusReport& report);

} // namespace stacked
