#pragma once

#include "stacked/complex.hpp"
#include "stacked/natline.hpp"
#include "stacked/partition.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace stacked {

// Complex format: one facet per line, vertex tokens separated by single
// spaces, '#' starts a comment line, blank lines are skipped, LF line ends.
// Errors carry the 1-based line: SyntaxError, plus the build_complex kinds.
SimplicialComplex parse_complex(std::string_view text);
std::string emit_complex(const SimplicialComplex& X);

// Partition format: one block per line, same token rules. Ground tokens are
// vertex labels for vertex partitions and facet tokens (labels joined by ',')
// for facet partitions. Errors: SyntaxError, UnknownToken, Overlap,
// MissingElement, each with a line number (MissingElement uses the last line).
Partition parse_partition(std::string_view text, const SimplicialComplex& X, GroundKind kind);
std::string emit_partition(const Partition& P, const SimplicialComplex& X);

// Same format over an explicit token list; element i is spelled tokens[i].
Partition parse_partition(std::string_view text, const std::vector<std::string>& tokens, GroundKind kind);
std::string emit_partition(const Partition& P, const std::vector<std::string>& tokens);

// Integer tokens over [1..n], plain decimal without leading zeros.
PrefixPartition parse_prefix_partition(std::string_view text, int n);
std::string emit_prefix_partition(const PrefixPartition& P);

// "{a b} {c}" on one line.
std::string inline_partition(const Partition& P, const SimplicialComplex& X);

// Undirected DOT graph. For d = 1 the nodes are the vertices and the edges
// are the facets; for d >= 2 the nodes are facets and the edges are the dual
// adjacency. Blocks of the optional partition become color indices
// (colorscheme set312, cycling after 12).
std::string export_dot(const SimplicialComplex& X, const std::optional<Partition>& partition = std::nullopt);

} // namespace stacked
