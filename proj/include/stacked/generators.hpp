#pragma once

#include "stacked/complex.hpp"

#include <cstdint>
#include <functional>
#include <vector>

namespace stacked {

// Tree on vertices "1".."v" decoded from a Prüfer sequence (entries 1..v,
// length v-2).
SimplicialComplex tree_from_pruefer(int v, const std::vector<int>& sequence);

// Every labeled tree on v vertices (2 <= v <= 8), v^(v-2) of them, in
// lexicographic Prüfer order.
void for_each_tree(int v, const std::function<void(const SimplicialComplex&)>& visit);
std::vector<SimplicialComplex> all_trees(int v);

SimplicialComplex random_tree(int v, std::uint64_t seed);

// Every triangulation of the convex k-gon on "1".."k" (3 <= k <= 10),
// Catalan(k-2) of them.
void for_each_polygon_triangulation(int k, const std::function<void(const SimplicialComplex&)>& visit);
std::vector<SimplicialComplex> polygon_triangulations(int k);

// Starts from the simplex on "1".."d+1" and n-1 times glues a new vertex onto
// a codimension-one face drawn uniformly from all current ones.
SimplicialComplex random_stacked(int d, int n, std::uint64_t seed);

} // namespace stacked
