#pragma once

// Fixtures and brute-force oracles shared by the test suites. The oracles
// avoid the library's own algorithms: distances come from plain BFS over
// pairwise intersections, partitions from exhaustive label assignments.

#include "stacked/complex.hpp"
#include "stacked/generators.hpp"
#include "stacked/partition.hpp"
#include "stacked/paths.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace testing {

using namespace stacked;

inline SimplicialComplex heptagon()
{
    return build_complex({{"2", "3", "4"}, {"2", "4", "5"}, {"2", "5", "7"}, {"5", "6", "7"}, {"1", "2", "7"}});
}

// The line 1-2-3-4-5-6.
inline SimplicialComplex line_tree()
{
    return build_complex({{"1", "2"}, {"2", "3"}, {"3", "4"}, {"4", "5"}, {"5", "6"}});
}

// Second tree: spine 1..7 with the branch 4-8-9-10.
inline SimplicialComplex branch_tree()
{
    return build_complex({{"1", "2"}, {"2", "3"}, {"3", "4"}, {"4", "5"}, {"5", "6"}, {"6", "7"}, {"4", "8"},
                          {"8", "9"}, {"9", "10"}});
}

inline FacetId facet_of(const SimplicialComplex& X, std::vector<std::string> labels)
{
    Face face;
    for (const auto& l : labels)
        face.push_back(*X.find_vertex(l));
    return *X.find_facet(face);
}

inline FacetId facet_of(const SimplicialComplex& X, const std::string& token)
{
    return *X.find_facet_token(token);
}

inline VertexId vertex_of(const SimplicialComplex& X, const std::string& label)
{
    return *X.find_vertex(label);
}

inline Face face_of(const SimplicialComplex& X, std::vector<std::string> labels)
{
    Face face;
    for (const auto& l : labels)
        face.push_back(*X.find_vertex(l));
    std::sort(face.begin(), face.end());
    return face;
}

inline Partition vertex_partition(const SimplicialComplex& X, const std::vector<std::vector<std::string>>& blocks)
{
    std::vector<Block> out;
    for (const auto& b : blocks) {
        Block block;
        for (const auto& l : b)
            block.push_back(vertex_of(X, l));
        out.push_back(block);
    }
    return Partition(GroundKind::Vertices, out);
}

inline Partition facet_partition(const SimplicialComplex& X, const std::vector<std::vector<std::string>>& blocks)
{
    std::vector<Block> out;
    for (const auto& b : blocks) {
        Block block;
        for (const auto& t : b)
            block.push_back(facet_of(X, t));
        out.push_back(block);
    }
    return Partition(GroundKind::Facets, out);
}

inline std::vector<std::string> path_tokens(const SimplicialComplex& X, const FacetPath& p)
{
    std::vector<std::string> out;
    for (FacetId f : p.facets)
        out.push_back(X.facet_token(f));
    return out;
}

// Partition rendered with labels, for comparisons across complexes.
inline std::set<std::set<std::string>> label_blocks(const SimplicialComplex& X, const Partition& P)
{
    std::set<std::set<std::string>> out;
    for (const auto& b : P.blocks()) {
        std::set<std::string> block;
        for (Element e : b)
            block.insert(P.kind() == GroundKind::Vertices ? X.label(e) : X.facet_token(e));
        out.insert(block);
    }
    return out;
}

// Adjacency from pairwise intersection sizes.
inline std::vector<std::vector<FacetId>> brute_dual(const SimplicialComplex& X)
{
    std::vector<std::vector<FacetId>> adj(X.facet_count());
    for (FacetId f = 0; f < X.facet_count(); ++f)
        for (FacetId g = 0; g < X.facet_count(); ++g) {
            if (f == g)
                continue;
            Face common;
            const Face& a = X.facet(f);
            const Face& b = X.facet(g);
            for (VertexId v : a)
                if (std::find(b.begin(), b.end(), v) != b.end())
                    common.push_back(v);
            if (common.size() == static_cast<std::size_t>(X.dimension()))
                adj[f].push_back(g);
        }
    return adj;
}

// Fewest facets in a gallery from any facet containing `from` to any facet
// containing `to`, counting both ends.
inline int bfs_face_distance(const SimplicialComplex& X, const Face& from, const Face& to)
{
    auto adj = brute_dual(X);
    std::vector<int> dist(X.facet_count(), -1);
    std::deque<FacetId> queue;
    for (FacetId f = 0; f < X.facet_count(); ++f)
        if (std::includes(X.facet(f).begin(), X.facet(f).end(), from.begin(), from.end())) {
            dist[f] = 1;
            queue.push_back(f);
        }
    while (!queue.empty()) {
        FacetId f = queue.front();
        queue.pop_front();
        if (std::includes(X.facet(f).begin(), X.facet(f).end(), to.begin(), to.end()))
            return dist[f];
        for (FacetId g : adj[f])
            if (dist[g] < 0) {
                dist[g] = dist[f] + 1;
                queue.push_back(g);
            }
    }
    return -1;
}

inline int bfs_vertex_distance(const SimplicialComplex& X, VertexId v, VertexId w)
{
    return v == w ? 0 : bfs_face_distance(X, Face{v}, Face{w});
}

inline int bfs_facet_distance(const SimplicialComplex& X, FacetId f, FacetId g)
{
    return bfs_face_distance(X, X.facet(f), X.facet(g)) - 1;
}

// Every walk f -> g without repeated facets whose consecutive intersections
// are pairwise distinct.
inline std::vector<std::vector<FacetId>> all_simple_paths(const SimplicialComplex& X, FacetId from, FacetId to)
{
    auto adj = brute_dual(X);
    std::vector<std::vector<FacetId>> out;
    std::vector<FacetId> walk{from};
    std::vector<char> used(X.facet_count(), 0);
    used[from] = 1;
    std::function<void()> dfs = [&] {
        if (walk.back() == to) {
            std::set<Face> seen;
            bool distinct = true;
            for (std::size_t i = 0; i + 1 < walk.size(); ++i)
                distinct &= seen.insert(intersect(X.facet(walk[i]), X.facet(walk[i + 1]))).second;
            if (distinct)
                out.push_back(walk);
            return;
        }
        for (FacetId g : adj[walk.back()]) {
            if (used[g])
                continue;
            used[g] = 1;
            walk.push_back(g);
            dfs();
            walk.pop_back();
            used[g] = 0;
        }
    };
    dfs();
    return out;
}

// All set partitions of {0..n-1}, built by dropping each element into an
// existing block or a new one, then sorted.
inline std::vector<Partition> naive_partitions(std::size_t n, GroundKind kind = GroundKind::Vertices)
{
    std::vector<Partition> out;
    std::vector<Block> blocks;
    std::function<void(Element)> place = [&](Element e) {
        if (e == n) {
            out.emplace_back(kind, blocks);
            return;
        }
        for (std::size_t b = 0; b < blocks.size(); ++b) {
            blocks[b].push_back(e);
            place(e + 1);
            blocks[b].pop_back();
        }
        blocks.push_back({e});
        place(e + 1);
        blocks.pop_back();
    };
    place(0);
    std::sort(out.begin(), out.end());
    return out;
}

inline std::vector<Partition> naive_family(std::size_t n, int parts, int scatter,
                                           const std::function<int(Element, Element)>& distance,
                                           GroundKind kind = GroundKind::Vertices)
{
    std::vector<Partition> out;
    for (const auto& P : naive_partitions(n, kind)) {
        if (P.size() != static_cast<std::size_t>(parts))
            continue;
        bool ok = true;
        for (const auto& b : P.blocks())
            for (std::size_t i = 0; i < b.size() && ok; ++i)
                for (std::size_t j = i + 1; j < b.size() && ok; ++j)
                    ok = distance(b[i], b[j]) >= scatter;
        if (ok)
            out.push_back(P);
    }
    return out;
}

// Random gallery walk from `from` to `to`: a random detour of `wander` steps,
// then a random descent along BFS distances.
inline Walk random_walk(const SimplicialComplex& X, FacetId from, FacetId to, int wander, std::mt19937_64& rng)
{
    const auto& adj = X.dual_adjacency();
    Walk walk{{from}};
    for (int i = 0; i < wander; ++i) {
        const auto& next = adj[walk.facets.back()];
        if (next.empty())
            break;
        walk.facets.push_back(next[std::uniform_int_distribution<std::size_t>(0, next.size() - 1)(rng)]);
    }
    std::vector<int> dist(X.facet_count(), -1);
    std::deque<FacetId> queue{to};
    dist[to] = 0;
    while (!queue.empty()) {
        FacetId f = queue.front();
        queue.pop_front();
        for (FacetId g : adj[f])
            if (dist[g] < 0) {
                dist[g] = dist[f] + 1;
                queue.push_back(g);
            }
    }
    while (walk.facets.back() != to) {
        std::vector<FacetId> closer;
        for (FacetId g : adj[walk.facets.back()])
            if (dist[g] == dist[walk.facets.back()] - 1)
                closer.push_back(g);
        walk.facets.push_back(closer[std::uniform_int_distribution<std::size_t>(0, closer.size() - 1)(rng)]);
    }
    return walk;
}

// Applies the two shortening rules at a randomly chosen colliding pair until
// no collision remains.
inline std::vector<FacetId> reduce_randomly(const SimplicialComplex& X, std::vector<FacetId> f, std::mt19937_64& rng)
{
    while (true) {
        std::vector<std::pair<std::size_t, std::size_t>> collisions;
        for (std::size_t i = 0; i + 1 < f.size(); ++i)
            for (std::size_t j = i + 1; j + 1 < f.size(); ++j)
                if (intersect(X.facet(f[i]), X.facet(f[i + 1])) == intersect(X.facet(f[j]), X.facet(f[j + 1])))
                    collisions.emplace_back(i, j);
        if (collisions.empty())
            return f;
        auto [i, j] = collisions[std::uniform_int_distribution<std::size_t>(0, collisions.size() - 1)(rng)];
        std::vector<FacetId> shorter;
        const std::size_t keep = f[i] != f[j + 1] ? i + 1 : i;
        shorter.assign(f.begin(), f.begin() + static_cast<std::ptrdiff_t>(keep));
        shorter.insert(shorter.end(), f.begin() + static_cast<std::ptrdiff_t>(j) + 1, f.end());
        f = shorter;
    }
}

// Small stacked complexes of every flavour the generators produce.
inline std::vector<SimplicialComplex> small_corpus()
{
    std::vector<SimplicialComplex> out;
    for (int v = 2; v <= 5; ++v)
        for_each_tree(v, [&](const SimplicialComplex& T) { out.push_back(T); });
    for (int k = 3; k <= 6; ++k)
        for_each_polygon_triangulation(k, [&](const SimplicialComplex& X) { out.push_back(X); });
    for (std::uint64_t seed = 0; seed < 30; ++seed)
        out.push_back(random_stacked(2 + static_cast<int>(seed % 2), 1 + static_cast<int>(seed % 6), seed));
    return out;
}

} // namespace testing
