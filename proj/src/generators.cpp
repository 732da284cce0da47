#include "stacked/generators.hpp"

#include "stacked/error.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <string>

namespace stacked {

namespace {

using Edge = std::pair<int, int>;

SimplicialComplex from_int_facets(const std::vector<std::vector<int>>& facets)
{
    std::vector<std::vector<std::string>> rows;
    rows.reserve(facets.size());
    for (const auto& f : facets) {
        std::vector<std::string> row;
        for (int x : f)
            row.push_back(std::to_string(x));
        rows.push_back(std::move(row));
    }
    return SimplicialComplex::build(rows);
}

// Triangulations of the convex polygon with corners lo..hi (consecutive).
void triangulate(int lo, int hi, std::vector<std::vector<int>>& acc,
                 const std::function<void()>& done)
{
    if (hi - lo < 2) {
        done();
        return;
    }
    for (int apex = lo + 1; apex < hi; ++apex) {
        acc.push_back({lo, apex, hi});
        triangulate(lo, apex, acc, [&] { triangulate(apex, hi, acc, done); });
        acc.pop_back();
    }
}

} // namespace

SimplicialComplex tree_from_pruefer(int v, const std::vector<int>& sequence)
{
    if (v < 2 || sequence.size() != static_cast<std::size_t>(v - 2))
        throw Error(ErrorKind::OutOfRange, "Prüfer sequence must have length v-2 with v >= 2");
    std::vector<int> degree(static_cast<std::size_t>(v) + 1, 1);
    for (int x : sequence) {
        if (x < 1 || x > v)
            throw Error(ErrorKind::OutOfRange, "Prüfer entry outside 1..v");
        ++degree[static_cast<std::size_t>(x)];
    }
    std::set<int> leaves;
    for (int x = 1; x <= v; ++x)
        if (degree[static_cast<std::size_t>(x)] == 1)
            leaves.insert(x);
    std::vector<std::vector<int>> edges;
    for (int x : sequence) {
        const int leaf = *leaves.begin();
        leaves.erase(leaves.begin());
        edges.push_back({leaf, x});
        if (--degree[static_cast<std::size_t>(x)] == 1)
            leaves.insert(x);
    }
    edges.push_back({*leaves.begin(), *std::next(leaves.begin())});
    return from_int_facets(edges);
}

void for_each_tree(int v, const std::function<void(const SimplicialComplex&)>& visit)
{
    if (v < 2 || v > 8)
        throw Error(ErrorKind::OutOfRange, "all_trees supports 2 <= v <= 8");
    std::vector<int> seq(static_cast<std::size_t>(v - 2), 1);
    while (true) {
        visit(tree_from_pruefer(v, seq));
        std::size_t i = seq.size();
        while (i > 0 && seq[i - 1] == v)
            seq[--i] = 1;
        if (i == 0)
            return;
        ++seq[i - 1];
    }
}

std::vector<SimplicialComplex> all_trees(int v)
{
    std::vector<SimplicialComplex> out;
    for_each_tree(v, [&](const SimplicialComplex& T) { out.push_back(T); });
    return out;
}

SimplicialComplex random_tree(int v, std::uint64_t seed)
{
    if (v < 2)
        throw Error(ErrorKind::OutOfRange, "a tree needs at least two vertices");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> pick(1, v);
    std::vector<int> seq(static_cast<std::size_t>(v - 2));
    for (auto& x : seq)
        x = pick(rng);
    return tree_from_pruefer(v, seq);
}

void for_each_polygon_triangulation(int k, const std::function<void(const SimplicialComplex&)>& visit)
{
    if (k < 3 || k > 10)
        throw Error(ErrorKind::OutOfRange, "polygon_triangulations supports 3 <= k <= 10");
    std::vector<std::vector<int>> acc;
    triangulate(1, k, acc, [&] { visit(from_int_facets(acc)); });
}

std::vector<SimplicialComplex> polygon_triangulations(int k)
{
    std::vector<SimplicialComplex> out;
    for_each_polygon_triangulation(k, [&](const SimplicialComplex& X) { out.push_back(X); });
    return out;
}

SimplicialComplex random_stacked(int d, int n, std::uint64_t seed)
{
    if (d < 1 || n < 1)
        throw Error(ErrorKind::OutOfRange, "random_stacked needs d >= 1 and n >= 1");
    std::mt19937_64 rng(seed);
    std::vector<std::vector<int>> facets;
    std::vector<int> first(static_cast<std::size_t>(d) + 1);
    for (int i = 0; i <= d; ++i)
        first[static_cast<std::size_t>(i)] = i + 1;
    facets.push_back(first);

    // Every codimension-one face seen so far, in discovery order.
    std::vector<std::vector<int>> ridges;
    std::set<std::vector<int>> known;
    auto add_ridges = [&](const std::vector<int>& facet) {
        for (std::size_t drop = 0; drop < facet.size(); ++drop) {
            std::vector<int> ridge;
            for (std::size_t i = 0; i < facet.size(); ++i)
                if (i != drop)
                    ridge.push_back(facet[i]);
            if (known.insert(ridge).second)
                ridges.push_back(std::move(ridge));
        }
    };
    add_ridges(first);

    int next = d + 2;
    for (int p = 1; p < n; ++p) {
        std::uniform_int_distribution<std::size_t> pick(0, ridges.size() - 1);
        std::vector<int> facet = ridges[pick(rng)];
        facet.push_back(next++);
        facets.push_back(facet);
        add_ridges(facet);
    }
    return from_int_facets(facets);
}

} // namespace stacked
