#include "stacked/paths.hpp"

#include "stacked/error.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <map>

namespace stacked {

namespace {

constexpr FacetId kNoFacet = std::numeric_limits<FacetId>::max();

Face normalized(Face face)
{
    std::sort(face.begin(), face.end());
    face.erase(std::unique(face.begin(), face.end()), face.end());
    return face;
}

// Breadth-first parents over the dual graph, rooted at `from`.
std::vector<FacetId> bfs_parents(const SimplicialComplex& X, FacetId from)
{
    const auto& adj = X.dual_adjacency();
    std::vector<FacetId> parent(X.facet_count(), kNoFacet);
    std::deque<FacetId> queue{from};
    parent[from] = from;
    while (!queue.empty()) {
        FacetId f = queue.front();
        queue.pop_front();
        for (FacetId g : adj[f]) {
            if (parent[g] == kNoFacet) {
                parent[g] = f;
                queue.push_back(g);
            }
        }
    }
    return parent;
}

Walk walk_from_parents(const std::vector<FacetId>& parent, FacetId from, FacetId to)
{
    if (parent[to] == kNoFacet)
        throw Error(ErrorKind::NotConnected,
                    "no gallery between facets " + std::to_string(from) + " and " + std::to_string(to));
    Walk walk;
    for (FacetId f = to; f != from; f = parent[f])
        walk.facets.push_back(f);
    walk.facets.push_back(from);
    std::reverse(walk.facets.begin(), walk.facets.end());
    return walk;
}

FacetPath trim_to_faces(const SimplicialComplex& X, const FacetPath& path, const Face& h, const Face& k)
{
    std::size_t i = 0;
    for (std::size_t q = 0; q < path.length(); ++q)
        if (is_subset(h, X.facet(path.facets[q])))
            i = q;
    std::size_t j = i;
    while (!is_subset(k, X.facet(path.facets[j])))
        ++j;
    return FacetPath{{path.facets.begin() + static_cast<std::ptrdiff_t>(i),
                      path.facets.begin() + static_cast<std::ptrdiff_t>(j) + 1}};
}

std::vector<FacetId> facets_containing_face(const SimplicialComplex& X, const Face& face)
{
    std::vector<FacetId> out;
    for (FacetId f : X.facets_containing(face.front()))
        if (is_subset(face, X.facet(f)))
            out.push_back(f);
    return out;
}

void require_ridge(const SimplicialComplex& X, const Face& ridge)
{
    if (ridge.size() != static_cast<std::size_t>(X.dimension()) || X.facets_on_ridge(ridge).empty())
        throw Error(ErrorKind::NotCodimOneFace, "face is not a codimension-one face of the complex");
}

} // namespace

void validate_walk(const SimplicialComplex& X, const Walk& walk)
{
    if (walk.facets.empty())
        throw Error(ErrorKind::InvalidWalk, "empty walk");
    for (FacetId f : walk.facets)
        if (f >= X.facet_count())
            throw Error(ErrorKind::InvalidWalk, "facet id " + std::to_string(f) + " out of range");
    const auto d = static_cast<std::size_t>(X.dimension());
    for (std::size_t i = 0; i + 1 < walk.facets.size(); ++i)
        if (intersect(X.facet(walk.facets[i]), X.facet(walk.facets[i + 1])).size() != d)
            throw Error(ErrorKind::InvalidWalk,
                        "steps " + std::to_string(i) + " and " + std::to_string(i + 1) + " do not share a ridge");
}

FacetPath reduce_walk(const SimplicialComplex& X, const Walk& walk)
{
    validate_walk(X, walk);
    std::vector<FacetId> f = walk.facets;
    bool changed = true;
    while (changed) {
        changed = false;
        std::map<Face, std::size_t> first_seen;
        for (std::size_t j = 0; j + 1 < f.size(); ++j) {
            auto [it, fresh] = first_seen.emplace(intersect(X.facet(f[j]), X.facet(f[j + 1])), j);
            if (fresh)
                continue;
            const std::size_t i = it->second;
            const std::size_t keep = f[i] != f[j + 1] ? i + 1 : i;
            std::vector<FacetId> shorter(f.begin(), f.begin() + static_cast<std::ptrdiff_t>(keep));
            shorter.insert(shorter.end(), f.begin() + static_cast<std::ptrdiff_t>(j) + 1, f.end());
            f = std::move(shorter);
            changed = true;
            break;
        }
    }
    return FacetPath{std::move(f)};
}

Walk shortest_walk(const SimplicialComplex& X, FacetId from, FacetId to)
{
    if (from >= X.facet_count() || to >= X.facet_count())
        throw Error(ErrorKind::OutOfRange, "facet id out of range");
    return walk_from_parents(bfs_parents(X, from), from, to);
}

FacetPath facet_path(const SimplicialComplex& X, FacetId from, FacetId to)
{
    return reduce_walk(X, shortest_walk(X, from, to));
}

std::pair<VertexId, VertexId> end_vertices(const SimplicialComplex& X, const FacetPath& path)
{
    const std::size_t p = path.length();
    if (p < 2)
        throw Error(ErrorKind::PathTooShort, "end vertices need a path with at least two facets");
    auto lone = [&](FacetId a, FacetId b) {
        const Face& fa = X.facet(a);
        const Face& fb = X.facet(b);
        for (VertexId v : fa)
            if (!std::binary_search(fb.begin(), fb.end(), v))
                return v;
        throw Error(ErrorKind::InvalidWalk, "consecutive facets are equal");
    };
    return {lone(path.facets[0], path.facets[1]), lone(path.facets[p - 1], path.facets[p - 2])};
}

FacePath face_path(const SimplicialComplex& X, const Face& h_in, const Face& k_in)
{
    Face h = normalized(h_in);
    Face k = normalized(k_in);
    if (!X.is_face(h) || !X.is_face(k))
        throw Error(ErrorKind::NotAFace, "face path endpoints must be faces of the complex");
    if (h == k)
        throw Error(ErrorKind::NotSeparated, "face path endpoints coincide");
    Face both;
    std::set_union(h.begin(), h.end(), k.begin(), k.end(), std::back_inserter(both));
    auto around = facets_containing_face(X, both);
    if (around.size() > 1)
        throw Error(ErrorKind::NotSeparated, "h ∪ k lies in a face shared by several facets");
    if (around.size() == 1)
        return FacePath{std::move(h), std::move(k), FacetPath{{around.front()}}};

    const FacetId first = facets_containing_face(X, h).front();
    const FacetId last = facets_containing_face(X, k).front();
    auto full = facet_path(X, first, last);
    auto trimmed = trim_to_faces(X, full, h, k);
    return FacePath{std::move(h), std::move(k), std::move(trimmed)};
}

int vertex_distance(const SimplicialComplex& X, VertexId v, VertexId w)
{
    if (v >= X.vertex_count() || w >= X.vertex_count())
        throw Error(ErrorKind::OutOfRange, "vertex id out of range");
    if (v == w)
        return 0;
    auto sv = X.facets_containing(v);
    auto sw = X.facets_containing(w);
    for (FacetId f : sv)
        if (std::binary_search(sw.begin(), sw.end(), f))
            return 1;
    return static_cast<int>(face_path(X, Face{v}, Face{w}).path.length());
}

int facet_distance(const SimplicialComplex& X, FacetId f, FacetId g)
{
    return static_cast<int>(facet_path(X, f, g).length()) - 1;
}

int facet_ridge_distance(const SimplicialComplex& X, FacetId f, const Face& ridge_in)
{
    Face ridge = normalized(ridge_in);
    require_ridge(X, ridge);
    if (f >= X.facet_count())
        throw Error(ErrorKind::OutOfRange, "facet id out of range");
    return static_cast<int>(face_path(X, X.facet(f), ridge).path.length());
}

DistanceNeighborhood distance_neighborhood(const SimplicialComplex& X, const Face& ridge_in, int m)
{
    Face ridge = normalized(ridge_in);
    require_ridge(X, ridge);
    if (m < 0)
        throw Error(ErrorKind::OutOfRange, "radius must be non-negative");

    std::vector<int> dist(X.facet_count());
    for (FacetId f = 0; f < X.facet_count(); ++f)
        dist[f] = static_cast<int>(face_path(X, X.facet(f), ridge).path.length());

    auto vertices_within = [&](int radius) {
        if (radius == 0)
            return ridge;
        std::vector<char> mark(X.vertex_count(), 0);
        for (FacetId f = 0; f < X.facet_count(); ++f)
            if (dist[f] <= radius)
                for (VertexId v : X.facet(f))
                    mark[v] = 1;
        Face out;
        for (VertexId v = 0; v < mark.size(); ++v)
            if (mark[v])
                out.push_back(v);
        return out;
    };

    DistanceNeighborhood out;
    out.radius = m;
    for (FacetId f = 0; f < X.facet_count(); ++f)
        if (m > 0 && dist[f] <= m)
            out.facets.push_back(f);
    out.vertices = vertices_within(m);
    if (m > 0) {
        const Face inner = vertices_within(m - 1);
        for (VertexId v : out.vertices) {
            if (std::binary_search(inner.begin(), inner.end(), v))
                continue;
            for (FacetId f : X.facets_containing(v))
                if (dist[f] <= m) {
                    out.entry_facets.emplace_back(v, f);
                    break;
                }
        }
    }
    return out;
}

GalleryIndex::GalleryIndex(SimplicialComplex X)
    : complex_(std::move(X))
    , n_(complex_.facet_count())
    , v_(complex_.vertex_count())
{
    facet_paths_.resize(n_ * n_);
    for (FacetId f = 0; f < n_; ++f) {
        auto parent = bfs_parents(complex_, f);
        for (FacetId g = 0; g < n_; ++g)
            facet_paths_[f * n_ + g] = reduce_walk(complex_, walk_from_parents(parent, f, g));
    }

    shared_.assign(v_ * v_, 0);
    for (const auto& face : complex_.facets())
        for (VertexId a : face)
            for (VertexId b : face)
                shared_[a * v_ + b] = 1;

    vertex_paths_.resize(v_ * v_);
    for (VertexId v = 0; v < v_; ++v) {
        for (VertexId w = v + 1; w < v_; ++w) {
            if (shared_[v * v_ + w])
                continue;
            const FacetId from = complex_.facets_containing(v).front();
            const FacetId to = complex_.facets_containing(w).front();
            auto path = trim_to_faces(complex_, facet_paths_[from * n_ + to], Face{v}, Face{w});
            auto back = path;
            std::reverse(back.facets.begin(), back.facets.end());
            vertex_paths_[v * v_ + w] = std::move(path);
            vertex_paths_[w * v_ + v] = std::move(back);
        }
    }
}

int GalleryIndex::vertex_distance(VertexId v, VertexId w) const
{
    if (v == w)
        return 0;
    if (shared_[v * v_ + w])
        return 1;
    return static_cast<int>(vertex_paths_[v * v_ + w].length());
}

} // namespace stacked
