#pragma once

#include "stacked/complex.hpp"

#include <utility>
#include <vector>

namespace stacked {

// Gallery walk: consecutive facets meet in a codimension-one face.
struct Walk {
    std::vector<FacetId> facets;
};

// A walk whose consecutive intersections are pairwise distinct. In a stacked
// complex there is exactly one between any two facets.
struct FacetPath {
    std::vector<FacetId> facets;

    std::size_t length() const noexcept { return facets.size(); }
    FacetId front() const { return facets.front(); }
    FacetId back() const { return facets.back(); }

    friend bool operator==(const FacetPath&, const FacetPath&) = default;
};

// h | f_1, ..., f_p | k
struct FacePath {
    Face h;
    Face k;
    FacetPath path;
};

// Throws Error{InvalidWalk} if `walk` is empty or two consecutive facets do
// not share a codimension-one face.
void validate_walk(const SimplicialComplex& X, const Walk& walk);

// Shortens a walk to a path with the same end facets. Collisions are resolved
// left to right: at the first j whose intersection g_j repeats an earlier g_i,
// either f_{i+1}..f_j is cut (f_i != f_{j+1}) or f_i..f_j is (f_i == f_{j+1}).
FacetPath reduce_walk(const SimplicialComplex& X, const Walk& walk);

// Some shortest dual-graph walk from f to g. Throws Error{NotConnected}.
Walk shortest_walk(const SimplicialComplex& X, FacetId from, FacetId to);

// Unique path between two facets of a stacked complex: reduce_walk applied
// to a breadth-first walk.
FacetPath facet_path(const SimplicialComplex& X, FacetId from, FacetId to);

// (f_1 \ f_2, f_p \ f_{p-1}). Throws Error{PathTooShort} when p = 1.
std::pair<VertexId, VertexId> end_vertices(const SimplicialComplex& X, const FacetPath& path);

// Unique path between faces h and k.
//
// Defined when h != k and h ∪ k lies in at most one facet; otherwise throws
// Error{NotSeparated}. Throws Error{NotAFace} if h or k is not a face.
FacePath face_path(const SimplicialComplex& X, const Face& h, const Face& k);

// 0 for v = w, 1 when v and w share a facet, otherwise the number of facets
// of the face path v | ... | w.
int vertex_distance(const SimplicialComplex& X, VertexId v, VertexId w);

// Number of facets of the path minus one.
int facet_distance(const SimplicialComplex& X, FacetId f, FacetId g);

// Number of facets of the face path f | ... | g; 1 iff g ⊆ f.
// Throws Error{NotCodimOneFace}.
int facet_ridge_distance(const SimplicialComplex& X, FacetId f, const Face& ridge);

struct DistanceNeighborhood {
    int radius = 0;
    std::vector<FacetId> facets;     // X_m
    std::vector<VertexId> vertices;  // V_m
    // For each v in V_m \ V_{m-1}, the first facet of X_m containing v.
    std::vector<std::pair<VertexId, FacetId>> entry_facets;
};

// X_m: facets within distance m of the codimension-one face `ridge`.
// X_0 is empty and V_0 is the vertex set of the ridge.
DistanceNeighborhood distance_neighborhood(const SimplicialComplex& X, const Face& ridge, int m);

// All facet and vertex paths of a gallery-connected complex, computed once.
// Keeps its own copy of the complex.
class GalleryIndex {
public:
    // Throws Error{NotConnected} if the dual graph is disconnected.
    explicit GalleryIndex(SimplicialComplex X);

    const SimplicialComplex& complex() const noexcept { return complex_; }

    const FacetPath& facet_path(FacetId f, FacetId g) const { return facet_paths_[f * n_ + g]; }
    int facet_distance(FacetId f, FacetId g) const
    {
        return static_cast<int>(facet_paths_[f * n_ + g].length()) - 1;
    }

    bool independent(VertexId v, VertexId w) const { return v != w && !shared_[v * v_ + w]; }

    // Face path v | f_1..f_p | w for independent v, w.
    const FacetPath& vertex_path(VertexId v, VertexId w) const { return vertex_paths_[v * v_ + w]; }
    int vertex_distance(VertexId v, VertexId w) const;

private:
    SimplicialComplex complex_;
    std::size_t n_;
    std::size_t v_;
    std::vector<FacetPath> facet_paths_;
    std::vector<char> shared_;
    std::vector<FacetPath> vertex_paths_;
};

} // namespace stacked
