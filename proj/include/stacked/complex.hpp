#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace stacked {

using VertexId = std::uint32_t;
using FacetId = std::uint32_t;

// A face is a sorted, duplicate-free list of vertex ids.
using Face = std::vector<VertexId>;

// Total order on vertex tokens: all-digit tokens first, by numeric value,
// then everything else lexicographically.
bool token_less(std::string_view a, std::string_view b);

// Immutable pure simplicial complex given by its facets.
//
// Vertex ids are dense (0..v-1) and assigned in token_less order of the input
// labels; facets are stored sorted lexicographically by their id lists. Both
// orders are canonical, so two complexes built from the same facet sets
// compare equal regardless of input order.
class SimplicialComplex {
public:
    // Throws Error{EmptyInput, NotPure, DuplicateFacet, DuplicateVertexInFacet,
    // ZeroDimensional}; `item()` on the error is the index into `facets`.
    static SimplicialComplex build(const std::vector<std::vector<std::string>>& facets);

    int dimension() const noexcept { return dimension_; }
    std::size_t facet_count() const noexcept { return facets_.size(); }
    std::size_t vertex_count() const noexcept { return labels_.size(); }

    std::span<const Face> facets() const noexcept { return facets_; }
    const Face& facet(FacetId f) const { return facets_.at(f); }
    const std::string& label(VertexId v) const { return labels_.at(v); }
    std::span<const std::string> labels() const noexcept { return labels_; }

    std::optional<VertexId> find_vertex(std::string_view token) const;
    std::optional<FacetId> find_facet(const Face& vertices) const;

    // Facets containing v, ascending.
    std::span<const FacetId> facets_containing(VertexId v) const { return star_.at(v); }

    // Facets containing the given d-element face (empty if it is not a
    // codimension-one face of this complex).
    std::span<const FacetId> facets_on_ridge(const Face& ridge) const;
    const std::map<Face, std::vector<FacetId>>& ridges() const noexcept { return ridges_; }

    // Adjacency lists of the dual graph: f ~ g iff |f ∩ g| = d.
    const std::vector<std::vector<FacetId>>& dual_adjacency() const noexcept { return dual_; }

    // True iff `face` is non-empty and contained in some facet.
    bool is_face(const Face& face) const;

    // Facet token used by the text formats: vertex labels joined by ','.
    std::string facet_token(FacetId f) const;
    std::optional<FacetId> find_facet_token(std::string_view token) const;

    std::vector<std::vector<std::string>> facet_labels() const;

    friend bool operator==(const SimplicialComplex&, const SimplicialComplex&);

private:
    SimplicialComplex() = default;

    int dimension_ = 0;
    std::vector<std::string> labels_;
    std::vector<Face> facets_;
    std::vector<std::vector<FacetId>> star_;
    std::map<Face, std::vector<FacetId>> ridges_;
    std::vector<std::vector<FacetId>> dual_;
};

inline SimplicialComplex build_complex(const std::vector<std::vector<std::string>>& facets)
{
    return SimplicialComplex::build(facets);
}

// Sorted intersection of two faces.
Face intersect(const Face& a, const Face& b);
bool is_subset(const Face& small, const Face& big);

struct StackingStep {
    FacetId facet;
    // Vertex on no earlier facet; absent for the first step.
    std::optional<VertexId> free_vertex;
};

// Ordering F_0, ..., F_{n-1} in which every F_p (p >= 1) has exactly one
// vertex on no earlier facet and the rest of F_p lies in an earlier facet.
struct StackingOrder {
    std::vector<StackingStep> steps;
};

// Replays `order` against `X` and reports whether every step is legal and
// every facet appears exactly once.
bool is_valid_stacking_order(const SimplicialComplex& X, const StackingOrder& order);

// Exhaustive search; backtracks over every removable leaf and memoizes dead
// states. Returns nullopt iff no stacking order exists.
std::optional<StackingOrder> find_stacking_order(const SimplicialComplex& X);

// Peels the first removable leaf at every step without backtracking.
std::optional<StackingOrder> greedy_stacking_order(const SimplicialComplex& X);

struct StackedCheck {
    bool stacked = false;
    std::optional<StackingOrder> certificate;
};

// v = n + d and a stacking order exists.
StackedCheck is_stacked(const SimplicialComplex& X);

// Ids of the facets of X contained in `vertices`, ascending.
std::vector<FacetId> restrict_facets(const SimplicialComplex& X, const std::vector<VertexId>& vertices);

// A complex built from a subset of the facets of a parent complex. Labels
// are kept, ids are re-densified; the maps translate back to the parent.
struct Subcomplex {
    SimplicialComplex complex;
    std::vector<VertexId> vertex_to_parent;
    std::vector<FacetId> facet_to_parent;
};

// Throws Error{EmptyInput} when `facets` is empty.
Subcomplex subcomplex(const SimplicialComplex& X, const std::vector<FacetId>& facets);

// restrict_facets followed by subcomplex; nullopt when no facet lies in R.
std::optional<Subcomplex> restrict_complex(const SimplicialComplex& X, const std::vector<VertexId>& vertices);

} // namespace stacked
