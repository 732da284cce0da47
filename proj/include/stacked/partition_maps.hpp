#pragma once

#include "stacked/partition.hpp"
#include "stacked/paths.hpp"

#include <span>
#include <string>
#include <vector>

namespace stacked {

// Pairwise distance of distinct elements is at least s (s >= 1). Uses vertex
// distance or facet distance according to `kind`.
bool is_scattered(const GalleryIndex& gallery, std::span<const Element> elements, int s, GroundKind kind);
bool is_scattered(const SimplicialComplex& X, std::span<const Element> elements, int s, GroundKind kind);

// Every block of P is s-scattered.
bool blocks_scattered(const GalleryIndex& gallery, const Partition& P, int s);

// One generating pair of the relation the closure is taken over, with the
// facet path that witnesses it.
struct GeneratorPair {
    Element a;
    Element b;
    FacetPath witness;
};

// Facet pairs (f, g) whose path has end vertices in one block B while no
// inner facet of the path meets B. P must be a partition of all vertices into
// independent blocks: throws Error{NotAPartition, NotIndependent}.
std::vector<GeneratorPair> facet_generators(const GalleryIndex& gallery, const Partition& P);

// Independent vertex pairs (v, w) whose face path starts and ends in one
// facet block while no inner facet lies in that block. Q must be a partition
// of all facets: throws Error{NotAPartition}.
std::vector<GeneratorPair> vertex_generators(const GalleryIndex& gallery, const Partition& Q);

// Equivalence closure of facet_generators; unrelated facets stay singletons.
Partition vertex_to_facet(const GalleryIndex& gallery, const Partition& P);
Partition vertex_to_facet(const SimplicialComplex& X, const Partition& P);

// Equivalence closure of vertex_generators; unrelated vertices stay singletons.
Partition facet_to_vertex(const GalleryIndex& gallery, const Partition& Q);
Partition facet_to_vertex(const SimplicialComplex& X, const Partition& Q);

struct TheoremReport {
    int r = 0;
    int s = 0;
    std::size_t facet_family = 0;
    std::size_t vertex_family = 0;
    // Family members that do not meet their own family's hypotheses.
    std::size_t invalid_inputs = 0;
    // Forward images with the wrong number of blocks.
    std::size_t block_count_violations = 0;
    // Forward images whose blocks are not scattered enough: facet_to_vertex
    // of an s-scattered family must be (s+1)-scattered and vertex_to_facet of
    // an (s+1)-scattered family must be s-scattered.
    std::size_t scatter_violations = 0;
    // Forward images that are missing from the supplied opposite family.
    std::size_t unmatched_images = 0;
    // Distinct members sharing an image.
    std::size_t injectivity_failures = 0;
    std::size_t round_trip_failures = 0;
    std::string counterexample;

    std::size_t failures() const
    {
        return invalid_inputs + block_count_violations + scatter_violations + unmatched_images
               + injectivity_failures + round_trip_failures + (facet_family != vertex_family ? 1 : 0);
    }
    bool ok() const { return failures() == 0; }
};

// Checks the correspondence on supplied families: `facets` are partitions of
// the facets into r blocks, each s-scattered; `vertices` are partitions of
// the vertices into r + d blocks, each (s+1)-scattered. Both maps are applied
// to every member; images are checked for shape, scatter, membership,
// injectivity and round trip. `threads` > 1 maps members concurrently; the
// report does not depend on it.
TheoremReport check_theorem_instance(const GalleryIndex& gallery, int r, int s,
                                     std::span<const Partition> facets, std::span<const Partition> vertices,
                                     unsigned threads = 1);

} // namespace stacked
