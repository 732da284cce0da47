#include "stacked/partition_maps.hpp"

#include "stacked/error.hpp"

#include <algorithm>
#include <sstream>
#include <thread>

namespace stacked {

namespace {

void require_cover(const Partition& P, GroundKind kind, std::size_t n, const char* what)
{
    if (P.kind() != kind || !P.covers(n))
        throw Error(ErrorKind::NotAPartition, std::string("expected a partition of all ") + what);
}

std::string render(const Partition& P)
{
    std::ostringstream out;
    for (const auto& b : P.blocks()) {
        out << '{';
        for (std::size_t i = 0; i < b.size(); ++i)
            out << (i ? " " : "") << b[i];
        out << '}';
    }
    return out.str();
}

template <typename Fn>
void parallel_for(std::size_t count, unsigned threads, Fn&& body)
{
    threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
    if (threads == 1) {
        for (std::size_t i = 0; i < count; ++i)
            body(i);
        return;
    }
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t)
        pool.emplace_back([&, t] {
            for (std::size_t i = t; i < count; i += threads)
                body(i);
        });
}

} // namespace

bool is_scattered(const GalleryIndex& gallery, std::span<const Element> elements, int s, GroundKind kind)
{
    if (s < 1)
        throw Error(ErrorKind::OutOfRange, "scatter bound must be at least 1");
    const auto& X = gallery.complex();
    const std::size_t ground = kind == GroundKind::Vertices ? X.vertex_count() : X.facet_count();
    for (Element e : elements)
        if (e >= ground)
            throw Error(ErrorKind::OutOfRange, "element " + std::to_string(e) + " outside the ground set");
    for (std::size_t i = 0; i < elements.size(); ++i)
        for (std::size_t j = i + 1; j < elements.size(); ++j) {
            const Element a = elements[i];
            const Element b = elements[j];
            if (a == b)
                continue;
            const int dist = kind == GroundKind::Vertices ? gallery.vertex_distance(a, b) : gallery.facet_distance(a, b);
            if (dist < s)
                return false;
        }
    return true;
}

bool is_scattered(const SimplicialComplex& X, std::span<const Element> elements, int s, GroundKind kind)
{
    return is_scattered(GalleryIndex(X), elements, s, kind);
}

bool blocks_scattered(const GalleryIndex& gallery, const Partition& P, int s)
{
    return std::all_of(P.blocks().begin(), P.blocks().end(),
                       [&](const Block& b) { return is_scattered(gallery, b, s, P.kind()); });
}

namespace {

// Calls emit(f, g, path) for every generating facet pair.
template <typename Emit>
void scan_facet_pairs(const GalleryIndex& gallery, const Partition& P, Emit&& emit)
{
    const auto& X = gallery.complex();
    require_cover(P, GroundKind::Vertices, X.vertex_count(), "vertices");
    for (std::size_t i = 0; i < P.blocks().size(); ++i)
        if (!is_scattered(gallery, P.blocks()[i], 2, GroundKind::Vertices))
            throw Error::at_item(ErrorKind::NotIndependent, "block has two vertices on one facet", i);

    const auto color = P.block_of(X.vertex_count());
    for (FacetId f = 0; f < X.facet_count(); ++f)
        for (FacetId g = f + 1; g < X.facet_count(); ++g) {
            const FacetPath& path = gallery.facet_path(f, g);
            auto [v, w] = end_vertices(X, path);
            if (color[v] != color[w])
                continue;
            const auto c = color[v];
            bool blocked = false;
            for (std::size_t i = 1; i + 1 < path.length() && !blocked; ++i)
                for (VertexId u : X.facet(path.facets[i]))
                    if (color[u] == c) {
                        blocked = true;
                        break;
                    }
            if (!blocked)
                emit(f, g, path);
        }
}

template <typename Emit>
void scan_vertex_pairs(const GalleryIndex& gallery, const Partition& Q, Emit&& emit)
{
    const auto& X = gallery.complex();
    require_cover(Q, GroundKind::Facets, X.facet_count(), "facets");
    const auto color = Q.block_of(X.facet_count());
    for (VertexId v = 0; v < X.vertex_count(); ++v)
        for (VertexId w = v + 1; w < X.vertex_count(); ++w) {
            if (!gallery.independent(v, w))
                continue;
            const FacetPath& path = gallery.vertex_path(v, w);
            const auto c = color[path.front()];
            if (color[path.back()] != c)
                continue;
            bool blocked = false;
            for (std::size_t i = 1; i + 1 < path.length(); ++i)
                if (color[path.facets[i]] == c) {
                    blocked = true;
                    break;
                }
            if (!blocked)
                emit(v, w, path);
        }
}

} // namespace

std::vector<GeneratorPair> facet_generators(const GalleryIndex& gallery, const Partition& P)
{
    std::vector<GeneratorPair> out;
    scan_facet_pairs(gallery, P, [&](Element a, Element b, const FacetPath& path) { out.push_back({a, b, path}); });
    return out;
}

std::vector<GeneratorPair> vertex_generators(const GalleryIndex& gallery, const Partition& Q)
{
    std::vector<GeneratorPair> out;
    scan_vertex_pairs(gallery, Q, [&](Element a, Element b, const FacetPath& path) { out.push_back({a, b, path}); });
    return out;
}

Partition vertex_to_facet(const GalleryIndex& gallery, const Partition& P)
{
    DisjointSets sets(gallery.complex().facet_count());
    scan_facet_pairs(gallery, P, [&](Element a, Element b, const FacetPath&) { sets.unite(a, b); });
    return sets.to_partition(GroundKind::Facets);
}

Partition vertex_to_facet(const SimplicialComplex& X, const Partition& P)
{
    return vertex_to_facet(GalleryIndex(X), P);
}

Partition facet_to_vertex(const GalleryIndex& gallery, const Partition& Q)
{
    DisjointSets sets(gallery.complex().vertex_count());
    scan_vertex_pairs(gallery, Q, [&](Element a, Element b, const FacetPath&) { sets.unite(a, b); });
    return sets.to_partition(GroundKind::Vertices);
}

Partition facet_to_vertex(const SimplicialComplex& X, const Partition& Q)
{
    return facet_to_vertex(GalleryIndex(X), Q);
}

TheoremReport check_theorem_instance(const GalleryIndex& gallery, int r, int s,
                                     std::span<const Partition> facets, std::span<const Partition> vertices,
                                     unsigned threads)
{
    const auto& X = gallery.complex();
    const std::size_t vertex_blocks = static_cast<std::size_t>(r + X.dimension());
    TheoremReport report;
    report.r = r;
    report.s = s;
    report.facet_family = facets.size();
    report.vertex_family = vertices.size();

    auto note = [&](const std::string& what) {
        if (report.counterexample.empty())
            report.counterexample = what;
    };

    auto facet_member = [&](const Partition& Q) {
        return Q.kind() == GroundKind::Facets && Q.covers(X.facet_count()) && Q.size() == static_cast<std::size_t>(r)
               && blocks_scattered(gallery, Q, s);
    };
    auto vertex_member = [&](const Partition& P) {
        return P.kind() == GroundKind::Vertices && P.covers(X.vertex_count()) && P.size() == vertex_blocks
               && blocks_scattered(gallery, P, s + 1);
    };

    std::vector<char> facet_ok(facets.size()), vertex_ok(vertices.size());
    std::vector<Partition> forward(facets.size()), backward(vertices.size());
    std::vector<Partition> forward_back(facets.size()), backward_back(vertices.size());
    std::vector<char> forward_bad(facets.size(), 0), backward_bad(vertices.size(), 0);

    parallel_for(facets.size(), threads, [&](std::size_t i) {
        facet_ok[i] = facet_member(facets[i]);
        if (!facet_ok[i])
            return;
        forward[i] = facet_to_vertex(gallery, facets[i]);
        if (blocks_scattered(gallery, forward[i], 2))
            forward_back[i] = vertex_to_facet(gallery, forward[i]);
        else
            forward_bad[i] = 1;
    });
    parallel_for(vertices.size(), threads, [&](std::size_t i) {
        vertex_ok[i] = vertex_member(vertices[i]);
        if (!vertex_ok[i])
            return;
        backward[i] = vertex_to_facet(gallery, vertices[i]);
        backward_back[i] = facet_to_vertex(gallery, backward[i]);
    });

    std::vector<Partition> sorted_vertices(vertices.begin(), vertices.end());
    std::vector<Partition> sorted_facets(facets.begin(), facets.end());
    std::sort(sorted_vertices.begin(), sorted_vertices.end());
    std::sort(sorted_facets.begin(), sorted_facets.end());

    for (std::size_t i = 0; i < facets.size(); ++i) {
        if (!facet_ok[i]) {
            ++report.invalid_inputs;
            note("facet family member outside family: " + render(facets[i]));
            continue;
        }
        const Partition& image = forward[i];
        if (image.size() != vertex_blocks) {
            ++report.block_count_violations;
            note("facet_to_vertex " + render(facets[i]) + " -> " + render(image) + " has wrong block count");
        }
        if (!blocks_scattered(gallery, image, s + 1)) {
            ++report.scatter_violations;
            note("facet_to_vertex " + render(facets[i]) + " -> " + render(image) + " is not (s+1)-scattered");
        }
        if (!std::binary_search(sorted_vertices.begin(), sorted_vertices.end(), image)) {
            ++report.unmatched_images;
            note("image of " + render(facets[i]) + " missing from vertex family");
        }
        if (forward_bad[i] || forward_back[i] != facets[i]) {
            ++report.round_trip_failures;
            note("round trip from facets fails at " + render(facets[i]));
        }
    }
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        if (!vertex_ok[i]) {
            ++report.invalid_inputs;
            note("vertex family member outside family: " + render(vertices[i]));
            continue;
        }
        const Partition& image = backward[i];
        if (image.size() != static_cast<std::size_t>(r)) {
            ++report.block_count_violations;
            note("vertex_to_facet " + render(vertices[i]) + " -> " + render(image) + " has wrong block count");
        }
        if (!blocks_scattered(gallery, image, s)) {
            ++report.scatter_violations;
            note("vertex_to_facet " + render(vertices[i]) + " -> " + render(image) + " is not s-scattered");
        }
        if (!std::binary_search(sorted_facets.begin(), sorted_facets.end(), image)) {
            ++report.unmatched_images;
            note("image of " + render(vertices[i]) + " missing from facet family");
        }
        if (backward_back[i] != vertices[i]) {
            ++report.round_trip_failures;
            note("round trip from vertices fails at " + render(vertices[i]));
        }
    }

    auto count_collisions = [](std::vector<Partition> images) {
        std::sort(images.begin(), images.end());
        std::size_t dup = 0;
        for (std::size_t i = 1; i < images.size(); ++i)
            if (images[i] == images[i - 1])
                ++dup;
        return dup;
    };
    std::vector<Partition> valid_forward, valid_backward;
    for (std::size_t i = 0; i < facets.size(); ++i)
        if (facet_ok[i])
            valid_forward.push_back(forward[i]);
    for (std::size_t i = 0; i < vertices.size(); ++i)
        if (vertex_ok[i])
            valid_backward.push_back(backward[i]);
    const std::size_t collisions = count_collisions(valid_forward) + count_collisions(valid_backward);
    if (collisions) {
        report.injectivity_failures = collisions;
        note("two family members share an image");
    }
    if (report.facet_family != report.vertex_family)
        note("family sizes differ: " + std::to_string(report.facet_family) + " facet partitions vs "
             + std::to_string(report.vertex_family) + " vertex partitions");
    return report;
}

} // namespace stacked
