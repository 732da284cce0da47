#include "stacked/complex.hpp"

#include "stacked/error.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <unordered_map>
#include <unordered_set>

namespace stacked {

namespace {

bool is_numeric(std::string_view s)
{
    return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

std::string_view strip_zeros(std::string_view s)
{
    auto first = s.find_first_not_of('0');
    return first == std::string_view::npos ? s.substr(s.size() - 1) : s.substr(first);
}

std::string join_labels(const std::vector<std::string>& labels, const Face& face, char sep)
{
    std::string out;
    for (std::size_t i = 0; i < face.size(); ++i) {
        if (i)
            out += sep;
        out += labels[face[i]];
    }
    return out;
}

std::string describe(const std::vector<std::string>& tokens)
{
    std::string out = "{";
    for (std::size_t i = 0; i < tokens.size(); ++i) {
        if (i)
            out += ' ';
        out += tokens[i];
    }
    return out + "}";
}

} // namespace

bool token_less(std::string_view a, std::string_view b)
{
    const bool na = is_numeric(a);
    const bool nb = is_numeric(b);
    if (na != nb)
        return na;
    if (na) {
        auto sa = strip_zeros(a);
        auto sb = strip_zeros(b);
        if (sa.size() != sb.size())
            return sa.size() < sb.size();
        if (sa != sb)
            return sa < sb;
    }
    return a < b;
}

SimplicialComplex SimplicialComplex::build(const std::vector<std::vector<std::string>>& facets)
{
    if (facets.empty())
        throw Error(ErrorKind::EmptyInput, "no facets given");

    std::vector<std::string> labels;
    for (std::size_t i = 0; i < facets.size(); ++i) {
        auto sorted = facets[i];
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw Error::at_item(ErrorKind::DuplicateVertexInFacet, "facet " + describe(facets[i]), i);
        if (facets[i].size() < 2)
            throw Error::at_item(ErrorKind::ZeroDimensional,
                                 "facet " + describe(facets[i]) + " has fewer than two vertices", i);
        if (facets[i].size() != facets.front().size())
            throw Error::at_item(ErrorKind::NotPure,
                                 "facet " + describe(facets[i]) + " has " + std::to_string(facets[i].size())
                                     + " vertices, expected " + std::to_string(facets.front().size()),
                                 i);
        labels.insert(labels.end(), facets[i].begin(), facets[i].end());
    }
    std::sort(labels.begin(), labels.end(), [](const auto& a, const auto& b) { return token_less(a, b); });
    labels.erase(std::unique(labels.begin(), labels.end()), labels.end());

    std::unordered_map<std::string, VertexId> ids;
    for (std::size_t i = 0; i < labels.size(); ++i)
        ids.emplace(labels[i], static_cast<VertexId>(i));

    std::vector<Face> faces;
    faces.reserve(facets.size());
    std::map<Face, std::size_t> seen;
    for (std::size_t i = 0; i < facets.size(); ++i) {
        Face face;
        for (const auto& t : facets[i])
            face.push_back(ids.at(t));
        std::sort(face.begin(), face.end());
        if (!seen.emplace(face, i).second)
            throw Error::at_item(ErrorKind::DuplicateFacet, "facet " + describe(facets[i]) + " repeated", i);
        faces.push_back(std::move(face));
    }
    std::sort(faces.begin(), faces.end());

    SimplicialComplex X;
    X.dimension_ = static_cast<int>(faces.front().size()) - 1;
    X.labels_ = std::move(labels);
    X.facets_ = std::move(faces);
    X.star_.assign(X.labels_.size(), {});
    for (FacetId f = 0; f < X.facets_.size(); ++f) {
        const Face& face = X.facets_[f];
        for (VertexId v : face)
            X.star_[v].push_back(f);
        for (std::size_t drop = 0; drop < face.size(); ++drop) {
            Face ridge;
            ridge.reserve(face.size() - 1);
            for (std::size_t k = 0; k < face.size(); ++k)
                if (k != drop)
                    ridge.push_back(face[k]);
            X.ridges_[std::move(ridge)].push_back(f);
        }
    }
    X.dual_.assign(X.facets_.size(), {});
    for (const auto& [ridge, around] : X.ridges_)
        for (std::size_t i = 0; i < around.size(); ++i)
            for (std::size_t j = i + 1; j < around.size(); ++j) {
                X.dual_[around[i]].push_back(around[j]);
                X.dual_[around[j]].push_back(around[i]);
            }
    for (auto& adj : X.dual_) {
        std::sort(adj.begin(), adj.end());
        adj.erase(std::unique(adj.begin(), adj.end()), adj.end());
    }
    return X;
}

std::optional<VertexId> SimplicialComplex::find_vertex(std::string_view token) const
{
    auto it = std::lower_bound(labels_.begin(), labels_.end(), token,
                               [](const std::string& a, std::string_view b) { return token_less(a, b); });
    if (it == labels_.end() || *it != token)
        return std::nullopt;
    return static_cast<VertexId>(it - labels_.begin());
}

std::optional<FacetId> SimplicialComplex::find_facet(const Face& vertices) const
{
    Face key = vertices;
    std::sort(key.begin(), key.end());
    auto it = std::lower_bound(facets_.begin(), facets_.end(), key);
    if (it == facets_.end() || *it != key)
        return std::nullopt;
    return static_cast<FacetId>(it - facets_.begin());
}

std::span<const FacetId> SimplicialComplex::facets_on_ridge(const Face& ridge) const
{
    auto it = ridges_.find(ridge);
    if (it == ridges_.end())
        return {};
    return it->second;
}

bool SimplicialComplex::is_face(const Face& face) const
{
    if (face.empty() || face.front() >= labels_.size())
        return false;
    for (FacetId f : star_[face.front()])
        if (is_subset(face, facets_[f]))
            return true;
    return false;
}

std::string SimplicialComplex::facet_token(FacetId f) const
{
    return join_labels(labels_, facets_.at(f), ',');
}

std::optional<FacetId> SimplicialComplex::find_facet_token(std::string_view token) const
{
    Face face;
    bool resolved = true;
    std::size_t start = 0;
    while (start <= token.size()) {
        auto end = token.find(',', start);
        if (end == std::string_view::npos)
            end = token.size();
        auto v = find_vertex(token.substr(start, end - start));
        if (!v) {
            resolved = false;
            break;
        }
        face.push_back(*v);
        start = end + 1;
    }
    if (resolved) {
        std::sort(face.begin(), face.end());
        if (std::adjacent_find(face.begin(), face.end()) == face.end())
            if (auto f = find_facet(face))
                return f;
    }
    // Labels that themselves contain ',' only match the canonical spelling.
    for (FacetId f = 0; f < facets_.size(); ++f)
        if (facet_token(f) == token)
            return f;
    return std::nullopt;
}

std::vector<std::vector<std::string>> SimplicialComplex::facet_labels() const
{
    std::vector<std::vector<std::string>> out;
    out.reserve(facets_.size());
    for (const auto& face : facets_) {
        std::vector<std::string> row;
        for (VertexId v : face)
            row.push_back(labels_[v]);
        out.push_back(std::move(row));
    }
    return out;
}

bool operator==(const SimplicialComplex& a, const SimplicialComplex& b)
{
    return a.labels_ == b.labels_ && a.facets_ == b.facets_;
}

Face intersect(const Face& a, const Face& b)
{
    Face out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

bool is_subset(const Face& small, const Face& big)
{
    return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

bool is_valid_stacking_order(const SimplicialComplex& X, const StackingOrder& order)
{
    const auto& steps = order.steps;
    if (steps.size() != X.facet_count())
        return false;
    std::vector<char> used(X.facet_count(), 0);
    std::vector<char> seen_vertex(X.vertex_count(), 0);
    for (std::size_t p = 0; p < steps.size(); ++p) {
        const FacetId f = steps[p].facet;
        if (f >= X.facet_count() || used[f])
            return false;
        const Face& face = X.facet(f);
        if (p == 0) {
            if (steps[p].free_vertex)
                return false;
        } else {
            if (!steps[p].free_vertex)
                return false;
            const VertexId v = *steps[p].free_vertex;
            if (!std::binary_search(face.begin(), face.end(), v) || seen_vertex[v])
                return false;
            Face rest;
            for (VertexId u : face)
                if (u != v)
                    rest.push_back(u);
            const bool attached = std::any_of(steps.begin(), steps.begin() + static_cast<std::ptrdiff_t>(p),
                                              [&](const StackingStep& s) { return is_subset(rest, X.facet(s.facet)); });
            if (!attached)
                return false;
        }
        used[f] = 1;
        for (VertexId u : face)
            seen_vertex[u] = 1;
    }
    return true;
}

namespace {

// Peels leaves off the end of a stacking order. A facet is removable when
// exactly one of its vertices is on no other live facet and the remaining
// ridge is shared with some other live facet.
class LeafPeeler {
public:
    explicit LeafPeeler(const SimplicialComplex& X)
        : X_(X)
        , alive_(X.facet_count(), 1)
        , cover_(X.vertex_count(), 0)
        , live_(X.facet_count())
    {
        for (const auto& face : X.facets())
            for (VertexId v : face)
                ++cover_[v];
    }

    std::optional<VertexId> removable(FacetId f) const
    {
        std::optional<VertexId> free;
        for (VertexId v : X_.facet(f)) {
            if (cover_[v] == 1) {
                if (free)
                    return std::nullopt;
                free = v;
            }
        }
        if (!free)
            return std::nullopt;
        Face ridge;
        for (VertexId v : X_.facet(f))
            if (v != *free)
                ridge.push_back(v);
        for (FacetId g : X_.facets_on_ridge(ridge))
            if (g != f && alive_[g])
                return free;
        return std::nullopt;
    }

    void remove(FacetId f)
    {
        alive_[f] = 0;
        --live_;
        for (VertexId v : X_.facet(f))
            --cover_[v];
    }

    void restore(FacetId f)
    {
        alive_[f] = 1;
        ++live_;
        for (VertexId v : X_.facet(f))
            ++cover_[v];
    }

    std::size_t live() const { return live_; }
    bool alive(FacetId f) const { return alive_[f] != 0; }
    std::string key() const { return std::string(alive_.begin(), alive_.end()); }

private:
    const SimplicialComplex& X_;
    std::vector<char> alive_;
    std::vector<int> cover_;
    std::size_t live_;
};

StackingOrder finish(const SimplicialComplex& X, const LeafPeeler& peeler, std::vector<StackingStep> peeled)
{
    StackingOrder order;
    for (FacetId f = 0; f < X.facet_count(); ++f)
        if (peeler.alive(f))
            order.steps.push_back({f, std::nullopt});
    order.steps.insert(order.steps.end(), peeled.rbegin(), peeled.rend());
    return order;
}

} // namespace

std::optional<StackingOrder> find_stacking_order(const SimplicialComplex& X)
{
    if (X.vertex_count() != X.facet_count() + static_cast<std::size_t>(X.dimension()))
        return std::nullopt;

    LeafPeeler peeler(X);
    std::vector<StackingStep> peeled;
    std::unordered_set<std::string> dead;

    std::function<bool()> search = [&]() -> bool {
        if (peeler.live() == 1)
            return true;
        auto key = peeler.key();
        if (dead.count(key))
            return false;
        for (FacetId f = 0; f < X.facet_count(); ++f) {
            if (!peeler.alive(f))
                continue;
            auto free = peeler.removable(f);
            if (!free)
                continue;
            peeler.remove(f);
            peeled.push_back({f, free});
            if (search())
                return true;
            peeled.pop_back();
            peeler.restore(f);
        }
        dead.insert(std::move(key));
        return false;
    };

    if (!search())
        return std::nullopt;
    return finish(X, peeler, std::move(peeled));
}

std::optional<StackingOrder> greedy_stacking_order(const SimplicialComplex& X)
{
    LeafPeeler peeler(X);
    std::vector<StackingStep> peeled;
    while (peeler.live() > 1) {
        bool progressed = false;
        for (FacetId f = 0; f < X.facet_count() && !progressed; ++f) {
            if (!peeler.alive(f))
                continue;
            if (auto free = peeler.removable(f)) {
                peeler.remove(f);
                peeled.push_back({f, free});
                progressed = true;
            }
        }
        if (!progressed)
            return std::nullopt;
    }
    return finish(X, peeler, std::move(peeled));
}

StackedCheck is_stacked(const SimplicialComplex& X)
{
    StackedCheck out;
    if (X.vertex_count() != X.facet_count() + static_cast<std::size_t>(X.dimension()))
        return out;
    out.certificate = find_stacking_order(X);
    out.stacked = out.certificate.has_value();
    return out;
}

std::vector<FacetId> restrict_facets(const SimplicialComplex& X, const std::vector<VertexId>& vertices)
{
    std::vector<char> inside(X.vertex_count(), 0);
    for (VertexId v : vertices)
        if (v < inside.size())
            inside[v] = 1;
    std::vector<FacetId> out;
    for (FacetId f = 0; f < X.facet_count(); ++f) {
        const Face& face = X.facet(f);
        if (std::all_of(face.begin(), face.end(), [&](VertexId v) { return inside[v] != 0; }))
            out.push_back(f);
    }
    return out;
}

Subcomplex subcomplex(const SimplicialComplex& X, const std::vector<FacetId>& facets)
{
    if (facets.empty())
        throw Error(ErrorKind::EmptyInput, "subcomplex needs at least one facet");
    std::vector<std::vector<std::string>> rows;
    rows.reserve(facets.size());
    for (FacetId f : facets) {
        std::vector<std::string> row;
        for (VertexId v : X.facet(f))
            row.push_back(X.label(v));
        rows.push_back(std::move(row));
    }
    Subcomplex out{SimplicialComplex::build(rows), {}, {}};
    for (VertexId v = 0; v < out.complex.vertex_count(); ++v)
        out.vertex_to_parent.push_back(*X.find_vertex(out.complex.label(v)));
    for (FacetId f = 0; f < out.complex.facet_count(); ++f) {
        Face parent;
        for (VertexId v : out.complex.facet(f))
            parent.push_back(out.vertex_to_parent[v]);
        out.facet_to_parent.push_back(*X.find_facet(parent));
    }
    return out;
}

std::optional<Subcomplex> restrict_complex(const SimplicialComplex& X, const std::vector<VertexId>& vertices)
{
    auto facets = restrict_facets(X, vertices);
    if (facets.empty())
        return std::nullopt;
    return subcomplex(X, facets);
}

} // namespace stacked
