#include "stacked/textio.hpp"

#include "stacked/error.hpp"

#include <cctype>
#include <charconv>
#include <functional>
#include <sstream>
#include <unordered_map>

namespace stacked {

namespace {

struct Line {
    int number;
    std::vector<std::string> tokens;
};

// Splits into non-blank, non-comment lines of single-space separated tokens.
std::vector<Line> tokenize(std::string_view text, int* last_line = nullptr)
{
    std::vector<Line> out;
    int number = 0;
    std::size_t pos = 0;
    while (pos < text.size()) {
        auto end = text.find('\n', pos);
        if (end == std::string_view::npos)
            end = text.size();
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        ++number;
        if (line.find_first_not_of(' ') == std::string_view::npos)
            continue;
        if (line.front() == '#')
            continue;
        for (char c : line)
            if (c != ' ' && std::isspace(static_cast<unsigned char>(c)))
                throw Error::at_line(ErrorKind::SyntaxError, "tokens must be separated by single spaces (LF line ends)",
                                     number);
        Line parsed{number, {}};
        std::size_t start = 0;
        while (true) {
            auto space = line.find(' ', start);
            auto token = line.substr(start, space == std::string_view::npos ? std::string_view::npos : space - start);
            if (token.empty())
                throw Error::at_line(ErrorKind::SyntaxError, "empty token (leading, trailing or doubled space)", number);
            parsed.tokens.emplace_back(token);
            if (space == std::string_view::npos)
                break;
            start = space + 1;
        }
        out.push_back(std::move(parsed));
    }
    if (last_line)
        *last_line = number;
    return out;
}

using Resolver = std::function<std::optional<Element>(std::string_view)>;

Partition parse_with(std::string_view text, std::size_t ground, GroundKind kind, const Resolver& resolve)
{
    int last_line = 0;
    const auto lines = tokenize(text, &last_line);
    std::vector<int> owner(ground, 0);
    std::vector<Block> blocks;
    for (const auto& line : lines) {
        Block block;
        for (const auto& token : line.tokens) {
            auto e = resolve(token);
            if (!e)
                throw Error::at_line(ErrorKind::UnknownToken, "'" + token + "'", line.number);
            if (owner[*e])
                throw Error::at_line(ErrorKind::Overlap,
                                     "'" + token + "' already listed on line " + std::to_string(owner[*e]),
                                     line.number);
            owner[*e] = line.number;
            block.push_back(*e);
        }
        blocks.push_back(std::move(block));
    }
    for (std::size_t e = 0; e < ground; ++e)
        if (!owner[e])
            throw Error::at_line(ErrorKind::MissingElement, "element " + std::to_string(e) + " is in no block",
                                 std::max(last_line, 1));
    return Partition(kind, std::move(blocks));
}

std::string quoted(const std::string& s)
{
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\')
            out += '\\';
        out += c;
    }
    return out + "\"";
}

int color_of(std::uint32_t block)
{
    return static_cast<int>(block % 12) + 1;
}

} // namespace

SimplicialComplex parse_complex(std::string_view text)
{
    const auto lines = tokenize(text);
    std::vector<std::vector<std::string>> facets;
    facets.reserve(lines.size());
    for (const auto& line : lines)
        facets.push_back(line.tokens);
    try {
        return SimplicialComplex::build(facets);
    } catch (const Error& e) {
        if (e.item())
            throw Error::at_line(e.kind(), e.detail(), lines[*e.item()].number);
        throw;
    }
}

std::string emit_complex(const SimplicialComplex& X)
{
    std::string out;
    for (const auto& face : X.facets()) {
        for (std::size_t i = 0; i < face.size(); ++i) {
            if (i)
                out += ' ';
            out += X.label(face[i]);
        }
        out += '\n';
    }
    return out;
}

Partition parse_partition(std::string_view text, const SimplicialComplex& X, GroundKind kind)
{
    if (kind == GroundKind::Vertices)
        return parse_with(text, X.vertex_count(), kind, [&](std::string_view t) { return X.find_vertex(t); });
    return parse_with(text, X.facet_count(), kind, [&](std::string_view t) { return X.find_facet_token(t); });
}

std::string emit_partition(const Partition& P, const SimplicialComplex& X)
{
    std::vector<std::string> tokens;
    if (P.kind() == GroundKind::Vertices) {
        tokens.assign(X.labels().begin(), X.labels().end());
    } else {
        for (FacetId f = 0; f < X.facet_count(); ++f)
            tokens.push_back(X.facet_token(f));
    }
    return emit_partition(P, tokens);
}

Partition parse_partition(std::string_view text, const std::vector<std::string>& tokens, GroundKind kind)
{
    std::unordered_map<std::string_view, Element> index;
    for (Element e = 0; e < tokens.size(); ++e)
        index.emplace(tokens[e], e);
    return parse_with(text, tokens.size(), kind, [&](std::string_view t) -> std::optional<Element> {
        auto it = index.find(t);
        if (it == index.end())
            return std::nullopt;
        return it->second;
    });
}

std::string emit_partition(const Partition& P, const std::vector<std::string>& tokens)
{
    std::string out;
    for (const auto& block : P.blocks()) {
        for (std::size_t i = 0; i < block.size(); ++i) {
            if (i)
                out += ' ';
            out += tokens.at(block[i]);
        }
        out += '\n';
    }
    return out;
}

PrefixPartition parse_prefix_partition(std::string_view text, int n)
{
    if (n < 0)
        throw Error(ErrorKind::OutOfRange, "prefix length must be non-negative");
    const auto P = parse_with(text, static_cast<std::size_t>(n), GroundKind::Facets,
                              [n](std::string_view t) -> std::optional<Element> {
                                  int x = 0;
                                  if (t.size() > 1 && t.front() == '0')
                                      return std::nullopt;
                                  auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), x);
                                  if (ec != std::errc{} || ptr != t.data() + t.size() || x < 1 || x > n)
                                      return std::nullopt;
                                  return static_cast<Element>(x - 1);
                              });
    std::vector<std::vector<int>> blocks;
    for (const auto& b : P.blocks()) {
        std::vector<int> ints;
        for (Element e : b)
            ints.push_back(static_cast<int>(e) + 1);
        blocks.push_back(std::move(ints));
    }
    return make_prefix_partition(n, std::move(blocks));
}

std::string emit_prefix_partition(const PrefixPartition& P)
{
    std::string out;
    for (const auto& block : P.blocks) {
        for (std::size_t i = 0; i < block.size(); ++i) {
            if (i)
                out += ' ';
            out += std::to_string(block[i]);
        }
        out += '\n';
    }
    return out;
}

std::string inline_partition(const Partition& P, const SimplicialComplex& X)
{
    std::string out;
    for (const auto& block : P.blocks()) {
        if (!out.empty())
            out += ' ';
        out += '{';
        for (std::size_t i = 0; i < block.size(); ++i) {
            if (i)
                out += ' ';
            out += P.kind() == GroundKind::Vertices ? X.label(block[i]) : X.facet_token(block[i]);
        }
        out += '}';
    }
    return out;
}

std::string export_dot(const SimplicialComplex& X, const std::optional<Partition>& partition)
{
    std::vector<std::uint32_t> vertex_color, facet_color;
    if (partition) {
        const bool on_vertices = partition->kind() == GroundKind::Vertices;
        if (!partition->covers(on_vertices ? X.vertex_count() : X.facet_count()))
            throw Error(ErrorKind::NotAPartition, "partition does not match the complex");
        (on_vertices ? vertex_color : facet_color) = partition->block_of();
    }

    std::ostringstream out;
    if (X.dimension() == 1) {
        out << "graph complex {\n";
        for (VertexId v = 0; v < X.vertex_count(); ++v) {
            out << "  " << quoted(X.label(v));
            if (!vertex_color.empty())
                out << " [colorscheme=set312, style=filled, fillcolor=" << color_of(vertex_color[v]) << "]";
            out << ";\n";
        }
        for (FacetId f = 0; f < X.facet_count(); ++f) {
            const Face& e = X.facet(f);
            out << "  " << quoted(X.label(e[0])) << " -- " << quoted(X.label(e[1]));
            if (!facet_color.empty())
                out << " [colorscheme=set312, color=" << color_of(facet_color[f]) << ", penwidth=3]";
            out << ";\n";
        }
    } else {
        out << "graph dual {\n";
        for (FacetId f = 0; f < X.facet_count(); ++f) {
            out << "  " << quoted(X.facet_token(f));
            if (!facet_color.empty())
                out << " [colorscheme=set312, style=filled, fillcolor=" << color_of(facet_color[f]) << "]";
            out << ";\n";
        }
        const auto& adj = X.dual_adjacency();
        for (FacetId f = 0; f < X.facet_count(); ++f)
            for (FacetId g : adj[f])
                if (f < g)
                    out << "  " << quoted(X.facet_token(f)) << " -- " << quoted(X.facet_token(g)) << ";\n";
        if (!vertex_color.empty())
            for (const auto& block : partition->blocks()) {
                out << "  // vertex block " << color_of(vertex_color[block.front()]) << ":";
                for (Element v : block)
                    out << ' ' << X.label(v);
                out << '\n';
            }
    }
    out << "}\n";
    return out.str();
}

} // namespace stacked
