// stackedcx: batch front end for the stacked complex library.
//
// Exit codes: 0 success, 1 usage/parse/validation error (and `check` on a
// complex that is not stacked), 2 a checked property failed (verify, census,
// nat colimit).

#include "stacked/complex.hpp"
#include "stacked/error.hpp"
#include "stacked/generators.hpp"
#include "stacked/natline.hpp"
#include "stacked/oracle.hpp"
#include "stacked/partition_maps.hpp"
#include "stacked/paths.hpp"
#include "stacked/textio.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <thread>

using namespace stacked;

namespace {

std::string read_input(const std::string& path)
{
    if (path == "-")
        return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot open " + path);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

SimplicialComplex load_complex(const std::string& path)
{
    try {
        return parse_complex(read_input(path));
    } catch (const Error& e) {
        throw std::runtime_error(path + ": " + e.what());
    }
}

Partition load_partition(const std::string& path, const SimplicialComplex& X, GroundKind kind)
{
    try {
        return parse_partition(read_input(path), X, kind);
    } catch (const Error& e) {
        throw std::runtime_error(path + ": " + e.what());
    }
}

unsigned default_threads()
{
    if (const char* env = std::getenv("STACKED_THREADS")) {
        const long n = std::strtol(env, nullptr, 10);
        if (n > 0)
            return static_cast<unsigned>(n);
    }
    return 1;
}

GroundKind parse_kind(const std::string& s)
{
    return s == "facets" ? GroundKind::Facets : GroundKind::Vertices;
}

FacetId facet_arg(const SimplicialComplex& X, const std::string& token)
{
    auto f = X.find_facet_token(token);
    if (!f)
        throw Error(ErrorKind::UnknownToken, "no facet '" + token + "' (write facets as comma-joined labels)");
    return *f;
}

VertexId vertex_arg(const SimplicialComplex& X, const std::string& token)
{
    auto v = X.find_vertex(token);
    if (!v)
        throw Error(ErrorKind::UnknownToken, "no vertex '" + token + "'");
    return *v;
}

std::string join_path(const SimplicialComplex& X, const FacetPath& p)
{
    std::string out;
    for (FacetId f : p.facets) {
        if (!out.empty())
            out += ' ';
        out += X.facet_token(f);
    }
    return out;
}

int run_check(const std::string& file)
{
    const auto X = load_complex(file);
    const auto verdict = is_stacked(X);
    std::cout << "dimension " << X.dimension() << '\n'
              << "facets " << X.facet_count() << '\n'
              << "vertices " << X.vertex_count() << '\n'
              << "stacked " << (verdict.stacked ? "yes" : "no") << '\n';
    if (verdict.certificate)
        for (const auto& step : verdict.certificate->steps) {
            std::cout << "step " << X.facet_token(step.facet);
            if (step.free_vertex)
                std::cout << " free " << X.label(*step.free_vertex);
            std::cout << '\n';
        }
    return verdict.stacked ? 0 : 1;
}

int run_path(const std::string& file, const std::vector<std::string>& facets, const std::vector<std::string>& vertices)
{
    if (facets.empty() && vertices.empty())
        throw std::runtime_error("path needs --facets f g or --vertices v w");
    const auto X = load_complex(file);
    if (!facets.empty()) {
        const auto p = facet_path(X, facet_arg(X, facets[0]), facet_arg(X, facets[1]));
        std::cout << join_path(X, p) << '\n' << "distance " << p.length() - 1 << '\n';
        return 0;
    }
    const VertexId v = vertex_arg(X, vertices[0]);
    const VertexId w = vertex_arg(X, vertices[1]);
    const int distance = vertex_distance(X, v, w);
    if (v != w) {
        try {
            const auto fp = face_path(X, {v}, {w});
            std::cout << X.label(v) << " | " << join_path(X, fp.path) << " | " << X.label(w) << '\n';
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::NotSeparated)
                throw;
            std::cout << X.label(v) << " and " << X.label(w) << " lie on a common codimension-one face\n";
        }
    }
    std::cout << "distance " << distance << '\n';
    return 0;
}

int run_map(const std::string& direction, const std::string& file, const std::string& part, bool lines)
{
    const auto X = load_complex(file);
    const bool forward = direction == "v2f";
    const auto P = load_partition(part, X, forward ? GroundKind::Vertices : GroundKind::Facets);
    const GalleryIndex gallery(X);
    const auto image = forward ? vertex_to_facet(gallery, P) : facet_to_vertex(gallery, P);
    std::cout << (lines ? emit_partition(image, X) : inline_partition(image, X) + "\n");
    return 0;
}

int run_enumerate(const std::string& file, const std::string& kind, int r, int s, bool count_only)
{
    const GalleryIndex gallery(load_complex(file));
    const auto spec = kind == "facets" ? facet_family(gallery, r, s) : vertex_family(gallery, r, s);
    if (count_only) {
        std::cout << count_partitions(spec) << '\n';
        return 0;
    }
    bool first = true;
    for_each_partition(spec, [&](const Partition& P) {
        if (!first)
            std::cout << '\n';
        first = false;
        std::cout << emit_partition(P, gallery.complex());
        return true;
    });
    return 0;
}

int run_verify(const std::string& file, int r, int s, unsigned threads)
{
    const GalleryIndex gallery(load_complex(file));
    const auto report = verify_bijection(gallery, r, s, threads);
    std::cout << format_report(report);
    return report.ok() ? 0 : 2;
}

int run_census(const std::string& file)
{
    const GalleryIndex gallery(load_complex(file));
    const auto report = census(gallery);
    std::cout << format_census(report);
    return report.ok() ? 0 : 2;
}

int run_nat(const std::string& pattern, int steps, int n)
{
    const auto P = parse_prefix_partition(read_input(pattern), n);
    std::cout << emit_prefix_partition(refine_iter(P, steps));
    if (n >= 2) {
        const bool ok = check_colimit_compatibility(P);
        std::cout << "colimit " << (ok ? "yes" : "no") << '\n';
        return ok ? 0 : 2;
    }
    return 0;
}

int run_dot(const std::string& file, const std::string& part, const std::string& kind)
{
    const auto X = load_complex(file);
    std::optional<Partition> P;
    if (!part.empty()) {
        const std::string text = read_input(part);
        if (kind == "auto") {
            try {
                P = parse_partition(text, X, GroundKind::Facets);
            } catch (const Error&) {
                P = parse_partition(text, X, GroundKind::Vertices);
            }
        } else {
            P = parse_partition(text, X, parse_kind(kind));
        }
    }
    std::cout << export_dot(X, P);
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Stacked simplicial complexes: paths, partition correspondences and enumeration"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all");

    const std::vector<std::string> kinds{"vertices", "facets"};

    std::string file, part;
    int r = 1, s = 1;
    unsigned threads = default_threads();

    auto* check = app.add_subcommand("check", "dimension, sizes and a stacking order");
    check->add_option("complex", file, "complex file or -")->required();

    std::vector<std::string> path_facets, path_vertices;
    auto* path = app.add_subcommand("path", "unique path between two facets or two vertices");
    path->add_option("complex", file)->required();
    auto* pf = path->add_option("--facets", path_facets, "two facet tokens like 2,3,4")->expected(2);
    auto* pv = path->add_option("--vertices", path_vertices, "two vertex labels")->expected(2);
    pf->excludes(pv);
    pv->excludes(pf);

    std::string direction;
    bool lines = false;
    auto* map = app.add_subcommand("map", "apply vertex->facet (v2f) or facet->vertex (f2v)");
    map->add_option("direction", direction)->required()->check(CLI::IsMember({"v2f", "f2v"}));
    map->add_option("complex", file)->required();
    map->add_option("partition", part)->required();
    map->add_flag("--lines", lines, "print in partition file format instead of {..} {..}");

    std::string kind = "vertices";
    bool count_only = false;
    auto* enumerate = app.add_subcommand("enumerate", "partitions into R blocks, each S-scattered");
    enumerate->add_option("complex", file)->required();
    enumerate->add_option("--kind", kind)->check(CLI::IsMember(kinds));
    enumerate->add_option("-r", r)->required()->check(CLI::PositiveNumber);
    enumerate->add_option("-s", s)->required()->check(CLI::PositiveNumber);
    enumerate->add_flag("--count", count_only, "print only the number of partitions");

    auto* verify = app.add_subcommand("verify", "exhaustive check of the R-facet / (R+d)-vertex correspondence");
    verify->add_option("complex", file)->required();
    verify->add_option("-r", r)->required()->check(CLI::PositiveNumber);
    verify->add_option("-s", s)->required()->check(CLI::PositiveNumber);
    verify->add_option("-j,--threads", threads, "worker threads (default $STACKED_THREADS or 1)");

    auto* census_cmd = app.add_subcommand("census", "independent vertex partitions per r against Stirling/Bell");
    census_cmd->add_option("complex", file)->required();

    std::string pattern;
    int steps = 1, prefix = 0;
    auto* nat = app.add_subcommand("nat", "refine a partition of [1..N] along the line graph");
    nat->add_option("--pattern", pattern, "partition of 1..N, one block per line")->required();
    nat->add_option("--steps", steps)->check(CLI::NonNegativeNumber);
    nat->add_option("-n", prefix, "prefix length N")->required()->check(CLI::NonNegativeNumber);

    std::string family;
    int gen_v = 5, gen_k = 5, gen_d = 2, gen_n = 5;
    std::size_t gen_index = 0;
    std::uint64_t seed = 1;
    auto* gen = app.add_subcommand("gen", "emit a complex: tree, polygon, stacked or line");
    gen->add_option("family", family)->required()->check(CLI::IsMember({"tree", "polygon", "stacked", "line"}));
    gen->add_option("-v", gen_v, "tree: vertex count");
    gen->add_option("-k", gen_k, "polygon: corner count");
    gen->add_option("--index", gen_index, "polygon: which triangulation, in generation order");
    gen->add_option("-d", gen_d, "stacked: dimension");
    gen->add_option("-n", gen_n, "stacked: facet count; line: edge count");
    gen->add_option("--seed", seed);

    auto* dot = app.add_subcommand("dot", "Graphviz export, optionally colored by a partition");
    dot->add_option("complex", file)->required();
    dot->add_option("partition", part);
    std::string dot_kind = "auto";
    dot->add_option("--kind", dot_kind)->check(CLI::IsMember({"auto", "vertices", "facets"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (*check)
            return run_check(file);
        if (*path)
            return run_path(file, path_facets, path_vertices);
        if (*map)
            return run_map(direction, file, part, lines);
        if (*enumerate)
            return run_enumerate(file, kind, r, s, count_only);
        if (*verify)
            return run_verify(file, r, s, threads);
        if (*census_cmd)
            return run_census(file);
        if (*nat)
            return run_nat(pattern, steps, prefix);
        if (*gen) {
            if (family == "tree")
                std::cout << emit_complex(random_tree(gen_v, seed));
            else if (family == "stacked")
                std::cout << emit_complex(random_stacked(gen_d, gen_n, seed));
            else if (family == "line")
                std::cout << emit_complex(line_graph(gen_n));
            else {
                const auto all = polygon_triangulations(gen_k);
                if (gen->count("--seed"))
                    gen_index = static_cast<std::size_t>(seed % all.size());
                if (gen_index >= all.size())
                    throw Error(ErrorKind::OutOfRange,
                                "the " + std::to_string(gen_k) + "-gon has " + std::to_string(all.size())
                                    + " triangulations");
                std::cout << emit_complex(all[gen_index]);
            }
            return 0;
        }
        if (*dot)
            return run_dot(file, part, dot_kind);
    } catch (const std::exception& e) {
        std::cerr << "stackedcx: " << e.what() << '\n';
        return 1;
    }
    return 1;
}
