// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include "support.hpp"

#include "stacked/natline.hpp"
#include "stacked/oracle.hpp"
#include "stacked/partition_maps.hpp"
#include "stacked/textio.hpp"

#include <chrono>
#include <cstdio>
#include <iostream>
#include <sstream>

using namespace testing;

namespace {

using Clock = std::chrono::steady_clock;
using Blocks = std::vector<std::vector<int>>;
using LabelBlocks = std::set<std::set<std::string>>;

struct Outcome {
    bool pass = true;
    std::ostringstream detail;

    void fail(const std::string& why)
    {
        if (pass)
            detail << why;
        pass = false;
    }
};

double seconds_since(Clock::time_point start)
{
    return std::chrono::duration<double>(Clock::now() - start).count();
}

// Distance matrices from the BFS oracles, independent of GalleryIndex.
struct OracleDistances {
    std::vector<std::vector<int>> vertex, facet;

    explicit OracleDistances(const SimplicialComplex& X)
    {
        const auto v = X.vertex_count(), n = X.facet_count();
        vertex.assign(v, std::vector<int>(v, 0));
        facet.assign(n, std::vector<int>(n, 0));
        for (VertexId a = 0; a < v; ++a)
            for (VertexId b = a + 1; b < v; ++b)
                vertex[a][b] = vertex[b][a] = bfs_vertex_distance(X, a, b);
        for (FacetId a = 0; a < n; ++a)
            for (FacetId b = a + 1; b < n; ++b)
                facet[a][b] = facet[b][a] = bfs_facet_distance(X, a, b);
    }
};

bool scattered(const Partition& P, const std::vector<std::vector<int>>& dist, int s)
{
    for (const auto& b : P.blocks())
        for (std::size_t i = 0; i < b.size(); ++i)
            for (std::size_t j = i + 1; j < b.size(); ++j)
                if (dist[b[i]][b[j]] < s)
                    return false;
    return true;
}

struct Instance {
    std::string name;
    SimplicialComplex X;
    int max_s;
};

std::vector<Instance> theorem_corpus()
{
    std::vector<Instance> out;
    for (int v = 2; v <= 6; ++v)
        for_each_tree(v, [&](const SimplicialComplex& T) { out.push_back({"tree v=" + std::to_string(v), T, 3}); });
    for_each_polygon_triangulation(7, [&](const SimplicialComplex& X) { out.push_back({"heptagon", X, 2}); });
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const int d = 2 + static_cast<int>(seed % 2);
        const int n = 1 + static_cast<int>((seed / 2) % 7);
        out.push_back({"random_stacked d=" + std::to_string(d) + " n=" + std::to_string(n) + " seed="
                           + std::to_string(seed),
                       random_stacked(d, n, 1000 + seed), 2});
    }
    return out;
}

int max_parts(const Instance& in)
{
    // Heptagon triangulations are checked for r up to 3; everything else for every feasible r.
    return in.name == "heptagon" ? 3 : static_cast<int>(in.X.facet_count());
}

Outcome reference_partitions()
{
    Outcome o;
    auto timed = [&](const char* name, const SimplicialComplex& X, const Partition& Q, const LabelBlocks& expected) {
        const auto start = Clock::now();
        const auto image = label_blocks(X, facet_to_vertex(X, Q));
        const double t = seconds_since(start);
        if (image != expected)
            o.fail(std::string(name) + ": wrong image");
        if (t >= 1.0)
            o.fail(std::string(name) + ": took " + std::to_string(t) + " s");
    };

    const auto line = parse_complex("1 2\n2 3\n3 4\n4 5\n5 6\n");
    timed("first tree", line, parse_partition("3,4 4,5\n1,2 2,3 5,6\n", line, GroundKind::Facets),
          {{"1", "3", "5"}, {"2", "6"}, {"4"}});

    const auto branch = parse_complex("1 2\n2 3\n3 4\n4 5\n5 6\n6 7\n4 8\n8 9\n9 10\n");
    timed("second tree", branch,
          parse_partition("5,6 8,9 9,10\n1,2 2,3 3,4 4,5 6,7 4,8\n", branch, GroundKind::Facets),
          {{"1", "3", "5", "8", "10"}, {"2", "4", "7"}, {"6", "9"}});

    const auto hept = parse_complex("2 3 4\n2 4 5\n2 5 7\n5 6 7\n1 2 7\n");
    timed("heptagon", hept, parse_partition("2,3,4 2,5,7\n1,2,7 2,4,5 5,6,7\n", hept, GroundKind::Facets),
          {{"3", "7"}, {"1", "4", "6"}, {"2"}, {"5"}});
    return o;
}

Outcome correspondence(const std::vector<Instance>& corpus)
{
    Outcome o;
    std::size_t reports = 0;
    for (const auto& in : corpus) {
        const GalleryIndex g(in.X);
        for (int r = 1; r <= max_parts(in); ++r)
            for (int s = 1; s <= in.max_s; ++s) {
                auto report = verify_bijection(g, r, s);
                ++reports;
                if (!report.ok())
                    o.fail(in.name + " r=" + std::to_string(r) + " s=" + std::to_string(s) + "\n"
                           + format_report(report));
            }
    }
    o.detail << (o.pass ? "" : "; ") << reports << " reports over " << corpus.size() << " complexes";
    return o;
}

Outcome counting(const std::vector<Instance>& corpus)
{
    Outcome o;
    for (const auto& in : corpus) {
        const GalleryIndex g(in.X);
        const auto report = census(g);
        const int n = static_cast<int>(in.X.facet_count());
        std::uint64_t total = 0;
        for (const auto& row : report.rows) {
            total += row.count;
            if (row.count != stirling2(n, row.r))
                o.fail(in.name + ": r=" + std::to_string(row.r) + " count " + std::to_string(row.count));
        }
        if (report.rows.size() != static_cast<std::size_t>(n) || total != bell(n))
            o.fail(in.name + ": total " + std::to_string(total) + " != bell " + std::to_string(bell(n)));
    }
    return o;
}

// Images are rechecked with BFS distances rather than trusting the report.
Outcome scatter_transport(const std::vector<Instance>& corpus)
{
    Outcome o;
    std::size_t checked = 0;
    for (const auto& in : corpus) {
        const GalleryIndex g(in.X);
        const OracleDistances dist(in.X);
        const int d = in.X.dimension();
        for (int r = 1; r <= max_parts(in); ++r)
            for (int s = 1; s <= in.max_s; ++s) {
                for_each_partition(facet_family(g, r, s), [&](const Partition& Q) {
                    ++checked;
                    if (!scattered(facet_to_vertex(g, Q), dist.vertex, s + 1))
                        o.fail(in.name + ": facet_to_vertex image not " + std::to_string(s + 1) + "-scattered");
                    return true;
                });
                for_each_partition(vertex_family(g, r + d, s + 1), [&](const Partition& P) {
                    ++checked;
                    if (!scattered(vertex_to_facet(g, P), dist.facet, s))
                        o.fail(in.name + ": vertex_to_facet image not " + std::to_string(s) + "-scattered");
                    return true;
                });
                const auto report = verify_bijection(g, r, s);
                if (report.scatter_violations != 0)
                    o.fail(in.name + ": report lists scatter violations");
            }
    }
    o.detail << (o.pass ? "" : "; ") << checked << " images";
    return o;
}

PrefixPartition singled_out(int n, const std::vector<int>& special)
{
    Blocks blocks;
    std::vector<int> rest;
    for (int i = 1; i <= n; ++i)
        if (std::find(special.begin(), special.end(), i) == special.end())
            rest.push_back(i);
    blocks.push_back(special);
    blocks.push_back(rest);
    return make_prefix_partition(n, blocks);
}

Outcome closed_forms()
{
    Outcome o;
    auto expect = [&](const char* name, const PrefixPartition& got, const Blocks& want) {
        if (got.blocks != want)
            o.fail(std::string(name) + ": got " + emit_prefix_partition(got));
    };
    expect("p=10", refine_once(singled_out(20, {10})),
           {{1, 3, 5, 7, 9, 12, 14, 16, 18, 20}, {2, 4, 6, 8, 10}, {11, 13, 15, 17, 19, 21}});
    expect("t=2 p=12", refine_iter(singled_out(24, {12}), 2),
           {{1, 4, 7, 10, 13, 16, 19, 22, 25}, {2, 5, 8, 11, 15, 18, 21, 24}, {3, 6, 9, 12}, {14, 17, 20, 23, 26}});
    expect("p=8 q=14", refine_once(singled_out(20, {8, 14})),
           {{1, 3, 5, 7, 10, 12, 14}, {2, 4, 6, 8, 15, 17, 19, 21}, {9, 11, 13, 16, 18, 20}});
    expect("p=8 q=13", refine_once(singled_out(20, {8, 13})),
           {{1, 3, 5, 7, 10, 12, 15, 17, 19, 21}, {2, 4, 6, 8, 14, 16, 18, 20}, {9, 11, 13}});
    return o;
}

Outcome path_uniqueness()
{
    Outcome o;
    std::mt19937_64 rng(2024);
    for (std::uint64_t trial = 0; trial < 1000; ++trial) {
        const int d = 1 + static_cast<int>(trial % 3);
        const int n = 2 + static_cast<int>(trial % 11);
        const auto X = random_stacked(d, n, 5000 + trial);
        std::uniform_int_distribution<FacetId> pick(0, static_cast<FacetId>(n - 1));
        const FacetId f = pick(rng), g = pick(rng);
        std::uniform_int_distribution<int> wander(0, 3 * n);
        const auto walk = random_walk(X, f, g, wander(rng), rng);
        const auto reduced = reduce_walk(X, walk).facets;
        const auto other = reduce_walk(X, random_walk(X, f, g, wander(rng), rng)).facets;
        if (reduced != other || reduced != facet_path(X, f, g).facets || reduced != reduce_randomly(X, walk.facets, rng))
            o.fail("trial " + std::to_string(trial) + ": walk-dependent reduction");
    }
    return o;
}

// The restriction of Q to X_m maps onto the restriction of facet_to_vertex(Q) to V_m.
bool restriction_holds(const SimplicialComplex& X, const Partition& Q, const Face& ridge, int m)
{
    const auto P = facet_to_vertex(X, Q);
    const auto N = distance_neighborhood(X, ridge, m);
    if (N.facets.empty())
        return true;
    const auto sub = subcomplex(X, N.facets);
    const auto owner = Q.block_of(X.facet_count());
    std::vector<std::uint32_t> labels(sub.complex.facet_count());
    for (FacetId f = 0; f < sub.complex.facet_count(); ++f)
        labels[f] = owner[sub.facet_to_parent[f]];
    const auto local = facet_to_vertex(sub.complex, Partition::from_labels(GroundKind::Facets, labels));
    std::vector<Block> lifted;
    for (const auto& b : local.blocks()) {
        Block block;
        for (Element v : b)
            block.push_back(sub.vertex_to_parent[v]);
        lifted.push_back(block);
    }
    return Partition(GroundKind::Vertices, lifted) == restrict_partition(P, N.vertices);
}

Outcome restriction_and_colimit()
{
    Outcome o;
    std::mt19937_64 rng(717);
    std::size_t neighborhoods = 0;
    for (std::uint64_t c = 0; c < 50; ++c) {
        const int d = 1 + static_cast<int>(c % 3);
        const int n = 2 + static_cast<int>(c % 7);
        const auto X = random_stacked(d, n, 9000 + c);
        const GalleryIndex g(X);
        std::vector<Face> ridges;
        for (const auto& [ridge, owners] : X.ridges())
            ridges.push_back(ridge);
        const Face base = ridges[std::uniform_int_distribution<std::size_t>(0, ridges.size() - 1)(rng)];
        std::uniform_int_distribution<int> parts(1, n), scatter(1, 2);
        // Partitions meeting the theorem's hypotheses; one block of everything always qualifies.
        std::vector<Partition> family = enumerate_partitions(facet_family(g, 1, 1));
        for (int tries = 0; tries < 3; ++tries) {
            auto more = enumerate_partitions(facet_family(g, parts(rng), scatter(rng)));
            if (!more.empty())
                family.push_back(more[std::uniform_int_distribution<std::size_t>(0, more.size() - 1)(rng)]);
        }
        for (const auto& Q : family) {
            for (int m = 1;; ++m) {
                ++neighborhoods;
                if (!restriction_holds(X, Q, base, m)) {
                    o.fail("complex " + std::to_string(c) + " m=" + std::to_string(m));
                    break;
                }
                if (distance_neighborhood(X, base, m).facets.size() == X.facet_count())
                    break;
            }
        }
    }

    std::size_t prefixes = 0;
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 2 + trial % 19;
        const int r = std::uniform_int_distribution<int>(1, n)(rng);
        std::uniform_int_distribution<int> pick(0, r - 1);
        Blocks blocks(static_cast<std::size_t>(r));
        for (int i = 1; i <= n; ++i)
            blocks[static_cast<std::size_t>(pick(rng))].push_back(i);
        std::erase_if(blocks, [](const auto& b) { return b.empty(); });
        ++prefixes;
        if (!check_colimit_compatibility(make_prefix_partition(n, blocks)))
            o.fail("prefix trial " + std::to_string(trial));
    }
    o.detail << (o.pass ? "" : "; ") << neighborhoods << " neighborhoods, " << prefixes << " prefixes";
    return o;
}

Partition random_partition(std::size_t n, GroundKind kind, std::mt19937_64& rng)
{
    std::uniform_int_distribution<std::uint32_t> color(0, static_cast<std::uint32_t>(std::max<std::size_t>(1, n / 2)));
    std::vector<std::uint32_t> labels(n);
    for (auto& c : labels)
        c = color(rng);
    return Partition::from_labels(kind, labels);
}

Outcome round_trips()
{
    Outcome o;
    std::mt19937_64 rng(500);
    std::vector<SimplicialComplex> pool;
    for (std::uint64_t seed = 0; seed < 400; ++seed)
        pool.push_back(random_stacked(1 + static_cast<int>(seed % 4), 1 + static_cast<int>(seed % 12), seed));
    for (std::uint64_t seed = 0; seed < 50; ++seed)
        pool.push_back(random_tree(2 + static_cast<int>(seed % 9), seed));
    for (int k = 3; k <= 7 && pool.size() < 500; ++k)
        for_each_polygon_triangulation(k, [&](const SimplicialComplex& X) {
            if (pool.size() < 500)
                pool.push_back(X);
        });
    for (const auto& X : pool) {
        const auto text = emit_complex(X);
        const auto Y = parse_complex(text);
        if (!(Y == X) || emit_complex(Y) != text)
            o.fail("complex round trip:\n" + text);
        const auto P = random_partition(X.vertex_count(), GroundKind::Vertices, rng);
        const auto Q = random_partition(X.facet_count(), GroundKind::Facets, rng);
        const auto ptext = emit_partition(P, X), qtext = emit_partition(Q, X);
        if (!(parse_partition(ptext, X, GroundKind::Vertices) == P)
            || emit_partition(parse_partition(ptext, X, GroundKind::Vertices), X) != ptext)
            o.fail("vertex partition round trip:\n" + ptext);
        if (!(parse_partition(qtext, X, GroundKind::Facets) == Q)
            || emit_partition(parse_partition(qtext, X, GroundKind::Facets), X) != qtext)
            o.fail("facet partition round trip:\n" + qtext);
        const int n = static_cast<int>(X.facet_count());
        Blocks blocks;
        for (const auto& b : Q.blocks()) {
            std::vector<int> block;
            for (Element e : b)
                block.push_back(static_cast<int>(e) + 1);
            blocks.push_back(block);
        }
        const auto prefix = make_prefix_partition(n, blocks);
        if (!(parse_prefix_partition(emit_prefix_partition(prefix), n) == prefix))
            o.fail("prefix partition round trip:\n" + emit_prefix_partition(prefix));
    }
    o.detail << (o.pass ? "" : "; ") << pool.size() << " complexes";
    return o;
}

} // namespace

int main()
{
    struct Criterion {
        const char* name;
        std::function<Outcome()> run;
    };
    const auto corpus = theorem_corpus();
    const std::vector<Criterion> criteria{
        {"1 reference partitions reproduced exactly", reference_partitions},
        {"2 correspondence verified at desk scale", [&] { return correspondence(corpus); }},
        {"3 counting identities", [&] { return counting(corpus); }},
        {"4 scatteredness transport", [&] { return scatter_transport(corpus); }},
        {"5 closed forms on the natural line", closed_forms},
        {"6 path uniqueness", path_uniqueness},
        {"7 restriction and colimit compatibility", restriction_and_colimit},
        {"8 format round trips", round_trips},
    };

    int failed = 0;
    for (const auto& c : criteria) {
        const auto start = Clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        std::printf("%s  %-42s %7.2fs  %s\n", o.pass ? "PASS" : "FAIL", c.name, seconds_since(start),
                    o.detail.str().c_str());
        std::fflush(stdout);
        failed += !o.pass;
    }
    std::printf("%d of %zu criteria failed\n", failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
