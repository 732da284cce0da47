#include "stacked/oracle.hpp"

#include "stacked/error.hpp"

#include <array>
#include <sstream>

namespace stacked {

EnumerationSpec vertex_family(const GalleryIndex& gallery, int parts, int scatter)
{
    return {GroundKind::Vertices, gallery.complex().vertex_count(), parts, scatter,
            [&gallery](Element a, Element b) { return gallery.vertex_distance(a, b); }};
}

EnumerationSpec facet_family(const GalleryIndex& gallery, int parts, int scatter)
{
    return {GroundKind::Facets, gallery.complex().facet_count(), parts, scatter,
            [&gallery](Element a, Element b) { return gallery.facet_distance(a, b); }};
}

EnumerationSpec gap_family(std::size_t n, int parts, int scatter)
{
    return {GroundKind::Facets, n, parts, scatter,
            [](Element a, Element b) { return a > b ? static_cast<int>(a - b) : static_cast<int>(b - a); }};
}

namespace {

class RestrictedGrowth {
public:
    RestrictedGrowth(const EnumerationSpec& spec, const std::function<bool(const Partition&)>& visit)
        : spec_(spec)
        , visit_(visit)
        , n_(spec.ground)
        , parts_(static_cast<std::size_t>(spec.parts))
        , close_(n_ * n_, 0)
    {
        for (Element a = 0; a < n_; ++a)
            for (Element b = 0; b < n_; ++b)
                close_[a * n_ + b] = a != b && spec.distance(a, b) < spec.scatter;
    }

    void run()
    {
        if (parts_ > n_)
            return;
        blocks_.reserve(parts_);
        descend(0);
    }

private:
    bool descend(Element e)
    {
        if (e == n_) {
            if (blocks_.size() == parts_)
                return visit_(Partition(spec_.kind, blocks_));
            return true;
        }
        if (blocks_.size() + (n_ - e) < parts_)
            return true;
        for (auto& block : blocks_) {
            bool fits = true;
            for (Element m : block)
                if (close_[e * n_ + m]) {
                    fits = false;
                    break;
                }
            if (!fits)
                continue;
            block.push_back(e);
            const bool more = descend(e + 1);
            block.pop_back();
            if (!more)
                return false;
        }
        if (blocks_.size() < parts_) {
            blocks_.push_back({e});
            const bool more = descend(e + 1);
            blocks_.pop_back();
            if (!more)
                return false;
        }
        return true;
    }

    const EnumerationSpec& spec_;
    const std::function<bool(const Partition&)>& visit_;
    std::size_t n_;
    std::size_t parts_;
    std::vector<char> close_;
    std::vector<Block> blocks_;
};

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b)
{
    std::uint64_t out;
    if (__builtin_add_overflow(a, b, &out))
        throw Error(ErrorKind::OutOfRange, "integer overflow");
    return out;
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b)
{
    std::uint64_t out;
    if (__builtin_mul_overflow(a, b, &out))
        throw Error(ErrorKind::OutOfRange, "integer overflow");
    return out;
}

constexpr int kMaxCount = 25;

} // namespace

void for_each_partition(const EnumerationSpec& spec, const std::function<bool(const Partition&)>& visit)
{
    if (spec.parts < 1 || spec.scatter < 1)
        throw Error(ErrorKind::OutOfRange, "enumeration needs parts >= 1 and scatter >= 1");
    RestrictedGrowth(spec, visit).run();
}

std::vector<Partition> enumerate_partitions(const EnumerationSpec& spec)
{
    std::vector<Partition> out;
    for_each_partition(spec, [&](const Partition& P) {
        out.push_back(P);
        return true;
    });
    return out;
}

std::uint64_t count_partitions(const EnumerationSpec& spec)
{
    std::uint64_t count = 0;
    for_each_partition(spec, [&](const Partition&) {
        ++count;
        return true;
    });
    return count;
}

TheoremReport verify_bijection(const GalleryIndex& gallery, int r, int s, unsigned threads)
{
    const int vertex_parts = r + gallery.complex().dimension();
    auto facets = enumerate_partitions(facet_family(gallery, r, s));
    auto vertices = enumerate_partitions(vertex_family(gallery, vertex_parts, s + 1));
    return check_theorem_instance(gallery, r, s, facets, vertices, threads);
}

TheoremReport verify_bijection(const SimplicialComplex& X, int r, int s, unsigned threads)
{
    return verify_bijection(GalleryIndex(X), r, s, threads);
}

std::string format_report(const TheoremReport& report)
{
    std::ostringstream out;
    out << "r=" << report.r << '\n'
        << "s=" << report.s << '\n'
        << "leftCount=" << report.facet_family << '\n'
        << "rightCount=" << report.vertex_family << '\n'
        << "invalidInputs=" << report.invalid_inputs << '\n'
        << "blockCountViolations=" << report.block_count_violations << '\n'
        << "scatterViolations=" << report.scatter_violations << '\n'
        << "imageMismatches=" << report.unmatched_images << '\n'
        << "injectivityFailures=" << report.injectivity_failures << '\n'
        << "roundTripFailures=" << report.round_trip_failures << '\n'
        << "failures=" << report.failures() << '\n';
    if (!report.counterexample.empty())
        out << "counterexample=" << report.counterexample << '\n';
    return out.str();
}

std::uint64_t stirling2(int n, int k)
{
    if (n < 0 || n > kMaxCount || k < 0 || k > n)
        throw Error(ErrorKind::OutOfRange, "stirling2 needs 0 <= k <= n <= 25");
    // row[j] = S(m, j) for the current m
    std::array<std::uint64_t, kMaxCount + 1> row{};
    row[0] = 1;
    for (int m = 1; m <= n; ++m) {
        for (int j = m; j >= 1; --j)
            row[j] = checked_add(checked_mul(static_cast<std::uint64_t>(j), row[j]), row[j - 1]);
        row[0] = 0;
    }
    return row[k];
}

std::uint64_t bell(int n)
{
    if (n < 0 || n > kMaxCount)
        throw Error(ErrorKind::OutOfRange, "bell needs 0 <= n <= 25");
    std::uint64_t total = 0;
    for (int k = 0; k <= n; ++k)
        total = checked_add(total, stirling2(n, k));
    return total;
}

CensusReport census(const GalleryIndex& gallery)
{
    const auto& X = gallery.complex();
    CensusReport report;
    report.facets = static_cast<int>(X.facet_count());
    report.dimension = X.dimension();
    report.bell = bell(report.facets);
    for (int r = 1; r <= report.facets; ++r) {
        CensusRow row;
        row.r = r;
        row.count = count_partitions(vertex_family(gallery, r + X.dimension(), 2));
        row.expected = stirling2(report.facets, r);
        report.total = checked_add(report.total, row.count);
        report.rows.push_back(row);
    }
    return report;
}

std::string format_census(const CensusReport& report)
{
    std::ostringstream out;
    out << "facets=" << report.facets << '\n' << "dimension=" << report.dimension << '\n';
    for (const auto& row : report.rows)
        out << "r=" << row.r << " parts=" << row.r + report.dimension << " count=" << row.count
            << " stirling2=" << row.expected << (row.count == row.expected ? "" : " MISMATCH") << '\n';
    out << "total=" << report.total << '\n' << "bell=" << report.bell << '\n'
        << "status=" << (report.ok() ? "ok" : "mismatch") << '\n';
    return out.str();
}

} // namespace stacked
