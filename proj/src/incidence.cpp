#include "eszlab/incidence.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <unordered_map>

namespace eszlab {

namespace {

void check_vars(const PointSet2&, const CurveMultiset& curves)
{
    if (curves.entries().empty()) return;
    const auto& vars = curves.entries().front().curve.vars();
    for (const auto& e : curves.entries()) {
        if (e.curve.vars() != vars) throw InputError("curves in one multiset must share their variable pair");
    }
}

// Sorted indices of the points on each entry.
std::vector<std::vector<std::size_t>> membership(const PointSet2& pts, const CurveMultiset& curves)
{
    check_vars(pts, curves);
    const auto& entries = curves.entries();
    std::vector<std::vector<std::size_t>> on(entries.size());
    const long long count = static_cast<long long>(entries.size());
#pragma omp parallel for schedule(dynamic)
    for (long long e = 0; e < count; ++e) {
        const auto& curve = entries[static_cast<std::size_t>(e)].curve;
        auto& list = on[static_cast<std::size_t>(e)];
        for (std::size_t p = 0; p < pts.size(); ++p) {
            const auto& [u, v] = pts.members()[p];
            if (curve.contains(u, v)) list.push_back(p);
        }
    }
    return on;
}

std::size_t shared_count(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b)
{
    std::size_t i = 0, j = 0, n = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] < b[j]) {
            ++i;
        } else if (b[j] < a[i]) {
            ++j;
        } else {
            ++n;
            ++i;
            ++j;
        }
    }
    return n;
}

struct ConflictGraphs {
    // Entry-level curve conflicts (distinct entries only).
    std::vector<std::vector<std::size_t>> curve_adj;
    std::vector<std::vector<std::size_t>> point_adj;
};

ConflictGraphs conflict_graphs(const PointSet2& pts, const CurveMultiset& curves, std::uint64_t mu)
{
    auto on = membership(pts, curves);
    const auto& entries = curves.entries();
    const std::size_t m = entries.size();
    ConflictGraphs g;
    g.curve_adj.resize(m);
    std::vector<std::vector<char>> conflict(m, std::vector<char>(m, 0));
    const long long count = static_cast<long long>(m);
#pragma omp parallel for schedule(dynamic)
    for (long long e = 0; e < count; ++e) {
        const auto ue = static_cast<std::size_t>(e);
        for (std::size_t f = ue + 1; f < m; ++f) conflict[ue][f] = shared_count(on[ue], on[f]) > mu;
    }
    for (std::size_t e = 0; e < m; ++e)
        for (std::size_t f = e + 1; f < m; ++f)
            if (conflict[e][f]) {
                g.curve_adj[e].push_back(f);
                g.curve_adj[f].push_back(e);
            }
    for (auto& adj : g.curve_adj) std::sort(adj.begin(), adj.end());

    const std::uint64_t n = pts.size();
    std::unordered_map<std::uint64_t, std::uint64_t> weight;
    for (std::size_t e = 0; e < m; ++e) {
        const auto& list = on[e];
        for (std::size_t i = 0; i < list.size(); ++i)
            for (std::size_t j = i + 1; j < list.size(); ++j) weight[list[i] * n + list[j]] += entries[e].multiplicity;
    }
    g.point_adj.resize(n);
    for (const auto& [key, w] : weight) {
        if (w <= mu) continue;
        std::size_t p = key / n, q = key % n;
        g.point_adj[p].push_back(q);
        g.point_adj[q].push_back(p);
    }
    for (auto& adj : g.point_adj) std::sort(adj.begin(), adj.end());
    return g;
}

std::uint64_t copy_degree(const CurveMultiset& curves, const ConflictGraphs& g, std::size_t e)
{
    std::uint64_t deg = curves.entries()[e].multiplicity - 1;
    for (std::size_t f : g.curve_adj[e]) deg += curves.entries()[f].multiplicity;
    return deg;
}

MultiplicityVerdict verdict_from(const CurveMultiset& curves, const ConflictGraphs& g, std::uint64_t lambda)
{
    MultiplicityVerdict v;
    for (std::size_t e = 0; e < curves.num_entries(); ++e) {
        std::uint64_t deg = copy_degree(curves, g, e);
        if (deg <= lambda) continue;
        for (std::size_t k = 0; k < curves.entries()[e].multiplicity; ++k)
            v.curve_violations.push_back({{e, k}, static_cast<std::size_t>(deg)});
    }
    for (std::size_t p = 0; p < g.point_adj.size(); ++p) {
        if (g.point_adj[p].size() > lambda) v.point_violations.push_back({p, g.point_adj[p].size()});
    }
    v.holds = v.curve_violations.empty() && v.point_violations.empty();
    return v;
}

std::size_t smallest_free(std::vector<char>& used)
{
    auto it = std::find(used.begin(), used.end(), 0);
    return static_cast<std::size_t>(it - used.begin());
}

std::string describe(const MultiplicityVerdict& v)
{
    return "system does not have bounded multiplicity: " + std::to_string(v.curve_violations.size()) +
           " curve and " + std::to_string(v.point_violations.size()) + " point violations";
}

} // namespace

PointSet2::PointSet2(std::array<GridSet, 2> ambient, std::vector<Point2> members)
    : ambient_(std::move(ambient)), members_(std::move(members))
{
    std::set<Point2> seen;
    for (const auto& p : members_) {
        if (!ambient_[0].contains(p.first) || !ambient_[1].contains(p.second))
            throw InputError("point (" + p.first.to_string() + ", " + p.second.to_string() +
                             ") lies outside the ambient product");
        if (!seen.insert(p).second)
            throw InputError("duplicate point (" + p.first.to_string() + ", " + p.second.to_string() + ")");
    }
}

PointSet2 PointSet2::full(const GridSet& a1, const GridSet& a2)
{
    std::vector<Point2> members;
    for (const auto& u : a1)
        for (const auto& v : a2) members.emplace_back(u, v);
    return PointSet2({a1, a2}, std::move(members));
}

PointSet2 PointSet2::subset(const std::vector<std::size_t>& indices) const
{
    std::vector<Point2> members;
    for (std::size_t k : indices) members.push_back(members_.at(k));
    return PointSet2(ambient_, std::move(members));
}

CurveMultiset::CurveMultiset(std::vector<CurveEntry> entries) : entries_(std::move(entries))
{
    for (const auto& e : entries_) {
        if (e.multiplicity == 0) throw InputError("curve multiplicities must be positive");
    }
}

std::uint64_t CurveMultiset::total() const
{
    std::uint64_t t = 0;
    for (const auto& e : entries_) t += e.multiplicity;
    return t;
}

int CurveMultiset::max_degree() const
{
    int d = 0;
    for (const auto& e : entries_) d = std::max(d, e.curve.degree());
    return d;
}

std::uint64_t incidence_count(const PointSet2& pts, const CurveMultiset& curves)
{
    auto on = membership(pts, curves);
    std::uint64_t total = 0;
    for (std::size_t e = 0; e < on.size(); ++e) total += on[e].size() * curves.entries()[e].multiplicity;
    return total;
}

MultiplicityVerdict bounded_multiplicity_check(const PointSet2& pts, const CurveMultiset& curves, std::uint64_t lambda,
                                               std::uint64_t mu)
{
    return verdict_from(curves, conflict_graphs(pts, curves, mu), lambda);
}

MultiplicityError::MultiplicityError(MultiplicityVerdict verdict)
    : InputError(describe(verdict)), verdict_(std::move(verdict))
{
}

MultiplicityPartition multiplicity_partition(const PointSet2& pts, const CurveMultiset& curves, std::uint64_t lambda,
                                             std::uint64_t mu)
{
    ConflictGraphs g = conflict_graphs(pts, curves, mu);
    MultiplicityVerdict verdict = verdict_from(curves, g, lambda);
    if (!verdict.holds) throw MultiplicityError(std::move(verdict));
    const auto& entries = curves.entries();
    MultiplicityPartition out;

    // Curve copies, decreasing degree, ties by (entry, copy).
    std::vector<CurveCopy> order;
    std::vector<std::uint64_t> entry_degree(entries.size());
    for (std::size_t e = 0; e < entries.size(); ++e) {
        entry_degree[e] = copy_degree(curves, g, e);
        for (std::size_t k = 0; k < entries[e].multiplicity; ++k) order.push_back({e, k});
    }
    std::stable_sort(order.begin(), order.end(), [&](const CurveCopy& a, const CurveCopy& b) {
        return entry_degree[a.entry] > entry_degree[b.entry];
    });
    constexpr std::size_t kNone = static_cast<std::size_t>(-1);
    std::vector<std::vector<std::size_t>> color(entries.size());
    for (std::size_t e = 0; e < entries.size(); ++e) color[e].assign(entries[e].multiplicity, kNone);
    for (const auto& v : order) {
        std::vector<char> used(lambda + 2, 0);
        auto mark = [&](std::size_t c) {
            if (c != kNone && c < used.size()) used[c] = 1;
        };
        for (std::size_t c : color[v.entry]) mark(c);
        for (std::size_t f : g.curve_adj[v.entry])
            for (std::size_t c : color[f]) mark(c);
        std::size_t c = smallest_free(used);
        ensure_invariant(c <= lambda, "greedy coloring needed more than lambda + 1 curve classes");
        color[v.entry][v.copy] = c;
        if (out.curve_classes.size() <= c) out.curve_classes.resize(c + 1);
        out.curve_classes[c].push_back(v);
    }
    for (auto& cls : out.curve_classes) std::sort(cls.begin(), cls.end());

    std::vector<std::size_t> porder(pts.size());
    std::iota(porder.begin(), porder.end(), std::size_t{0});
    std::stable_sort(porder.begin(), porder.end(),
                     [&](std::size_t a, std::size_t b) { return g.point_adj[a].size() > g.point_adj[b].size(); });
    std::vector<std::size_t> pcolor(pts.size(), kNone);
    for (std::size_t p : porder) {
        std::vector<char> used(lambda + 2, 0);
        for (std::size_t q : g.point_adj[p])
            if (pcolor[q] != kNone && pcolor[q] < used.size()) used[pcolor[q]] = 1;
        std::size_t c = smallest_free(used);
        ensure_invariant(c <= lambda, "greedy coloring needed more than lambda + 1 point classes");
        pcolor[p] = c;
        if (out.point_classes.size() <= c) out.point_classes.resize(c + 1);
        out.point_classes[c].push_back(p);
    }
    for (auto& cls : out.point_classes) std::sort(cls.begin(), cls.end());

    // Within a class no two members may conflict.
    for (std::size_t p = 0; p < pts.size(); ++p)
        for (std::size_t q : g.point_adj[p]) ensure_invariant(pcolor[p] != pcolor[q], "point class with a conflict");
    for (std::size_t e = 0; e < entries.size(); ++e) {
        std::set<std::size_t> own(color[e].begin(), color[e].end());
        ensure_invariant(own.size() == color[e].size(), "copies of one curve share a class");
        for (std::size_t f : g.curve_adj[e])
            for (std::size_t c : color[f]) ensure_invariant(!own.count(c), "curve class with a conflict");
    }
    return out;
}

CurveMultiset curve_class(const CurveMultiset& curves, const std::vector<CurveCopy>& copies)
{
    std::vector<std::size_t> count(curves.num_entries(), 0);
    for (const auto& c : copies) {
        if (c.entry >= curves.num_entries() || c.copy >= curves.entries()[c.entry].multiplicity)
            throw InputError("curve copy out of range");
        ++count[c.entry];
    }
    std::vector<CurveEntry> entries;
    for (std::size_t e = 0; e < count.size(); ++e) {
        if (count[e] > 0) entries.push_back({curves.entries()[e].curve, count[e]});
    }
    return CurveMultiset(std::move(entries));
}

IncidenceReport incidence_bound_report(const PointSet2& pts, const CurveMultiset& curves, int delta,
                                       std::uint64_t lambda, std::uint64_t mu)
{
    IncidenceReport r;
    r.I = incidence_count(pts, curves);
    r.trivial_bound = pts.size() * curves.total();
    ensure_invariant(r.I <= r.trivial_bound, "incidence count exceeds |points| * |curves|");

    const double d = delta, l = static_cast<double>(lambda), m = static_cast<double>(mu);
    const double P = static_cast<double>(pts.ambient_size());
    const double G = static_cast<double>(curves.total());
    const double main = std::pow(d, 4.0 / 3.0) * std::cbrt(m) * std::pow(P, 2.0 / 3.0) * std::pow(G, 2.0 / 3.0);
    r.thm41_reference = main + m * P + std::pow(d, 4.0) * G;
    r.thm43_reference = std::pow(l, 4.0 / 3.0) * main + l * l * m * P + std::pow(d, 4.0) * l * G;

    try {
        auto part = multiplicity_partition(pts, curves, lambda, mu);
        r.classes_points = part.point_classes.size();
        r.classes_curves = part.curve_classes.size();
    } catch (const MultiplicityError&) {
    }
    return r;
}

} // namespace eszlab
