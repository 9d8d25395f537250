#include "eszlab/applications.hpp"

#include <set>
#include <unordered_map>
#include <unordered_set>

#include "eszlab/poly_parse.hpp"

namespace eszlab {

namespace {

struct Direction {
    bool vertical = false;
    GaussRat slope;
    friend bool operator==(const Direction&, const Direction&) = default;
};

struct DirectionHash {
    std::size_t operator()(const Direction& d) const { return d.vertical ? 0x51ED27 : d.slope.hash(); }
};

Direction direction(const PlanePoint& p, const PlanePoint& q)
{
    GaussRat dx = q.x - p.x;
    if (dx.is_zero()) return {true, GaussRat(0)};
    return {false, (q.y - p.y) / dx};
}

struct PointHash {
    std::size_t operator()(const PlanePoint& p) const { return p.x.hash() * 0x9E3779B97F4A7C15ULL ^ p.y.hash(); }
};

std::uint64_t triples_brute(const std::vector<PlanePoint>& a, const std::vector<PlanePoint>& b,
                            const std::vector<PlanePoint>& c)
{
    std::uint64_t total = 0;
    const long long n = static_cast<long long>(a.size());
#pragma omp parallel for reduction(+ : total) schedule(dynamic)
    for (long long i = 0; i < n; ++i) {
        const auto& p = a[static_cast<std::size_t>(i)];
        for (const auto& q : b) {
            if (q == p) continue;
            for (const auto& r : c) {
                if (r == p || r == q) continue;
                if (collinearity_det(p, q, r).is_zero()) ++total;
            }
        }
    }
    return total;
}

std::uint64_t triples_slopes(const std::vector<PlanePoint>& a, const std::vector<PlanePoint>& b,
                             const std::vector<PlanePoint>& c)
{
    std::unordered_set<PlanePoint, PointHash> in_c(c.begin(), c.end());
    std::uint64_t total = 0;
    const long long n = static_cast<long long>(a.size());
#pragma omp parallel for reduction(+ : total) schedule(dynamic)
    for (long long i = 0; i < n; ++i) {
        const auto& p = a[static_cast<std::size_t>(i)];
        std::unordered_map<Direction, std::uint64_t, DirectionHash> rays;
        for (const auto& r : c) {
            if (r != p) ++rays[direction(p, r)];
        }
        for (const auto& q : b) {
            if (q == p) continue;
            auto it = rays.find(direction(p, q));
            if (it == rays.end()) continue;
            total += it->second - (in_c.count(q) ? 1 : 0);
        }
    }
    return total;
}

std::uint64_t quadruples_brute(const std::vector<PlanePoint>& s)
{
    std::uint64_t total = 0;
    const long long n = static_cast<long long>(s.size());
#pragma omp parallel for reduction(+ : total) schedule(dynamic)
    for (long long i = 0; i < n; ++i) {
        const auto& p = s[static_cast<std::size_t>(i)];
        for (const auto& q : s) {
            if (q == p) continue;
            for (const auto& r : s) {
                if (r == p || r == q || !collinearity_det(p, q, r).is_zero()) continue;
                for (const auto& t : s) {
                    if (t == p || t == q || t == r) continue;
                    if (collinearity_det(p, q, t).is_zero()) ++total;
                }
            }
        }
    }
    return total;
}

std::uint64_t quadruples_slopes(const std::vector<PlanePoint>& s)
{
    std::uint64_t total = 0;
    const long long n = static_cast<long long>(s.size());
#pragma omp parallel for reduction(+ : total) schedule(dynamic)
    for (long long i = 0; i < n; ++i) {
        const auto& p = s[static_cast<std::size_t>(i)];
        std::unordered_map<Direction, std::uint64_t, DirectionHash> rays;
        for (const auto& q : s) {
            if (q != p) ++rays[direction(p, q)];
        }
        for (const auto& [dir, m] : rays) {
            if (m >= 3) total += m * (m - 1) * (m - 2);
        }
    }
    return total;
}

PlanePoint cubic_point(const GaussRat& t)
{
    return {t, t * t * t};
}

} // namespace

CurvePointSet::CurvePointSet(std::vector<PlanePoint> points, std::optional<MPoly> curve)
    : points_(std::move(points)), curve_(std::move(curve))
{
    std::set<PlanePoint> seen;
    for (const auto& p : points_) {
        if (!seen.insert(p).second)
            throw InputError("duplicate point (" + p.x.to_string() + ", " + p.y.to_string() + ")");
    }
    if (curve_) {
        *curve_ = curve_->with_vars({"x", "y"});
        for (const auto& p : points_) {
            if (!curve_->eval_full(std::vector<GaussRat>{p.x, p.y}).is_zero())
                throw InputError("point (" + p.x.to_string() + ", " + p.y.to_string() + ") is not on the curve");
        }
    }
}

CurvePointSet CurvePointSet::on_cubic(const std::vector<GaussRat>& params)
{
    std::vector<PlanePoint> pts;
    for (const auto& t : params) pts.push_back(cubic_point(t));
    return CurvePointSet(std::move(pts), parse_poly("y - x^3", {"x", "y"}));
}

CurvePointSet CurvePointSet::on_parabola(const std::vector<GaussRat>& params)
{
    std::vector<PlanePoint> pts;
    for (const auto& t : params) pts.push_back({t, t * t});
    return CurvePointSet(std::move(pts), parse_poly("y - x^2", {"x", "y"}));
}

GaussRat collinearity_det(const PlanePoint& p1, const PlanePoint& p2, const PlanePoint& p3)
{
    return (p2.x - p1.x) * (p3.y - p1.y) - (p2.y - p1.y) * (p3.x - p1.x);
}

std::uint64_t collinear_triples(const CurvePointSet& s1, const CurvePointSet& s2, const CurvePointSet& s3,
                                CensusEngine engine)
{
    if (engine == CensusEngine::brute_force) return triples_brute(s1.points(), s2.points(), s3.points());
    return triples_slopes(s1.points(), s2.points(), s3.points());
}

std::uint64_t collinear_quadruples(const CurvePointSet& s, CensusEngine engine)
{
    if (engine == CensusEngine::brute_force) return quadruples_brute(s.points());
    return quadruples_slopes(s.points());
}

std::uint64_t directions_count(const CurvePointSet& s)
{
    if (s.size() < 2) throw InputError("directions_count needs at least two points");
    std::unordered_set<Direction, DirectionHash> dirs;
    const auto& pts = s.points();
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j) dirs.insert(direction(pts[i], pts[j]));
    return dirs.size();
}

Census census(const CurvePointSet& s)
{
    Census c;
    c.triples_ordered = collinear_triples(s, s, s);
    c.quadruples_ordered = collinear_quadruples(s);
    c.directions = s.size() >= 2 ? directions_count(s) : 0;
    return c;
}

MPoly distance_triple_poly(const PlanePoint& p1, const PlanePoint& p2, const PlanePoint& p3)
{
    if (p1 == p2 || p1 == p3 || p2 == p3) throw InputError("distance_triple_poly needs three distinct points");
    const std::vector<std::string> abc{"a", "b", "c"};
    const MPoly a = MPoly::variable("a", abc);
    const MPoly b = MPoly::variable("b", abc);
    const MPoly c = MPoly::variable("c", abc);
    auto sq = [](const PlanePoint& p) { return p.x * p.x + p.y * p.y; };
    // a - b = 2 (x2-x1) x + 2 (y2-y1) y + |p1|^2 - |p2|^2, likewise a - c.
    const MPoly L1 = a - b - MPoly(abc, sq(p1) - sq(p2));
    const MPoly L2 = a - c - MPoly(abc, sq(p1) - sq(p3));
    const GaussRat u2 = p2.x - p1.x, v2 = p2.y - p1.y;
    const GaussRat u3 = p3.x - p1.x, v3 = p3.y - p1.y;
    const GaussRat delta = u2 * v3 - v2 * u3;
    if (delta.is_zero()) {
        // p3 - p1 = mu (p2 - p1), so L2 = mu L1.
        GaussRat mu = !u2.is_zero() ? u3 / u2 : v3 / v2;
        return (L2 - L1 * mu).monic();
    }
    // 2 delta x = L1 v3 - L2 v2, 2 delta y = L2 u2 - L1 u3.
    const GaussRat two_delta = GaussRat(2) * delta;
    const MPoly X = L1 * v3 - L2 * v2 - MPoly(abc, two_delta * p1.x);
    const MPoly Y = L2 * u2 - L1 * u3 - MPoly(abc, two_delta * p1.y);
    return X * X + Y * Y - a * (two_delta * two_delta);
}

GaussRat third_intersection_cubic(const GaussRat& t1, const GaussRat& t2)
{
    GaussRat t3 = -t1 - t2;
    PlanePoint r = cubic_point(t3);
    ensure_invariant(r.y == r.x * r.x * r.x, "third intersection is off the cubic");
    if (t1 != t2) ensure_invariant(collinearity_det(cubic_point(t1), cubic_point(t2), r).is_zero(),
                                   "third intersection is not collinear with the chord");
    return t3;
}

Cantilever cantilever_build(const GaussRat& t_p1, const GaussRat& t_p3, const GaussRat& t_q, int steps)
{
    if (steps < 0) throw InputError("cantilever_build needs steps >= 0");
    const std::array<GaussRat, 3> base{t_p1, -t_p1 - t_p3, t_p3};
    const GaussRat scale = t_q - base[1];
    if (scale.is_zero()) throw CantileverCollision(0, "q coincides with the point p2 completing p1 and p3");

    Cantilever out;
    auto add = [&](int role, const GaussRat& label, const GaussRat& param, int step) {
        PlanePoint pt = cubic_point(param);
        for (const auto& existing : out.points) {
            if (existing.point == pt)
                throw CantileverCollision(step, "cantilever collision at step " + std::to_string(step) + ": parameter " +
                                                    param.to_string() + " repeats");
        }
        ensure_invariant(param == base[static_cast<std::size_t>(role - 1)] + scale * label,
                         "cantilever parameter disagrees with its label");
        out.points.push_back({role, label, param, pt, step});
        return out.points.size() - 1;
    };
    const std::size_t p1 = add(1, GaussRat(0), t_p1, 0);
    const std::size_t p3 = add(3, GaussRat(0), t_p3, 0);
    std::size_t c2 = add(2, GaussRat(1), t_q, 0);
    std::size_t c1 = 0, c3 = 0;

    for (int step = 1; step <= steps; ++step) {
        const GaussRat k = out.points[c2].label;
        std::array<std::size_t, 3> triple{};
        switch ((step - 1) % 3) {
        case 0:
            c3 = add(3, -k, third_intersection_cubic(t_p1, out.points[c2].parameter), step);
            triple = {p1, c2, c3};
            break;
        case 1:
            c1 = add(1, -k, third_intersection_cubic(t_p3, out.points[c2].parameter), step);
            triple = {c1, c2, p3};
            break;
        default:
            c2 = add(2, k * GaussRat(2), third_intersection_cubic(out.points[c1].parameter, out.points[c3].parameter),
                     step);
            triple = {c1, c2, c3};
            break;
        }
        const auto& [i, j, l] = triple;
        ensure_invariant(collinearity_det(out.points[i].point, out.points[j].point, out.points[l].point).is_zero(),
                         "cantilever triple is not collinear");
        ensure_invariant((out.points[i].label + out.points[j].label + out.points[l].label).is_zero(),
                         "cantilever labels do not sum to zero");
        out.triples.push_back(triple);
    }
    return out;
}

} // namespace eszlab
