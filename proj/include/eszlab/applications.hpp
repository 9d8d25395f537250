#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "eszlab/errors.hpp"
#include "eszlab/gauss_rat.hpp"
#include "eszlab/mpoly.hpp"

namespace eszlab {

struct PlanePoint {
    GaussRat x, y;
    friend auto operator<=>(const PlanePoint&, const PlanePoint&) = default;
    friend bool operator==(const PlanePoint&, const PlanePoint&) = default;
};

// Points with exact coordinates, optionally tied to a curve in (x, y) that
// every point must satisfy. Duplicates are rejected.
class CurvePointSet {
public:
    explicit CurvePointSet(std::vector<PlanePoint> points, std::optional<MPoly> curve = std::nullopt);
    // Points (t, t^3) and (t, t^2).
    static CurvePointSet on_cubic(const std::vector<GaussRat>& params);
    static CurvePointSet on_parabola(const std::vector<GaussRat>& params);

    const std::vector<PlanePoint>& points() const { return points_; }
    const std::optional<MPoly>& curve() const { return curve_; }
    std::size_t size() const { return points_.size(); }

private:
    std::vector<PlanePoint> points_;
    std::optional<MPoly> curve_;
};

// det [[1, x1, y1], [1, x2, y2], [1, x3, y3]]
GaussRat collinearity_det(const PlanePoint& p1, const PlanePoint& p2, const PlanePoint& p3);

enum class CensusEngine { brute_force, slopes };

// Ordered triples of pairwise distinct collinear points in s1 x s2 x s3.
std::uint64_t collinear_triples(const CurvePointSet& s1, const CurvePointSet& s2, const CurvePointSet& s3,
                                CensusEngine engine = CensusEngine::slopes);
// Ordered quadruples of pairwise distinct points of s on one line.
std::uint64_t collinear_quadruples(const CurvePointSet& s, CensusEngine engine = CensusEngine::slopes);
// Distinct directions spanned by pairs of distinct points; needs >= 2 points.
std::uint64_t directions_count(const CurvePointSet& s);

struct Census {
    std::uint64_t triples_ordered = 0;
    std::uint64_t quadruples_ordered = 0;
    std::uint64_t directions = 0;
};
Census census(const CurvePointSet& s);

// Relation F(a, b, c) = 0 between the squared distances a, b, c from a
// query point to p1, p2, p3: a quadratic scaled by (2 Delta)^2 for a
// triangle with doubled signed area Delta, a monic linear form when the
// points are collinear.
MPoly distance_triple_poly(const PlanePoint& p1, const PlanePoint& p2, const PlanePoint& p3);

// Parameter of the third intersection of y = x^3 with the line through the
// points with parameters t1, t2 (the tangent when t1 = t2).
GaussRat third_intersection_cubic(const GaussRat& t1, const GaussRat& t2);

struct CantileverPoint {
    int role = 0;  // 1, 2, 3
    GaussRat label;
    GaussRat parameter;
    PlanePoint point;
    int step = 0;  // 0 for the three inputs
};

struct Cantilever {
    std::vector<CantileverPoint> points;
    // Indices into points of each constructed collinear triple.
    std::vector<std::array<std::size_t, 3>> triples;
};

class CantileverCollision : public InputError {
public:
    CantileverCollision(int step, const std::string& what) : InputError(what), step_(step) {}
    int step() const { return step_; }

private:
    int step_;
};

// Cantilever on y = x^3 from p1, p3 (labels 0) and q (label 1); each step
// adds one point by the chord rule.
Cantilever cantilever_build(const GaussRat& t_p1, const GaussRat& t_p3, const GaussRat& t_q, int steps);

} // namespace eszlab
