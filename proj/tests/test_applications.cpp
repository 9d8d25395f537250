#include <random>
#include <set>

#include "doctest.h"

#include "eszlab/applications.hpp"
#include "eszlab/errors.hpp"
#include "test_support.hpp"

using namespace eszlab;
using eszlab::testing::Q;

namespace {

PlanePoint pt(long x, long y)
{
    return {GaussRat(x), GaussRat(y)};
}

std::vector<GaussRat> ints(std::initializer_list<long> values)
{
    std::vector<GaussRat> out;
    for (long v : values) out.emplace_back(v);
    return out;
}

// Ordered triples of distinct parameters summing to zero.
std::uint64_t slope_sum_oracle(const std::vector<GaussRat>& a, const std::vector<GaussRat>& b,
                               const std::vector<GaussRat>& c)
{
    std::uint64_t n = 0;
    for (const auto& s : a)
        for (const auto& t : b)
            for (const auto& u : c) n += s != t && s != u && t != u && (s + t + u).is_zero();
    return n;
}

} // namespace

TEST_CASE("collinearity_det examples")
{
    CHECK(collinearity_det(pt(0, 0), pt(1, 1), pt(2, 2)).is_zero());
    CHECK(collinearity_det(pt(0, 0), pt(1, 0), pt(0, 1)) == GaussRat(1));
    CHECK(collinearity_det(pt(3, 5), pt(3, 5), pt(-1, 7)).is_zero());
    CHECK(collinearity_det(pt(0, 0), pt(0, 1), pt(1, 0)) == GaussRat(-1));
}

TEST_CASE("CurvePointSet validation")
{
    CHECK_THROWS_AS(CurvePointSet({pt(1, 1), pt(1, 1)}), InputError);
    CHECK_THROWS_AS(CurvePointSet({pt(1, 2)}, parse_poly("y - x^2", {"x", "y"})), InputError);
    CHECK(CurvePointSet::on_cubic(ints({2})).points()[0] == pt(2, 8));
}

TEST_CASE("collinear_triples examples")
{
    auto cubic = CurvePointSet::on_cubic(ints({-2, -1, 0, 1, 2}));
    for (auto engine : {CensusEngine::brute_force, CensusEngine::slopes})
        CHECK(collinear_triples(cubic, cubic, cubic, engine) == 12);

    auto parabola = CurvePointSet::on_parabola(ints({-3, 0, 1, 5, 7}));
    CHECK(collinear_triples(parabola, parabola, parabola) == 0);

    CurvePointSet axis({pt(0, 0), pt(1, 0), pt(5, 0)});
    CHECK(collinear_triples(axis, axis, axis) == 6);
    CHECK(collinear_triples(axis, axis, axis, CensusEngine::brute_force) == 6);
}

TEST_CASE("collinear_quadruples examples")
{
    CurvePointSet axis({pt(0, 0), pt(1, 0), pt(5, 0), pt(-2, 0)});
    CHECK(collinear_quadruples(axis) == 24);
    CHECK(collinear_quadruples(axis, CensusEngine::brute_force) == 24);
    auto cubic = CurvePointSet::on_cubic(ints({-3, -2, -1, 0, 1, 2, 3}));
    CHECK(collinear_quadruples(cubic) == 0);
    CHECK(collinear_quadruples(cubic, CensusEngine::brute_force) == 0);
    CHECK(collinear_quadruples(CurvePointSet({pt(0, 0), pt(1, 0), pt(2, 0)})) == 0);
}

TEST_CASE("directions_count examples")
{
    CHECK(directions_count(CurvePointSet::on_parabola(ints({0, 1, 2, 3, 4}))) == 7);
    CHECK(directions_count(CurvePointSet({pt(0, 0), pt(1, 2), pt(2, 4), pt(3, 6), pt(4, 8)})) == 1);
    CHECK(directions_count(CurvePointSet({pt(0, 0), pt(0, 3)})) == 1);
    CHECK(directions_count(CurvePointSet({pt(0, 0), pt(0, 3), pt(1, 3)})) == 3);
    CHECK_THROWS_AS(directions_count(CurvePointSet({pt(0, 0)})), InputError);

    auto c = census(CurvePointSet({pt(0, 0), pt(1, 0), pt(5, 0), pt(-2, 0)}));
    CHECK(c.triples_ordered == 24);
    CHECK(c.quadruples_ordered == 24);
    CHECK(c.directions == 1);
}

TEST_CASE("slope-sum model on the cubic")
{
    std::mt19937_64 gen(31);
    std::uniform_int_distribution<int> v(-6, 6);
    for (int trial = 0; trial < 20; ++trial) {
        auto draw = [&](std::size_t n) {
            std::set<long> s;
            while (s.size() < n) s.insert(v(gen));
            std::vector<GaussRat> out;
            for (long t : s) out.emplace_back(t);
            return out;
        };
        auto a = draw(5), b = draw(6), c = draw(4);
        auto sa = CurvePointSet::on_cubic(a), sb = CurvePointSet::on_cubic(b), sc = CurvePointSet::on_cubic(c);
        std::uint64_t expected = slope_sum_oracle(a, b, c);
        CHECK(collinear_triples(sa, sb, sc, CensusEngine::brute_force) == expected);
        CHECK(collinear_triples(sa, sb, sc, CensusEngine::slopes) == expected);

        auto pa = CurvePointSet::on_parabola(a);
        CHECK(collinear_triples(pa, pa, pa) == 0);
    }
}

TEST_CASE("slope engine agrees with brute force on grid points")
{
    std::mt19937_64 gen(32);
    std::uniform_int_distribution<int> v(-2, 2);
    for (int trial = 0; trial < 25; ++trial) {
        auto draw = [&](std::size_t n) {
            std::set<PlanePoint> s;
            while (s.size() < n) s.insert(pt(v(gen), v(gen)));
            return CurvePointSet(std::vector<PlanePoint>(s.begin(), s.end()));
        };
        auto a = draw(6), b = draw(7), c = draw(5);
        CHECK(collinear_triples(a, b, c, CensusEngine::slopes) ==
              collinear_triples(a, b, c, CensusEngine::brute_force));
        CHECK(collinear_quadruples(b, CensusEngine::slopes) == collinear_quadruples(b, CensusEngine::brute_force));
    }
}

TEST_CASE("distance_triple_poly examples")
{
    const std::vector<std::string> abc{"a", "b", "c"};
    auto tri = distance_triple_poly(pt(0, 0), pt(1, 0), pt(0, 1));
    CHECK(tri == parse_poly("(a - b + 1)^2 + (a - c + 1)^2 - 4*a", abc));
    auto line = distance_triple_poly(pt(0, 0), pt(1, 0), pt(2, 0));
    CHECK(line == parse_poly("a - 2*b + c - 2", abc));
    CHECK_THROWS_AS(distance_triple_poly(pt(0, 0), pt(0, 0), pt(1, 1)), InputError);
}

TEST_CASE("distance_triple_poly vanishes at squared distances of query points")
{
    std::mt19937_64 gen(33);
    auto sq = [](const PlanePoint& p, const PlanePoint& q) {
        GaussRat dx = p.x - q.x, dy = p.y - q.y;
        return dx * dx + dy * dy;
    };
    using Triple = std::array<PlanePoint, 3>;
    const std::vector<Triple> anchors{
        Triple{pt(0, 0), pt(1, 0), pt(0, 1)},
        Triple{pt(-2, 3), pt(5, 1), pt(4, -7)},
        Triple{PlanePoint{Q("1/2"), Q("1/3")}, PlanePoint{Q("-3/4"), Q("2")}, PlanePoint{Q("5"), Q("-1/5")}},
        Triple{pt(0, 0), pt(1, 1), pt(3, 3)},
        Triple{pt(2, 1), pt(2, 4), pt(2, -6)},
    };
    int checked = 0;
    for (const auto& [p1, p2, p3] : anchors) {
        MPoly F = distance_triple_poly(p1, p2, p3);
        for (int k = 0; k < 20; ++k) {
            PlanePoint q{testing::random_rat(gen), testing::random_rat(gen)};
            CHECK(F.eval_full(std::vector<GaussRat>{sq(q, p1), sq(q, p2), sq(q, p3)}).is_zero());
            ++checked;
        }
    }
    CHECK(checked == 100);
}

TEST_CASE("third_intersection_cubic examples")
{
    CHECK(third_intersection_cubic(GaussRat(1), GaussRat(2)) == GaussRat(-3));
    CHECK(third_intersection_cubic(GaussRat(1), GaussRat(-1)) == GaussRat(0));
    CHECK(third_intersection_cubic(GaussRat(1), GaussRat(1)) == GaussRat(-2));
    GaussRat t = third_intersection_cubic(Q("1/2"), Q("i"));
    CHECK(collinearity_det({Q("1/2"), Q("1/8")}, {Q("i"), Q("-i")}, {t, t * t * t}).is_zero());
}

TEST_CASE("cantilever_build examples")
{
    auto c0 = cantilever_build(GaussRat(1), GaussRat(2), Q("1/2"), 0);
    CHECK(c0.points.size() == 3);
    CHECK(c0.triples.empty());

    auto c = cantilever_build(GaussRat(1), GaussRat(2), Q("1/2"), 6);
    REQUIRE(c.points.size() == 9);
    const std::vector<long> labels{-1, -1, 2, -2, -2, 4};
    for (std::size_t k = 0; k < labels.size(); ++k) {
        CHECK(c.points[3 + k].label == GaussRat(labels[k]));
        CHECK(c.points[3 + k].step == static_cast<int>(k + 1));
    }
    CHECK(c.points[3].role == 3);
    CHECK(c.points[4].role == 1);
    CHECK(c.points[5].role == 2);
    for (const auto& p : c.points) CHECK(p.point.y == p.point.x * p.point.x * p.point.x);
    REQUIRE(c.triples.size() == 6);
    for (const auto& [i, j, l] : c.triples) {
        CHECK(collinearity_det(c.points[i].point, c.points[j].point, c.points[l].point).is_zero());
        CHECK((c.points[i].label + c.points[j].label + c.points[l].label).is_zero());
    }

    CHECK_THROWS_AS(cantilever_build(GaussRat(1), GaussRat(2), GaussRat(-3), 2), CantileverCollision);
    try {
        cantilever_build(GaussRat(1), GaussRat(2), GaussRat(-2), 3);
        FAIL("expected a collision");
    } catch (const CantileverCollision& e) {
        CHECK(e.step() == 1);
    }
    CHECK_THROWS_AS(cantilever_build(GaussRat(1), GaussRat(2), GaussRat(5), -1), InputError);
}
