#include <random>

#include "doctest.h"

#include "eszlab/curves.hpp"
#include "eszlab/errors.hpp"
#include "eszlab/poly_algo.hpp"
#include "test_support.hpp"

using namespace eszlab;
using eszlab::testing::P;
using eszlab::testing::Q;

namespace {

PlaneCurve curve(const std::string& text, std::array<std::string, 2> vars = {"z", "z'"})
{
    return PlaneCurve(vars, parse_poly(text, {vars[0], vars[1]}));
}

} // namespace

TEST_CASE("gamma_curve examples")
{
    auto g1 = gamma_curve(P("x+y+z"), Q("0"), Q("1"));
    CHECK(g1 == curve("z' - z + 1"));
    CHECK(g1.defining() == parse_poly("z - z' - 1", {"z", "z'"}));
    CHECK(g1.degree() == 1);
    CHECK_FALSE(g1.flags().is_empty);
    CHECK_FALSE(g1.flags().is_full_plane);
    CHECK_FALSE(g1.flags().contains_axis_parallel_line);

    CHECK(gamma_curve(P("z - x*y"), Q("1"), Q("2")) == curve("2*z - z'"));
    CHECK(gamma_curve(P("x+y+z"), Q("0"), Q("0")) == curve("z' - z"));

    CHECK_THROWS_AS(gamma_curve(P("y+z"), Q("0"), Q("1")), InputError);
}

TEST_CASE("dual_curve examples")
{
    std::array<std::string, 2> yy{"y", "y'"};
    CHECK(dual_curve(P("x+y+z"), Q("0"), Q("1")) == curve("y' - y + 1", yy));
    CHECK(dual_curve(P("z - x*y"), Q("1"), Q("2")) == curve("2*y - y'", yy));
    CHECK(dual_curve(P("x+y+z"), Q("0"), Q("0")) == curve("y' - y", yy));
}

TEST_CASE("gamma curve flags")
{
    // F(x, 0, z) = z*(x - 1) vanishes identically at z = 0 for x = 1 and
    // the resultant keeps a line z = 0.
    auto c = gamma_curve(P("x*y + z*(x - 1)"), Q("0"), Q("2"));
    CHECK(c.flags().contains_axis_parallel_line);

    // y = 0 kills every coefficient: F(x, 0, z) == 0.
    auto full = gamma_curve(P("y*(x + z)"), Q("0"), Q("1"));
    CHECK(full.flags().is_full_plane);
    CHECK(full.contains(Q("3"), Q("-7")));

    // Both specializations free of x: x disappears and nothing remains.
    auto empty = gamma_curve(P("x*y + z"), Q("0"), Q("0"));
    CHECK(empty.flags().is_empty);
}

TEST_CASE("PlaneCurve normalizes to a squarefree monic form")
{
    auto c = curve("(z - z')^2 * 3");
    CHECK(c.defining() == parse_poly("z - z'", {"z", "z'"}));
    CHECK(c.degree() == 1);
    CHECK(curve("0").flags().is_full_plane);
    CHECK(curve("5").flags().is_empty);
    CHECK(curve("5").degree() == 0);
    CHECK_THROWS_AS(PlaneCurve({"z", "z"}, P("z")), InputError);
}

TEST_CASE("gamma curves respect the degree bound and contain every witnessed point")
{
    std::mt19937_64 gen(99);
    std::uniform_int_distribution<int> small(-3, 3);
    int curves_checked = 0;
    for (int trial = 0; trial < 12; ++trial) {
        MPoly F = testing::random_poly(gen, {"x", "y", "z"}, trial % 3 + 1);
        if (!F.depends_on("x") || F.num_vars() != 3) continue;
        int d = F.degree();
        GaussRat y0(small(gen)), y1(small(gen));
        auto c = gamma_curve(F, y0, y1);
        CHECK(c.degree() <= d * d);
        ++curves_checked;
        if (c.flags().is_full_plane) continue;
        // Soundness: exact witnesses (x, z, z') built from roots in z.
        for (int xi = -3; xi <= 3; ++xi) {
            GaussRat x0(xi);
            MPoly f1 = F.eval({{"x", x0}, {"y", y0}});
            MPoly f2 = F.eval({{"x", x0}, {"y", y1}});
            if (f1.is_zero() || f2.is_zero() || f1.is_constant() || f2.is_constant()) continue;
            for (const auto& z0 : gaussian_rational_roots(f1).roots)
                for (const auto& z1 : gaussian_rational_roots(f2).roots) CHECK(c.contains(z0, z1));
        }
    }
    CHECK(curves_checked >= 6);
}

TEST_CASE("duality on sampled points of a gamma curve")
{
    // F linear in z: z = x^2 + 2xy - y, so exact witnesses come for free.
    MPoly F = P("z - x^2 - 2*x*y + y");
    GaussRat y0 = Q("1/2"), y1 = Q("-3");
    auto gamma = gamma_curve(F, y0, y1);
    int sampled = 0;
    for (int k = -10; k <= 10 && sampled < 20; ++k) {
        GaussRat x0 = GaussRat::from_ratio(k, 3);
        GaussRat z0 = F.eval({{"x", x0}, {"y", y0}, {"z", GaussRat(0)}}).constant_term() * GaussRat(-1);
        GaussRat z1 = F.eval({{"x", x0}, {"y", y1}, {"z", GaussRat(0)}}).constant_term() * GaussRat(-1);
        REQUIRE(gamma.contains(z0, z1));
        auto dual = dual_curve(F, z0, z1);
        CHECK(dual.contains(y0, y1));
        ++sampled;
    }
    CHECK(sampled == 20);
}

TEST_CASE("exceptional_set examples")
{
    auto e1 = exceptional_set(P("x+y+z"), Axis::y);
    CHECK(e1.values.empty());
    CHECK_FALSE(e1.residual.has_value());

    auto e2 = exceptional_set(P("x*z + y"), Axis::y);
    REQUIRE(e2.values.size() == 1);
    CHECK(e2.values[0] == GaussRat(0));

    auto e3 = exceptional_set(P("z - x*y"), Axis::y);
    REQUIRE(e3.values.size() == 1);
    CHECK(e3.values[0] == GaussRat(0));

    // Candidates off Q(i) are reported through the residual.
    auto e4 = exceptional_set(P("x*z + y^2 - 2"), Axis::y);
    CHECK(e4.values.empty());
    REQUIRE(e4.residual.has_value());
    CHECK(*e4.residual == parse_poly("y^2 - 2", {"y"}));

    // A factor shared by all z-coefficients makes the system solvable for
    // every y.
    auto e5 = exceptional_set(P("(x - y)*(z + 1)"), Axis::y);
    CHECK(e5.residual.has_value());

    auto e6 = exceptional_set(P("x*y + z"), Axis::z);
    REQUIRE(e6.values.size() == 1);
    CHECK(e6.values[0] == GaussRat(0));
}

TEST_CASE("gamma_family drops exceptional pairs and the diagonal")
{
    GridSet B = GridSet::integers(0, 3);
    auto fam = gamma_family(P("x+y+z"), B);
    CHECK(fam.curves.size() == 6);
    CHECK(fam.index.size() == 6);
    CHECK(fam.exceptional.empty());

    auto fam2 = gamma_family(P("z - x*y"), GridSet::integers(-1, 3));
    CHECK(fam2.curves.size() == 2);
    CHECK(fam2.exceptional.size() == 4);
    for (const auto& e : fam2.exceptional) CHECK(e.reason == ExceptionReason::exceptional_value);
}

TEST_CASE("popular_components examples")
{
    std::array<std::string, 2> xy{"x", "y"};
    std::vector<PlaneCurve> fam{curve("(x-1)*y", xy), curve("(x-1)*(y-1)", xy), curve("(x-1)*(x+y)", xy)};
    auto r = popular_components(fam, 1);
    REQUIRE(r.components.size() == 1);
    CHECK(r.components[0].defining == parse_poly("x - 1", {"x", "y"}));
    CHECK(r.components[0].multiplicity == 3);
    CHECK(r.threshold == 2);
    CHECK(r.components[0].popular);
    CHECK_FALSE(popular_components(fam, 2).components[0].popular);
    CHECK(popular_components(fam, 2, 3).components[0].popular);

    std::vector<PlaneCurve> coprime{curve("x", xy), curve("y", xy), curve("x + y - 1", xy)};
    CHECK(popular_components(coprime, 1).components.empty());

    std::vector<PlaneCurve> lines;
    for (auto [a, b] : std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {0, 3}})
        lines.push_back(gamma_curve(P("x+y+z"), GaussRat(a), GaussRat(b)));
    CHECK(popular_components(lines, 1).components.empty());
    CHECK_FALSE(lines[0] == lines[1]);
}

TEST_CASE("bezout_check examples")
{
    auto r1 = bezout_check(curve("z' - z + 1"), curve("z' - z + 2"));
    CHECK_FALSE(r1.common_component);
    REQUIRE(r1.points.has_value());
    CHECK(r1.points->empty());

    auto r2 = bezout_check(curve("z' - z"), curve("z' + z"));
    CHECK_FALSE(r2.common_component);
    REQUIRE(r2.points.has_value());
    REQUIRE(r2.points->size() == 1);
    CHECK((*r2.points)[0] == std::make_pair(GaussRat(0), GaussRat(0)));

    auto f = parse_poly("z^2 + z'", {"z", "z'"});
    auto r3 = bezout_check(PlaneCurve({"z", "z'"}, f), PlaneCurve({"z", "z'"}, f * parse_poly("z - 3", {"z"})));
    CHECK(r3.common_component);
    CHECK_FALSE(r3.points.has_value());

    // Conic against line: x^2 + y^2 = 25 and y = x + 1 meet at (3,4), (-4,-3).
    std::array<std::string, 2> xy{"x", "y"};
    auto r4 = bezout_check(curve("x^2 + y^2 - 25", xy), curve("y - x - 1", xy));
    REQUIRE(r4.points.has_value());
    CHECK(r4.points->size() == 2);

    auto r5 = bezout_check(curve("x^2 + y^2 - 25", xy), curve("y - x - 1", xy),
                           std::array<GridSet, 2>{GridSet::integers(0, 5), GridSet::integers(0, 5)});
    REQUIRE(r5.points.has_value());
    CHECK(r5.points->size() == 1);

    // A vertical line against a parabola.
    auto r6 = bezout_check(curve("x - 2", xy), curve("y - x^2", xy));
    REQUIRE(r6.points.has_value());
    REQUIRE(r6.points->size() == 1);
    CHECK((*r6.points)[0] == std::make_pair(GaussRat(2), GaussRat(4)));

    CHECK_THROWS_AS(bezout_check(curve("x", xy), curve("z")), InputError);
}

TEST_CASE("bezout bound on random curve pairs")
{
    std::mt19937_64 gen(5);
    std::array<std::string, 2> xy{"x", "y"};
    for (int trial = 0; trial < 15; ++trial) {
        MPoly a = testing::random_poly(gen, {"x", "y"}, 2);
        MPoly b = testing::random_poly(gen, {"x", "y"}, 2);
        if (a.is_constant() || b.is_constant()) continue;
        PlaneCurve c1(xy, a), c2(xy, b);
        auto r = bezout_check(c1, c2, std::array<GridSet, 2>{GridSet::integers(-6, 13), GridSet::integers(-6, 13)});
        if (r.points) CHECK(static_cast<int>(r.points->size()) <= c1.degree() * c2.degree());
    }
}

TEST_CASE("family_common_degree examples")
{
    auto r1 = family_common_degree({curve("z' - z"), PlaneCurve({"z", "z'"}, parse_poly("2*z' - 2*z", {"z", "z'"}))});
    CHECK(r1.common_factor == parse_poly("z - z'", {"z", "z'"}));
    CHECK(r1.degree == 1);

    auto r2 = family_common_degree({curve("z' - z"), curve("z' + z"), curve("z' - 2*z")});
    CHECK(r2.degree == 1);
    REQUIRE(r2.points.size() == 1);
    CHECK(r2.points[0] == std::make_pair(GaussRat(0), GaussRat(0)));

    auto r3 = family_common_degree({curve("z' - z + 1"), curve("z' - z + 2"), curve("z' - z + 3")});
    CHECK(r3.degree == 0);
    CHECK(r3.points.empty());

    // Pairwise common factors but no common factor overall; the members
    // share (0, 0) and (1, 0).
    auto r4 = family_common_degree({curve("z*z'"), curve("z'*(z - 1)"), curve("z*(z - 1)")});
    CHECK(r4.common_factor.is_constant());
    CHECK(r4.points.size() == 2);

    CHECK_THROWS_AS(family_common_degree({curve("z")}), InputError);
}
