#include <cmath>
#include <random>
#include <set>

#include "doctest.h"

#include "eszlab/errors.hpp"
#include "eszlab/incidence.hpp"
#include "eszlab/poly_parse.hpp"

using namespace eszlab;

namespace {

const std::array<std::string, 2> kXY{"x", "y"};

PlaneCurve line(const std::string& text)
{
    return PlaneCurve(kXY, parse_poly(text, {"x", "y"}));
}

CurveMultiset multiset(const std::vector<std::pair<std::string, std::size_t>>& spec)
{
    std::vector<CurveEntry> entries;
    for (const auto& [text, mult] : spec) entries.push_back({line(text), mult});
    return CurveMultiset(std::move(entries));
}

// Brute-force oracle: curve copies expanded, conflicts counted directly.
struct Oracle {
    std::vector<std::size_t> copy_entry;
    std::vector<std::vector<bool>> on;  // copy x point

    Oracle(const PointSet2& pts, const CurveMultiset& curves)
    {
        for (std::size_t e = 0; e < curves.num_entries(); ++e) {
            const auto& entry = curves.entries()[e];
            std::vector<bool> row;
            for (const auto& [u, v] : pts.members()) row.push_back(entry.curve.contains(u, v));
            for (std::size_t k = 0; k < entry.multiplicity; ++k) {
                copy_entry.push_back(e);
                on.push_back(row);
            }
        }
    }

    std::uint64_t incidences() const
    {
        std::uint64_t n = 0;
        for (const auto& row : on)
            for (bool b : row) n += b;
        return n;
    }

    bool curves_conflict(std::size_t a, std::size_t b, std::uint64_t mu) const
    {
        if (copy_entry[a] == copy_entry[b]) return true;
        std::uint64_t shared = 0;
        for (std::size_t p = 0; p < on[a].size(); ++p) shared += on[a][p] && on[b][p];
        return shared > mu;
    }

    bool points_conflict(std::size_t p, std::size_t q, std::uint64_t mu) const
    {
        std::uint64_t common = 0;
        for (const auto& row : on) common += row[p] && row[q];
        return common > mu;
    }

    // Largest conflict degree over both graphs.
    std::uint64_t max_degree(std::uint64_t mu) const
    {
        std::uint64_t best = 0;
        for (std::size_t a = 0; a < on.size(); ++a) {
            std::uint64_t d = 0;
            for (std::size_t b = 0; b < on.size(); ++b) d += a != b && curves_conflict(a, b, mu);
            best = std::max(best, d);
        }
        const std::size_t n = on.empty() ? 0 : on[0].size();
        for (std::size_t p = 0; p < n; ++p) {
            std::uint64_t d = 0;
            for (std::size_t q = 0; q < n; ++q) d += p != q && points_conflict(p, q, mu);
            best = std::max(best, d);
        }
        return best;
    }
};

} // namespace

TEST_CASE("PointSet2 validation")
{
    GridSet a = GridSet::integers(0, 2);
    CHECK(PointSet2::full(a, a).size() == 4);
    CHECK(PointSet2::full(a, a).ambient_size() == 4);
    CHECK_THROWS_AS(PointSet2({a, a}, {{GaussRat(5), GaussRat(0)}}), InputError);
    CHECK_THROWS_AS(PointSet2({a, a}, {{GaussRat(0), GaussRat(0)}, {GaussRat(0), GaussRat(0)}}), InputError);
    CHECK_THROWS_AS(CurveMultiset({{line("x"), 0}}), InputError);
}

TEST_CASE("incidence_count examples")
{
    auto grid = PointSet2::full(GridSet::integers(0, 2), GridSet::integers(0, 2));
    CHECK(incidence_count(grid, multiset({{"x - y", 1}, {"x + y - 1", 1}})) == 4);
    CHECK(incidence_count(grid, CurveMultiset()) == 0);
    CHECK(incidence_count(grid, multiset({{"x - y", 3}})) == 6);

    std::vector<CurveEntry> mixed{{line("x"), 1}, {PlaneCurve({"z", "z'"}, parse_poly("z", {"z", "z'"})), 1}};
    CHECK_THROWS_AS(incidence_count(grid, CurveMultiset(mixed)), InputError);
}

TEST_CASE("bounded_multiplicity_check examples")
{
    auto grid2 = PointSet2::full(GridSet::integers(0, 2), GridSet::integers(0, 2));
    auto twins = bounded_multiplicity_check(grid2, multiset({{"x - y", 1}, {"y - x", 1}}), 0, 1);
    CHECK_FALSE(twins.holds);
    REQUIRE(twins.curve_violations.size() == 2);
    for (const auto& v : twins.curve_violations) CHECK(v.conflicts == 1);
    CHECK(bounded_multiplicity_check(grid2, multiset({{"x - y", 1}, {"y - x", 1}}), 1, 1).holds);

    auto grid3 = PointSet2::full(GridSet::integers(0, 3), GridSet::integers(0, 3));
    auto conics = multiset({{"x^2 - y", 1}, {"y^2 - x", 1}, {"x*y - 1", 1}, {"x^2 + y^2 - 4", 1}});
    CHECK(bounded_multiplicity_check(grid3, conics, 0, 4).holds);

    for (std::uint64_t lambda : {0, 3})
        for (std::uint64_t mu : {0, 2}) CHECK(bounded_multiplicity_check(grid3, CurveMultiset(), lambda, mu).holds);
}

TEST_CASE("multiplicity_partition examples")
{
    auto grid2 = PointSet2::full(GridSet::integers(0, 2), GridSet::integers(0, 2));

    auto tripled = multiset({{"x - y", 3}});
    auto part = multiplicity_partition(grid2, tripled, 2, 1);
    REQUIRE(part.curve_classes.size() == 3);
    for (const auto& cls : part.curve_classes) CHECK(cls.size() == 1);
    CHECK_THROWS_AS(multiplicity_partition(grid2, tripled, 1, 1), MultiplicityError);

    auto free_system = multiset({{"x", 1}, {"x - 1", 1}});
    auto one = multiplicity_partition(grid2, free_system, 0, 1);
    CHECK(one.curve_classes.size() == 1);
    CHECK(one.point_classes.size() == 1);

    // Curve conflicts form the path x -- x*(y-2) -- (y-2)*(x-2).
    auto grid3 = PointSet2::full(GridSet::integers(0, 3), GridSet::integers(0, 3));
    auto path = multiset({{"x", 1}, {"x*(y - 2)", 1}, {"(y - 2)*(x - 2)", 1}});
    auto verdict = bounded_multiplicity_check(grid3, path, 1, 2);
    CHECK_FALSE(verdict.holds);
    auto p = multiplicity_partition(grid3, path, 2, 2);
    CHECK(p.curve_classes.size() <= 3);
    for (const auto& cls : p.curve_classes)
        CHECK(bounded_multiplicity_check(grid3, curve_class(path, cls), 0, 2).holds);
}

TEST_CASE("MultiplicityError carries the witnesses")
{
    auto grid2 = PointSet2::full(GridSet::integers(0, 2), GridSet::integers(0, 2));
    try {
        multiplicity_partition(grid2, multiset({{"x - y", 1}, {"y - x", 1}}), 0, 1);
        FAIL("expected MultiplicityError");
    } catch (const MultiplicityError& e) {
        CHECK_FALSE(e.verdict().holds);
        CHECK(e.verdict().curve_violations.size() == 2);
    }
}

TEST_CASE("incidence_bound_report examples")
{
    auto grid2 = PointSet2::full(GridSet::integers(0, 2), GridSet::integers(0, 2));
    auto r = incidence_bound_report(grid2, multiset({{"x - y", 1}, {"x + y - 1", 1}}), 1, 0, 1);
    CHECK(r.I == 4);
    CHECK(r.trivial_bound == 8);
    REQUIRE(r.classes_curves.has_value());
    CHECK(*r.classes_curves == 1);

    const double P = 4, G = 2, d = 1, mu = 1;
    double expected = std::pow(d, 4.0 / 3) * std::cbrt(mu) * std::pow(P, 2.0 / 3) * std::pow(G, 2.0 / 3) + mu * P +
                      std::pow(d, 4) * G;
    CHECK(r.thm41_reference == doctest::Approx(expected));

    auto empty = incidence_bound_report(grid2, CurveMultiset(), 1, 0, 3);
    CHECK(empty.I == 0);
    CHECK(empty.thm41_reference == doctest::Approx(3.0 * 4));

    auto grid3 = PointSet2::full(GridSet::integers(0, 3), GridSet::integers(0, 3));
    auto rows = incidence_bound_report(grid3, multiset({{"y", 1}, {"y - 1", 1}, {"y - 2", 1}}), 1, 0, 1);
    CHECK(rows.I == 9);
    CHECK(rows.I == grid3.size());

    auto twins = incidence_bound_report(grid2, multiset({{"x - y", 1}, {"y - x", 1}}), 1, 0, 1);
    CHECK_FALSE(twins.classes_curves.has_value());
}

TEST_CASE("random systems: partition correctness, conservation and class count")
{
    std::mt19937_64 gen(4242);
    const std::vector<std::string> pool{"x",         "y",          "x - y",      "x + y - 2",  "x - 1",
                                        "y - 2",     "x^2 - y",    "y^2 - x",    "x*y - 2",    "x^2 + y^2 - 5",
                                        "x*(y - 1)", "(x-2)*(y-3)", "x^2 - 3*x + 2", "x + 2*y - 3"};
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    std::uniform_int_distribution<int> coin(0, 3);
    std::uniform_int_distribution<std::uint64_t> mu_dist(0, 3);
    int checked = 0;
    for (int trial = 0; trial < 50; ++trial) {
        auto full = PointSet2::full(GridSet::integers(0, 4), GridSet::integers(0, 4));
        std::vector<std::size_t> keep;
        for (std::size_t k = 0; k < full.size(); ++k)
            if (coin(gen) != 0) keep.push_back(k);
        auto pts = full.subset(keep);

        std::vector<std::pair<std::string, std::size_t>> spec;
        std::set<std::size_t> used;
        const int n_curves = 2 + trial % 5;
        while (static_cast<int>(spec.size()) < n_curves) {
            std::size_t k = pick(gen);
            if (!used.insert(k).second) continue;
            spec.push_back({pool[k], coin(gen) == 0 ? 2u : 1u});
        }
        auto curves = multiset(spec);
        std::uint64_t mu = mu_dist(gen);

        Oracle oracle(pts, curves);
        CHECK(incidence_count(pts, curves) == oracle.incidences());
        std::uint64_t lambda = oracle.max_degree(mu);

        CHECK(bounded_multiplicity_check(pts, curves, lambda, mu).holds);
        if (lambda > 0) CHECK_FALSE(bounded_multiplicity_check(pts, curves, lambda - 1, mu).holds);

        auto part = multiplicity_partition(pts, curves, lambda, mu);
        CHECK(part.curve_classes.size() <= lambda + 1);
        CHECK(part.point_classes.size() <= lambda + 1);

        std::uint64_t copies = 0;
        for (const auto& cls : part.curve_classes) copies += cls.size();
        CHECK(copies == curves.total());
        std::size_t points = 0;
        for (const auto& cls : part.point_classes) points += cls.size();
        CHECK(points == pts.size());

        std::uint64_t total = 0;
        for (const auto& pc : part.point_classes) {
            auto sub = pts.subset(pc);
            for (const auto& cc : part.curve_classes) {
                auto cls = curve_class(curves, cc);
                CHECK(bounded_multiplicity_check(sub, cls, 0, mu).holds);
                total += incidence_count(sub, cls);
            }
        }
        CHECK(total == incidence_count(pts, curves));
        ++checked;
    }
    CHECK(checked == 50);
}
