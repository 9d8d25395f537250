#include "eszlab/curves.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "eszlab/errors.hpp"
#include "eszlab/poly_algo.hpp"

namespace eszlab {

namespace {

using Point = std::pair<GaussRat, GaussRat>;

std::vector<std::string> as_vector(const std::array<std::string, 2>& v)
{
    return {v[0], v[1]};
}

// Resultant with the usual conventions when one side is free of var:
// Res(f, g) = f^deg(g) for deg_var(f) = 0.
MPoly resultant_any_degree(const MPoly& f, const MPoly& g, const std::string& var,
                           const std::vector<std::string>& out_vars)
{
    if (f.is_zero() || g.is_zero()) return MPoly(out_vars);
    int m = f.degree_in(var);
    int n = g.degree_in(var);
    if (m > 0 && n > 0) return resultant(f, g, var).with_vars(out_vars);
    if (m <= 0 && n <= 0) return MPoly(out_vars, GaussRat(1));
    if (m <= 0) return pow(f, static_cast<unsigned>(n)).with_vars(out_vars);
    return pow(g, static_cast<unsigned>(m)).with_vars(out_vars);
}

void require_three_vars(const MPoly& F)
{
    if (F.is_zero()) throw InputError("F is identically zero");
    if (F.num_vars() != 3) throw InputError("F must be declared over exactly three variables");
}

// Shared construction: fix the variable in role `fixed` at two values,
// eliminate role 0, and name the free role's copies v and v'.
PlaneCurve elimination_curve(const MPoly& F, std::size_t fixed, std::size_t free, const GaussRat& c0,
                             const GaussRat& c1)
{
    require_three_vars(F);
    const std::string& x = F.vars()[0];
    if (!F.depends_on(x)) throw InputError("F does not depend on '" + x + "'");
    const std::string& fixed_name = F.vars()[fixed];
    const std::string v = F.vars()[free];
    const std::string v_prime = v + "'";
    if (F.has_var(v_prime)) throw InputError("variable name '" + v_prime + "' is already taken");

    MPoly f1 = F.eval({{fixed_name, c0}});
    MPoly f2 = F.eval({{fixed_name, c1}}).rename({{v, v_prime}});
    std::vector<std::string> out{v, v_prime};
    MPoly res = resultant_any_degree(f1, f2, x, out);
    PlaneCurve curve({v, v_prime}, res);
    int d = F.degree();
    ensure_invariant(curve.degree() <= d * d, "gamma curve of degree " + std::to_string(curve.degree()) +
                                                   " exceeds d^2 = " + std::to_string(d * d));
    return curve;
}

// True when the univariate polynomials (after specialization) have a common
// root, i.e. their gcd is zero or nonconstant.
bool has_common_root(const std::vector<MPoly>& polys)
{
    MPoly g = poly_gcd(polys);
    return g.is_zero() || !g.is_constant();
}

struct CoefficientProjection {
    // Polynomial in the axis variable whose roots contain every axis value
    // at which the system has a common solution; absent when the system is
    // solvable for every axis value.
    std::optional<MPoly> h;
    std::string reason;
};

CoefficientProjection project_coefficients(const std::vector<MPoly>& coeffs, const std::string& companion,
                                           const std::string& axis)
{
    std::vector<MPoly> dependent, free_of;
    for (const auto& c : coeffs) {
        if (c.is_zero()) continue;
        (c.depends_on(companion) ? dependent : free_of).push_back(c);
    }
    std::vector<std::string> out{axis};
    if (dependent.empty() && free_of.empty()) return {std::nullopt, "all coefficients vanish"};
    MPoly common = poly_gcd(dependent.empty() ? free_of : dependent);
    if (!dependent.empty() && common.depends_on(companion) && free_of.empty())
        return {std::nullopt, "coefficients share the factor " + common.to_string()};
    std::vector<MPoly> pieces;
    for (const auto& c : free_of) pieces.push_back(c.with_vars(out));
    for (std::size_t i = 0; i < dependent.size(); ++i)
        for (std::size_t j = i + 1; j < dependent.size(); ++j)
            pieces.push_back(resultant(dependent[i], dependent[j], companion).with_vars(out));
    MPoly h = poly_gcd(pieces);
    if (h.is_zero()) return {std::nullopt, "coefficient resultants vanish identically"};
    return {h, ""};
}

void collect_exceptional(const MPoly& F, const std::string& expand_var, const std::string& companion,
                         const std::string& axis, std::set<GaussRat>& values, ExceptionalSet& out)
{
    auto coeffs = F.coefficients_in(expand_var);
    auto projection = project_coefficients(coeffs, companion, axis);
    if (!projection.h) {
        out.residual = F;
        out.residual_reason = projection.reason;
        return;
    }
    if (projection.h->is_constant()) return;
    auto roots = gaussian_rational_roots(*projection.h);
    for (const auto& r : roots.roots) {
        std::vector<MPoly> specialized;
        for (const auto& c : coeffs) specialized.push_back(c.eval({{axis, r}}));
        if (has_common_root(specialized)) values.insert(r);
    }
    if (!roots.residual.is_constant() && !out.residual) {
        out.residual = roots.residual;
        out.residual_reason = "candidate values outside Q(i) are roots of the residual";
    }
}

// Q(i) common points of two coprime polynomials in (u, v).
std::vector<Point> coprime_common_points(const MPoly& d1, const MPoly& d2, const std::string& u,
                                         const std::string& v)
{
    std::vector<std::string> uv{u, v};
    MPoly a = d1.with_vars(uv);
    MPoly b = d2.with_vars(uv);
    MPoly elim;
    if (a.depends_on(v) && b.depends_on(v)) {
        elim = resultant(a, b, v);
    } else if (!a.depends_on(v)) {
        elim = a.eval({{v, GaussRat(0)}});
    } else {
        elim = b.eval({{v, GaussRat(0)}});
    }
    ensure_invariant(!elim.is_zero(), "coprime curves with a vanishing eliminant");
    std::vector<Point> out;
    if (elim.is_constant()) return out;
    for (const auto& u0 : gaussian_rational_roots(elim).roots) {
        std::map<std::string, GaussRat> at{{u, u0}};
        MPoly g = poly_gcd(a.eval(at), b.eval(at));
        ensure_invariant(!g.is_zero(), "coprime curves share the line " + u + " = " + u0.to_string());
        if (g.is_constant()) continue;
        for (const auto& v0 : gaussian_rational_roots(g).roots) out.emplace_back(u0, v0);
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

PlaneCurve::PlaneCurve(std::array<std::string, 2> vars, const MPoly& defining) : vars_(std::move(vars))
{
    if (vars_[0] == vars_[1]) throw InputError("plane curve variables must differ");
    MPoly p = defining.with_vars(as_vector(vars_));
    if (p.is_zero()) {
        defining_ = p;
        flags_.is_full_plane = true;
        return;
    }
    if (p.is_constant()) {
        defining_ = MPoly(as_vector(vars_), GaussRat(1));
        flags_.is_empty = true;
        return;
    }
    defining_ = squarefree_part(p).with_vars(as_vector(vars_));
    // A factor in one variable alone splits into axis-parallel lines.
    flags_.contains_axis_parallel_line = !content_in(defining_, vars_[1]).is_constant() ||
                                         !content_in(defining_, vars_[0]).is_constant();
}

int PlaneCurve::degree() const
{
    if (flags_.is_full_plane || flags_.is_empty) return 0;
    return defining_.degree();
}

bool PlaneCurve::contains(const GaussRat& u, const GaussRat& v) const
{
    if (flags_.is_full_plane) return true;
    if (flags_.is_empty) return false;
    return defining_.eval_full(std::vector<GaussRat>{u, v}).is_zero();
}

PlaneCurve gamma_curve(const MPoly& F, const GaussRat& y0, const GaussRat& y0_prime)
{
    return elimination_curve(F, 1, 2, y0, y0_prime);
}

PlaneCurve dual_curve(const MPoly& F, const GaussRat& z0, const GaussRat& z0_prime)
{
    return elimination_curve(F, 2, 1, z0, z0_prime);
}

std::string to_string(ExceptionReason r)
{
    switch (r) {
    case ExceptionReason::empty_curve:
        return "empty_curve";
    case ExceptionReason::full_plane:
        return "full_plane";
    case ExceptionReason::exceptional_value:
        return "exceptional_value";
    }
    return "unknown";
}

CurveFamily gamma_family(const MPoly& F, const GridSet& B)
{
    require_three_vars(F);
    auto exceptional = exceptional_set(F, Axis::y);
    std::set<GaussRat> bad(exceptional.values.begin(), exceptional.values.end());

    std::vector<Point> pairs;
    for (const auto& b : B)
        for (const auto& b2 : B)
            if (b != b2) pairs.emplace_back(b, b2);

    std::vector<std::optional<PlaneCurve>> built(pairs.size());
    const long long count = static_cast<long long>(pairs.size());
#pragma omp parallel for schedule(dynamic)
    for (long long k = 0; k < count; ++k) {
        const auto& [b, b2] = pairs[static_cast<std::size_t>(k)];
        if (bad.count(b) || bad.count(b2)) continue;
        built[static_cast<std::size_t>(k)] = gamma_curve(F, b, b2);
    }

    CurveFamily family;
    for (std::size_t k = 0; k < pairs.size(); ++k) {
        const auto& [b, b2] = pairs[k];
        if (!built[k]) {
            family.exceptional.push_back({b, b2, ExceptionReason::exceptional_value});
        } else if (built[k]->flags().is_full_plane) {
            family.exceptional.push_back({b, b2, ExceptionReason::full_plane});
        } else if (built[k]->flags().is_empty) {
            family.exceptional.push_back({b, b2, ExceptionReason::empty_curve});
        } else {
            family.index.push_back(pairs[k]);
            family.curves.push_back(*built[k]);
        }
    }
    return family;
}

ExceptionalSet exceptional_set(const MPoly& F, Axis axis)
{
    require_three_vars(F);
    const std::string& x = F.vars()[0];
    const std::string& axis_var = F.vars()[axis == Axis::y ? 1 : 2];
    const std::string& other = F.vars()[axis == Axis::y ? 2 : 1];
    ExceptionalSet out;
    std::set<GaussRat> values;
    // F(x0, y0, .) == 0: coefficients in the other variable, companion x.
    collect_exceptional(F, other, x, axis_var, values, out);
    // F(., y0, z0) == 0: coefficients in x, companion the other variable.
    collect_exceptional(F, x, other, axis_var, values, out);
    out.values.assign(values.begin(), values.end());
    return out;
}

PopularReport popular_components(const std::vector<PlaneCurve>& family, int d, std::optional<std::uint64_t> threshold)
{
    if (d < 1) throw InputError("popular_components needs d >= 1");
    PopularReport report;
    std::uint64_t d4 = static_cast<std::uint64_t>(d) * d * d * d;
    report.threshold = threshold.value_or(d4 + 1);

    std::vector<const PlaneCurve*> members;
    for (const auto& c : family) {
        if (!c.flags().is_empty && !c.flags().is_full_plane) members.push_back(&c);
    }
    std::vector<MPoly> factors;
    for (std::size_t i = 0; i < members.size(); ++i) {
        for (std::size_t j = i + 1; j < members.size(); ++j) {
            MPoly g = poly_gcd(members[i]->defining(), members[j]->defining());
            if (g.is_constant()) continue;
            if (std::find(factors.begin(), factors.end(), g) == factors.end()) factors.push_back(g);
        }
    }
    for (const auto& g : factors) {
        PopularComponent comp{g, 0, false};
        for (const auto* m : members) {
            if (auto q = try_divide_exact(m->defining(), g)) {
                ensure_invariant(*q * g == m->defining(), "trial division of a popular component");
                ++comp.multiplicity;
            }
        }
        comp.popular = comp.multiplicity >= report.threshold;
        report.components.push_back(std::move(comp));
    }
    std::sort(report.components.begin(), report.components.end(), [](const auto& a, const auto& b) {
        if (a.multiplicity != b.multiplicity) return a.multiplicity > b.multiplicity;
        return a.defining.to_string() < b.defining.to_string();
    });
    return report;
}

BezoutResult bezout_check(const PlaneCurve& c1, const PlaneCurve& c2, const std::optional<std::array<GridSet, 2>>& grid)
{
    if (c1.vars() != c2.vars()) throw InputError("bezout_check: curves live over different variables");
    BezoutResult out;
    if (c1.flags().is_empty || c2.flags().is_empty) {
        out.points.emplace();
        return out;
    }
    if (c1.flags().is_full_plane || c2.flags().is_full_plane) {
        out.common_component = true;
        return out;
    }
    MPoly g = poly_gcd(c1.defining(), c2.defining());
    if (!g.is_constant()) {
        out.common_component = true;
        return out;
    }
    std::vector<Point> pts;
    if (grid) {
        for (const auto& u : (*grid)[0])
            for (const auto& v : (*grid)[1])
                if (c1.contains(u, v) && c2.contains(u, v)) pts.emplace_back(u, v);
    } else {
        pts = coprime_common_points(c1.defining(), c2.defining(), c1.vars()[0], c1.vars()[1]);
    }
    ensure_invariant(static_cast<long long>(pts.size()) <= static_cast<long long>(c1.degree()) * c2.degree(),
                     "Bezout bound violated: " + std::to_string(pts.size()) + " common points");
    out.points = std::move(pts);
    return out;
}

FamilyIntersection family_common_degree(const std::vector<PlaneCurve>& family)
{
    if (family.size() < 2) throw InputError("family_common_degree needs at least two curves");
    const auto& vars = family.front().vars();
    int delta = 0;
    std::vector<MPoly> defs;
    for (const auto& c : family) {
        if (c.vars() != vars) throw InputError("family_common_degree: curves live over different variables");
        delta = std::max(delta, c.degree());
        defs.push_back(c.defining());
    }
    FamilyIntersection out;
    out.common_factor = poly_gcd(defs);
    if (out.common_factor.is_zero()) {
        throw InputError("family_common_degree: every member is the full plane");
    }
    if (!out.common_factor.is_constant()) {
        out.degree = out.common_factor.degree();
    } else {
        // The common zeros of the rest lie on a random combination of them,
        // which is coprime to the first member for all but finitely many
        // choices of weights.
        std::mt19937_64 gen(family.size());
        std::uniform_int_distribution<int> weight(1, 97);
        std::optional<MPoly> combo;
        for (int attempt = 0; attempt < 16 && !combo; ++attempt) {
            MPoly sum(as_vector(vars));
            for (std::size_t k = 1; k < defs.size(); ++k) sum += defs[k] * GaussRat(weight(gen));
            if (!sum.is_zero() && poly_gcd(defs[0], sum).is_constant()) combo = sum;
        }
        if (!combo) throw ConvergenceError("family_common_degree: no coprime combination found");
        for (const auto& p : coprime_common_points(defs[0], *combo, vars[0], vars[1])) {
            bool on_all = std::all_of(family.begin(), family.end(),
                                      [&](const PlaneCurve& c) { return c.contains(p.first, p.second); });
            if (on_all) out.points.push_back(p);
        }
        out.degree = static_cast<int>(out.points.size());
    }
    ensure_invariant(out.degree <= delta * delta, "common intersection of degree " + std::to_string(out.degree) +
                                                      " exceeds delta^2 = " + std::to_string(delta * delta));
    return out;
}

} // namespace eszlab
