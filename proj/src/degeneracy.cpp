#include "eszlab/degeneracy.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <random>

#include "eszlab/errors.hpp"
#include "eszlab/poly_algo.hpp"

namespace eszlab {

namespace {

enum : std::size_t { X = 0, XP = 1, Y = 2, YP = 3, Z1 = 4 };

// Role positions (x, y, z) in the 8 variables for each copy.
constexpr std::array<std::array<std::size_t, 3>, 4> kCopyRoles{{
    {X, Y, Z1},
    {X, YP, Z1 + 1},
    {XP, Y, Z1 + 2},
    {XP, YP, Z1 + 3},
}};

void require_three_vars(const MPoly& F)
{
    if (F.is_zero()) throw InputError("F is identically zero");
    if (F.num_vars() != 3) throw InputError("F must be declared over exactly three variables");
}

// p(x, y, z) placed into the 8 variables at the given role positions.
MPoly embed(const MPoly& p, const std::array<std::size_t, 3>& roles)
{
    MPoly out(quad_variables());
    for (const auto& [e, c] : p.terms()) {
        Exponent big(8, 0);
        for (std::size_t k = 0; k < 3; ++k) big[roles[k]] = e[k];
        out.add_term(big, c);
    }
    return out;
}

// Floating-point copy of a polynomial for fast repeated evaluation.
class NumericPoly {
public:
    NumericPoly() = default;
    explicit NumericPoly(const MPoly& p)
    {
        for (const auto& [e, c] : p.terms()) terms_.push_back({c.to_complex(), e});
    }

    Complex operator()(std::span<const Complex> values) const
    {
        Complex sum = 0.0;
        for (const auto& t : terms_) {
            Complex term = t.coeff;
            for (std::size_t k = 0; k < t.exp.size(); ++k)
                for (std::uint32_t j = 0; j < t.exp[k]; ++j) term *= values[k];
            sum += term;
        }
        return sum;
    }

private:
    struct Term {
        Complex coeff;
        Exponent exp;
    };
    std::vector<Term> terms_;
};

double norm8(const Point8& p)
{
    double s = 0.0;
    for (const auto& v : p) s += std::norm(v);
    return std::sqrt(s);
}

// Coefficients in z of F, as numeric polynomials in (x, y).
std::vector<NumericPoly> z_coefficients(const MPoly& F)
{
    std::vector<NumericPoly> out;
    for (const auto& c : F.coefficients_in(F.vars()[2])) out.emplace_back(c);
    return out;
}

std::vector<Complex> eval_coefficients(const std::vector<NumericPoly>& coeffs, Complex x, Complex y)
{
    std::array<Complex, 2> xy{x, y};
    std::vector<Complex> out;
    for (const auto& c : coeffs) out.push_back(c(xy));
    return out;
}

struct PartialValues {
    std::array<Complex, 4> F1, F2, F3;
};

PartialValues partial_values(const std::array<NumericPoly, 3>& partials, const Point8& pt)
{
    PartialValues out;
    for (std::size_t i = 0; i < 4; ++i) {
        std::array<Complex, 3> triple{pt[kCopyRoles[i][0]], pt[kCopyRoles[i][1]], pt[kCopyRoles[i][2]]};
        out.F1[i] = partials[0](triple);
        out.F2[i] = partials[1](triple);
        out.F3[i] = partials[2](triple);
    }
    return out;
}

} // namespace

const std::vector<std::string>& quad_variables()
{
    static const std::vector<std::string> vars{"x", "x'", "y", "y'", "z1", "z2", "z3", "z4"};
    return vars;
}

QuadSystem::QuadSystem(const MPoly& F_in) : F(F_in)
{
    require_three_vars(F);
    for (std::size_t i = 0; i < 4; ++i) copies[i] = embed(F, kCopyRoles[i]);
}

GPoly::GPoly(const MPoly& F)
{
    require_three_vars(F);
    for (std::size_t k = 0; k < 3; ++k) {
        partials_[k] = F.derivative(F.vars()[k]);
        if (partials_[k].is_zero())
            throw InputError("the partial derivative of F along '" + F.vars()[k] + "' vanishes identically");
    }
    auto P = [&](std::size_t k, std::size_t copy) { return embed(partials_[k], kCopyRoles[copy]); };
    value_ = P(1, 0) * P(0, 1) * P(0, 2) * P(1, 3) - P(0, 0) * P(1, 1) * P(1, 2) * P(0, 3);

    // Recompute at a few exact points straight from the partials.
    std::mt19937_64 gen(0x6A09E667);
    std::uniform_int_distribution<int> u(-7, 7);
    for (int trial = 0; trial < 3; ++trial) {
        std::vector<GaussRat> pt;
        for (int k = 0; k < 8; ++k) pt.emplace_back(GaussRat(u(gen)) + GaussRat::from_ratio(u(gen), 3) * GaussRat::i());
        auto at = [&](std::size_t k, std::size_t copy) {
            const auto& r = kCopyRoles[copy];
            return partials_[k].eval_full(std::vector<GaussRat>{pt[r[0]], pt[r[1]], pt[r[2]]});
        };
        GaussRat direct = at(1, 0) * at(0, 1) * at(0, 2) * at(1, 3) - at(0, 0) * at(1, 1) * at(1, 2) * at(0, 3);
        ensure_invariant(direct == value_.eval_full(pt), "G disagrees with its defining expression");
    }
}

GPoly build_G(const MPoly& F)
{
    return GPoly(F);
}

MPoly reduce_mod_V(const GPoly& g, const QuadSystem& sys)
{
    MPoly r = g.value();
    for (std::size_t i = 4; i-- > 0;) {
        const std::string& z = quad_variables()[Z1 + i];
        if (r.degree_in(z) < sys.copies[i].degree_in(z)) continue;
        r = pseudo_remainder(r, sys.copies[i], z).remainder;
    }
    return r;
}

SampleSet sample_V_points(const QuadSystem& sys, const GPoly& g, std::size_t n_samples, std::uint64_t seed, double tol)
{
    if (n_samples == 0) throw InputError("sample_V_points needs at least one sample");
    const auto zc = z_coefficients(sys.F);
    const std::array<NumericPoly, 3> partials{NumericPoly(g.partials()[0]), NumericPoly(g.partials()[1]),
                                              NumericPoly(g.partials()[2])};
    const NumericPoly G(g.value());
    const int degG = g.value().degree();

    std::vector<SampleSet> per_draw(n_samples);
    const long long count = static_cast<long long>(n_samples);
#pragma omp parallel for schedule(dynamic)
    for (long long s = 0; s < count; ++s) {
        SampleSet& local = per_draw[static_cast<std::size_t>(s)];
        local.draws = 1;
        std::mt19937_64 gen(seed + 0x9E3779B97F4A7C15ULL * static_cast<std::uint64_t>(s + 1));
        std::uniform_int_distribution<int> box(-5, 5);
        std::uniform_real_distribution<double> jitter(0.0, 1.0);
        auto draw = [&] { return Complex(box(gen) + jitter(gen), box(gen) + jitter(gen)); };
        std::array<Complex, 4> base{draw(), draw(), draw(), draw()};  // x, x', y, y'

        std::array<std::vector<Complex>, 4> coeffs, roots;
        bool ok = true;
        for (std::size_t i = 0; i < 4 && ok; ++i) {
            coeffs[i] = eval_coefficients(zc, base[kCopyRoles[i][0]], base[kCopyRoles[i][1]]);
            try {
                roots[i] = complex_roots(coeffs[i], RootFinderConfig{tol, 200});
            } catch (const std::exception&) {
                ok = false;
            }
        }
        if (!ok) {
            ++local.root_failures;
            continue;
        }
        Point8 pt{};
        for (std::size_t k = 0; k < 4; ++k) pt[k] = base[k];
        for (Complex z1 : roots[0])
            for (Complex z2 : roots[1])
                for (Complex z3 : roots[2])
                    for (Complex z4 : roots[3]) {
                        pt[Z1] = z1;
                        pt[Z1 + 1] = z2;
                        pt[Z1 + 2] = z3;
                        pt[Z1 + 3] = z4;
                        VSample v;
                        v.point = pt;
                        for (std::size_t i = 0; i < 4; ++i)
                            v.max_residual = std::max(v.max_residual, scaled_residual(coeffs[i], pt[Z1 + i]));
                        if (v.max_residual > tol) {
                            ++local.root_failures;
                            continue;
                        }
                        auto pv = partial_values(partials, pt);
                        v.min_abs_F3 = std::abs(pv.F3[0]);
                        for (std::size_t i = 1; i < 4; ++i) v.min_abs_F3 = std::min(v.min_abs_F3, std::abs(pv.F3[i]));
                        if (v.min_abs_F3 <= tol) {
                            ++local.on_V0;
                            continue;
                        }
                        v.G = G(pt);
                        v.abs_G = std::abs(v.G);
                        v.threshold = 1e3 * tol * std::pow(1.0 + norm8(pt), degG);
                        local.points.push_back(v);
                    }
    }
    SampleSet out;
    for (auto& part : per_draw) {
        out.draws += part.draws;
        out.on_V0 += part.on_V0;
        out.root_failures += part.root_failures;
        for (auto& p : part.points) out.points.push_back(std::move(p));
    }
    return out;
}

std::string to_string(Verdict v)
{
    switch (v) {
    case Verdict::degenerate:
        return "DEGENERATE";
    case Verdict::nondegenerate:
        return "NONDEGENERATE";
    case Verdict::inconclusive:
        return "INCONCLUSIVE";
    }
    return "INCONCLUSIVE";
}

DegeneracyVerdict degeneracy_test(const MPoly& F, const DegeneracyConfig& config)
{
    GPoly g(F);
    QuadSystem sys(F);
    DegeneracyVerdict out;
    out.caveats.push_back("irreducibility of F is not verified");
    if (g.value().is_zero()) {
        out.g_identically_zero = true;
        out.remainder = MPoly(quad_variables());
        out.verdict = Verdict::degenerate;
        return out;
    }
    out.remainder = reduce_mod_V(g, sys);
    if (out.remainder->is_zero()) {
        out.verdict = Verdict::degenerate;
        return out;
    }
    auto samples = sample_V_points(sys, g, config.samples, config.seed, config.tol);
    out.samples = std::move(samples.points);
    out.n_samples = out.samples.size();
    bool witnessed = false;
    for (const auto& s : out.samples) {
        out.max_abs_G = std::max(out.max_abs_G, s.abs_G);
        witnessed = witnessed || s.abs_G > s.threshold;
    }
    if (witnessed) {
        out.verdict = Verdict::nondegenerate;
        out.caveats.push_back("nondegeneracy holds on the components of V reached by sampling");
    } else {
        out.verdict = Verdict::inconclusive;
        if (out.samples.empty()) out.caveats.push_back("no usable sample points off V0");
        out.caveats.push_back("components of V with a non-dominant projection can evade sampling");
        out.caveats.push_back("the nonzero remainder may vanish on V outside the leading-coefficient locus");
    }
    ensure_invariant(out.verdict != Verdict::degenerate || out.g_identically_zero || out.remainder->is_zero(),
                     "degenerate verdict without a certificate");
    return out;
}

JacobianCheck jacobian_consistency(const MPoly& F, const Point8& pt, double tol, double rel_tol)
{
    GPoly g(F);
    const auto zc = z_coefficients(F);
    for (std::size_t i = 0; i < 4; ++i) {
        auto coeffs = eval_coefficients(zc, pt[kCopyRoles[i][0]], pt[kCopyRoles[i][1]]);
        if (scaled_residual(coeffs, pt[Z1 + i]) > tol)
            throw InputError("point is not on V: copy " + std::to_string(i + 1) + " does not vanish");
    }
    const std::array<NumericPoly, 3> partials{NumericPoly(g.partials()[0]), NumericPoly(g.partials()[1]),
                                              NumericPoly(g.partials()[2])};
    auto pv = partial_values(partials, pt);
    for (std::size_t i = 0; i < 4; ++i) {
        if (std::abs(pv.F3[i]) <= tol) throw InputError("point lies on V0");
    }
    Eigen::Matrix4cd J = Eigen::Matrix4cd::Zero();
    std::array<Complex, 4> a, b;
    for (std::size_t i = 0; i < 4; ++i) {
        a[i] = -pv.F1[i] / pv.F3[i];
        b[i] = -pv.F2[i] / pv.F3[i];
    }
    J(0, 0) = a[0];
    J(0, 1) = a[1];
    J(1, 2) = a[2];
    J(1, 3) = a[3];
    J(2, 0) = b[0];
    J(2, 2) = b[2];
    J(3, 1) = b[1];
    J(3, 3) = b[3];

    JacobianCheck out;
    Complex f3 = pv.F3[0] * pv.F3[1] * pv.F3[2] * pv.F3[3];
    out.det_times_F3 = J.determinant() * f3;
    Complex first = pv.F2[0] * pv.F1[1] * pv.F1[2] * pv.F2[3];
    Complex second = pv.F1[0] * pv.F2[1] * pv.F2[2] * pv.F1[3];
    out.G = NumericPoly(g.value())(pt);
    double scale = std::abs(first) + std::abs(second);
    double diff = std::abs(out.det_times_F3 - out.G);
    out.relative_error = scale > 0.0 ? diff / scale : diff;
    out.consistent = out.relative_error <= rel_tol;
    return out;
}

} // namespace eszlab
