#include "eszlab/poly_algo.hpp"

#include <algorithm>

#include "eszlab/errors.hpp"

namespace eszlab {

namespace {

bool exponent_divides(const Exponent& a, const Exponent& b)
{
    for (std::size_t k = 0; k < a.size(); ++k) {
        if (a[k] > b[k]) return false;
    }
    return true;
}

Exponent exponent_minus(const Exponent& b, const Exponent& a)
{
    Exponent out(b.size());
    for (std::size_t k = 0; k < b.size(); ++k) out[k] = b[k] - a[k];
    return out;
}

// Leading coefficient of f in var, with var^deg stripped.
MPoly leading_coeff_in(const MPoly& f, const std::string& var)
{
    auto c = f.coefficients_in(var);
    return c.back().with_vars(f.vars());
}

} // namespace

std::pair<MPoly, MPoly> divide(const MPoly& f_in, const MPoly& g_in)
{
    if (g_in.is_zero()) throw InputError("division by the zero polynomial");
    auto vars = merge_vars(f_in.vars(), g_in.vars());
    MPoly f = f_in.with_vars(vars);
    MPoly g = g_in.with_vars(vars);
    const Exponent& lg = g.leading_exponent();
    GaussRat lc_inv = g.leading_coefficient().inverse();
    MPoly q(vars), r(vars), p = f;
    while (!p.is_zero()) {
        const Exponent& lp = p.leading_exponent();
        if (exponent_divides(lg, lp)) {
            MPoly t = MPoly::monomial(vars, exponent_minus(lp, lg), p.leading_coefficient() * lc_inv);
            q += t;
            p -= t * g;
        } else {
            MPoly t = MPoly::monomial(vars, lp, p.leading_coefficient());
            r += t;
            p -= t;
        }
    }
    return {q, r};
}

std::optional<MPoly> try_divide_exact(const MPoly& f_in, const MPoly& g_in)
{
    if (g_in.is_zero()) throw InputError("division by the zero polynomial");
    auto vars = merge_vars(f_in.vars(), g_in.vars());
    MPoly p = f_in.with_vars(vars);
    MPoly g = g_in.with_vars(vars);
    if (g.is_constant()) return p * g.constant_term().inverse();
    const Exponent& lg = g.leading_exponent();
    GaussRat lc_inv = g.leading_coefficient().inverse();
    MPoly q(vars);
    while (!p.is_zero()) {
        const Exponent& lp = p.leading_exponent();
        // A multiple of g always has a leading term divisible by LT(g).
        if (!exponent_divides(lg, lp)) return std::nullopt;
        MPoly t = MPoly::monomial(vars, exponent_minus(lp, lg), p.leading_coefficient() * lc_inv);
        q += t;
        p -= t * g;
    }
    return q;
}

MPoly divide_exact(const MPoly& f, const MPoly& g)
{
    auto q = try_divide_exact(f, g);
    ensure_invariant(q.has_value(), "divide_exact: " + g.to_string() + " does not divide " + f.to_string());
    return *q;
}

bool divides(const MPoly& g, const MPoly& f)
{
    if (g.is_zero()) return f.is_zero();
    return try_divide_exact(f, g).has_value();
}

PseudoDivision pseudo_remainder(const MPoly& f_in, const MPoly& g_in, const std::string& var)
{
    auto vars = merge_vars(f_in.vars(), g_in.vars());
    if (std::find(vars.begin(), vars.end(), var) == vars.end()) vars.push_back(var);
    MPoly f = f_in.with_vars(vars);
    MPoly g = g_in.with_vars(vars);
    if (g.is_zero()) throw InputError("pseudo-division by zero");
    int dg = g.degree_in(var);
    MPoly lc = leading_coeff_in(g, var);
    MPoly x = MPoly::variable(var, vars);
    PseudoDivision out{f, 0};
    while (!out.remainder.is_zero()) {
        int dr = out.remainder.degree_in(var);
        if (dr < dg) break;
        MPoly lr = leading_coeff_in(out.remainder, var);
        out.remainder = lc * out.remainder - lr * pow(x, static_cast<unsigned>(dr - dg)) * g;
        ++out.multiplier_power;
    }
    return out;
}

MPoly bareiss_determinant(std::vector<std::vector<MPoly>> m, const std::vector<std::string>& vars)
{
    const std::size_t n = m.size();
    if (n == 0) return MPoly(vars, GaussRat(1));
    for (auto& row : m) {
        if (row.size() != n) throw InputError("bareiss_determinant: matrix is not square");
        for (auto& e : row) e = e.with_vars(vars);
    }
    MPoly prev(vars, GaussRat(1));
    bool negate = false;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && m[swap_row][k].is_zero()) ++swap_row;
            if (swap_row == n) return MPoly(vars);
            std::swap(m[k], m[swap_row]);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                MPoly num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                m[i][j] = prev.is_constant() ? num * prev.constant_term().inverse() : divide_exact(num, prev);
            }
            m[i][k] = MPoly(vars);
        }
        prev = m[k][k];
    }
    MPoly det = m[n - 1][n - 1];
    return negate ? -det : det;
}

MPoly resultant(const MPoly& f_in, const MPoly& g_in, const std::string& var)
{
    auto all = merge_vars(f_in.vars(), g_in.vars());
    int m = f_in.degree_in(var);
    int n = g_in.degree_in(var);
    if (m <= 0 || n <= 0) throw InputError("resultant: both polynomials need positive degree in '" + var + "'");
    std::vector<std::string> rest;
    for (const auto& v : all) {
        if (v != var) rest.push_back(v);
    }
    auto fc = f_in.with_vars(all).coefficients_in(var);
    auto gc = g_in.with_vars(all).coefficients_in(var);
    const std::size_t size = static_cast<std::size_t>(m + n);
    std::vector<std::vector<MPoly>> syl(size, std::vector<MPoly>(size, MPoly(rest)));
    // Rows 0..n-1 hold shifted copies of f, rows n..n+m-1 of g; columns run
    // from the highest power down.
    for (std::size_t r = 0; r < static_cast<std::size_t>(n); ++r) {
        for (int k = 0; k <= m; ++k) syl[r][r + static_cast<std::size_t>(m - k)] = fc[static_cast<std::size_t>(k)];
    }
    for (std::size_t r = 0; r < static_cast<std::size_t>(m); ++r) {
        for (int k = 0; k <= n; ++k) {
            syl[static_cast<std::size_t>(n) + r][r + static_cast<std::size_t>(n - k)] = gc[static_cast<std::size_t>(k)];
        }
    }
    return bareiss_determinant(std::move(syl), rest);
}

namespace {

MPoly one_like(const std::vector<std::string>& vars)
{
    return MPoly(vars, GaussRat(1));
}

MPoly gcd_same_vars(const MPoly& f, const MPoly& g);

MPoly content_same_vars(const MPoly& f, const std::string& var)
{
    // Coefficients are re-embedded over f's variables.
    MPoly acc(f.vars());
    for (const auto& c : f.coefficients_in(var)) {
        if (c.is_zero()) continue;
        acc = gcd_same_vars(acc, c.with_vars(f.vars()));
        if (acc.is_constant()) break;
    }
    return acc;
}

MPoly gcd_same_vars(const MPoly& f, const MPoly& g)
{
    const auto& vars = f.vars();
    if (f.is_zero()) return g.monic();
    if (g.is_zero()) return f.monic();
    if (f.is_constant() || g.is_constant()) return one_like(vars);

    std::string main;
    for (const auto& v : vars) {
        if (f.depends_on(v) || g.depends_on(v)) {
            main = v;
            break;
        }
    }
    bool f_has = f.depends_on(main);
    bool g_has = g.depends_on(main);
    if (!f_has) return gcd_same_vars(f, content_same_vars(g, main));
    if (!g_has) return gcd_same_vars(content_same_vars(f, main), g);

    MPoly cf = content_same_vars(f, main);
    MPoly cg = content_same_vars(g, main);
    MPoly c = gcd_same_vars(cf, cg);
    MPoly a = divide_exact(f, cf).monic();
    MPoly b = divide_exact(g, cg).monic();
    if (a.degree_in(main) < b.degree_in(main)) std::swap(a, b);
    // Primitive PRS.
    while (!b.is_zero() && b.degree_in(main) > 0) {
        MPoly r = pseudo_remainder(a, b, main).remainder.with_vars(vars);
        a = std::move(b);
        if (r.is_zero()) {
            b = MPoly(vars);
        } else {
            b = divide_exact(r, content_same_vars(r, main)).monic();
        }
    }
    MPoly h = b.is_zero() ? divide_exact(a, content_same_vars(a, main)) : one_like(vars);
    return (c * h).monic();
}

} // namespace

MPoly poly_gcd(const MPoly& f, const MPoly& g)
{
    auto vars = merge_vars(f.vars(), g.vars());
    return gcd_same_vars(f.with_vars(vars), g.with_vars(vars));
}

MPoly poly_gcd(const std::vector<MPoly>& polys)
{
    if (polys.empty()) return MPoly();
    std::vector<std::string> vars;
    for (const auto& p : polys) vars = merge_vars(vars, p.vars());
    MPoly acc(vars);
    for (const auto& p : polys) {
        acc = gcd_same_vars(acc, p.with_vars(vars));
        if (!acc.is_zero() && acc.is_constant()) break;
    }
    return acc;
}

MPoly content_in(const MPoly& f, const std::string& var)
{
    return content_same_vars(f, var).monic();
}

MPoly primitive_part_in(const MPoly& f, const std::string& var)
{
    if (f.is_zero()) return f;
    return divide_exact(f, content_same_vars(f, var));
}

MPoly squarefree_part(const MPoly& f)
{
    if (f.is_zero()) throw InputError("squarefree_part of the zero polynomial");
    if (f.is_constant()) return MPoly(f.vars(), GaussRat(1));
    // Each repeated factor p^m survives in every partial derivative at least
    // to the power m-1, and exactly so in the derivative along a variable p
    // depends on.
    MPoly g = f;
    for (const auto& v : f.used_vars()) {
        g = poly_gcd(g, f.derivative(v));
        if (g.is_constant()) break;
    }
    return divide_exact(f, g).monic();
}

std::vector<Complex> numeric_coefficients(const MPoly& univariate, const std::string& var)
{
    auto coeffs = univariate.coefficients_in(var);
    std::vector<Complex> out;
    out.reserve(coeffs.size());
    for (const auto& c : coeffs) {
        if (!c.is_constant()) throw InputError("numeric_coefficients: polynomial is not univariate in '" + var + "'");
        out.push_back(c.constant_term().to_complex());
    }
    return out;
}

GaussianRoots gaussian_rational_roots(const MPoly& univariate, const RootFinderConfig& config)
{
    if (univariate.is_zero()) throw InputError("gaussian_rational_roots of the zero polynomial");
    auto used = univariate.used_vars();
    if (used.size() > 1) throw InputError("gaussian_rational_roots: polynomial is not univariate");
    GaussianRoots out{{}, MPoly(univariate.vars(), GaussRat(1))};
    if (used.empty()) return out;
    const std::string var = used.front();

    MPoly rest = squarefree_part(univariate);
    const MPoly x = MPoly::variable(var, rest.vars());
    static constexpr long kDenominatorBounds[] = {1, 16, 1000, 100000, 10000000, 1000000000};
    bool progress = true;
    while (rest.degree_in(var) > 0 && progress) {
        progress = false;
        if (rest.degree_in(var) == 1) {
            auto c = rest.coefficients_in(var);
            GaussRat root = -c[0].constant_term() / c[1].constant_term();
            out.roots.push_back(root);
            rest = MPoly(rest.vars(), GaussRat(1));
            break;
        }
        auto numeric = numeric_coefficients(rest, var);
        std::vector<Complex> approx;
        try {
            approx = complex_roots(numeric, config);
        } catch (const ConvergenceError&) {
            RootFinderConfig relaxed = config;
            relaxed.max_iterations = config.max_iterations * 10;
            relaxed.tol = std::max(config.tol, 1e-9);
            approx = complex_roots(numeric, relaxed);
        }
        for (const auto& z : approx) {
            for (long bound : kDenominatorBounds) {
                GaussRat candidate = rational_approximation(z, bound);
                std::map<std::string, GaussRat> at{{var, candidate}};
                if (rest.eval(at).is_zero()) {
                    out.roots.push_back(candidate);
                    rest = divide_exact(rest, x - MPoly(rest.vars(), candidate));
                    progress = true;
                    break;
                }
            }
            if (progress) break;
        }
    }
    std::sort(out.roots.begin(), out.roots.end());
    out.residual = rest.monic();
    return out;
}

} // namespace eszlab
