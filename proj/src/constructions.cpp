#include "eszlab/constructions.hpp"

#include <sstream>

#include "eszlab/degeneracy.hpp"
#include "eszlab/errors.hpp"

namespace eszlab {

namespace {

const std::vector<std::string> kXYZ{"x", "y", "z"};

MPoly normalize_part(const MPoly& part, const char* name)
{
    auto used = part.used_vars();
    if (used.size() > 1) throw InputError(std::string("form part ") + name + " must be univariate");
    if (used.empty()) throw InputError(std::string("form part ") + name + " must be nonconstant");
    return part.rename({{used.front(), "t"}}).with_vars({"t"});
}

MPoly apply(const MPoly& part, const MPoly& image)
{
    return part.substitute("t", image).with_vars(kXYZ);
}

MPoly var(const std::string& name)
{
    return MPoly::variable(name, kXYZ);
}

// (alpha, beta) with part = alpha t + beta.
std::pair<GaussRat, GaussRat> linear_coefficients(const MPoly& part)
{
    if (part.degree() != 1) throw InputError("extremal_sets needs linear parts, got " + part.to_string());
    auto c = part.coefficients_in("t");
    return {c[1].constant_term(), c[0].constant_term()};
}

// (c, m) with part = c t^m.
std::pair<GaussRat, unsigned> monomial_part(const MPoly& part)
{
    if (part.num_terms() != 1) throw InputError("extremal_sets needs monomial parts, got " + part.to_string());
    return {part.leading_coefficient(), part.leading_exponent()[0]};
}

GridSet pull_back_linear(const MPoly& part, long first, long step, std::size_t n)
{
    auto [alpha, beta] = linear_coefficients(part);
    std::vector<GaussRat> values;
    for (std::size_t k = 0; k < n; ++k) {
        GaussRat target(first + step * static_cast<long>(k));
        values.push_back((target - beta) / alpha);
    }
    return GridSet(std::move(values));
}

GridSet powers_of_two(const GaussRat& scale, unsigned exponent_step, std::size_t n)
{
    std::vector<GaussRat> values;
    for (std::size_t k = 0; k < n; ++k) values.push_back(scale * pow(GaussRat(2), exponent_step * static_cast<unsigned>(k)));
    return GridSet(std::move(values));
}

} // namespace

std::string to_string(FormKind k)
{
    switch (k) {
    case FormKind::sum:
        return "SUM";
    case FormKind::composed:
        return "COMPOSED";
    case FormKind::product:
        return "PRODUCT";
    }
    return "SUM";
}

FormKind form_kind_from_string(const std::string& s)
{
    if (s == "SUM") return FormKind::sum;
    if (s == "COMPOSED") return FormKind::composed;
    if (s == "PRODUCT") return FormKind::product;
    throw InputError("unknown form kind '" + s + "' (expected SUM, COMPOSED or PRODUCT)");
}

SpecialForm::SpecialForm(FormKind kind, std::array<MPoly, 3> parts) : kind_(kind)
{
    static const char* names_sum[] = {"p", "q", "r"};
    static const char* names_comp[] = {"g", "h", "k"};
    for (std::size_t i = 0; i < 3; ++i)
        parts_[i] = normalize_part(parts[i], kind == FormKind::sum ? names_sum[i] : names_comp[i]);
    if (kind_ != FormKind::product)
        ensure_invariant(build_G(to_poly(*this)).value().is_zero(), "G does not vanish for a " + to_string(kind_) + " form");
}

MPoly to_poly(const SpecialForm& form)
{
    const auto& [a, b, c] = form.parts();
    switch (form.kind()) {
    case FormKind::sum:
        return apply(a, var("x")) + apply(b, var("y")) + apply(c, var("z"));
    case FormKind::composed:
        return var("z") - apply(a, apply(b, var("x")) + apply(c, var("y")));
    case FormKind::product:
        return var("z") - apply(a, apply(b, var("x")) * apply(c, var("y")));
    }
    throw InputError("unknown form kind");
}

ExtremalSets extremal_sets(const SpecialForm& form, std::size_t n, const CountOptions& options)
{
    if (n == 0) throw InputError("extremal_sets needs n >= 1");
    const auto& [a, b, c] = form.parts();
    ExtremalSets out;
    switch (form.kind()) {
    case FormKind::sum:
        out.sets = {pull_back_linear(a, 0, 1, n), pull_back_linear(b, 0, 1, n), pull_back_linear(c, 0, -1, n)};
        break;
    case FormKind::composed: {
        std::vector<GaussRat> image;
        for (std::size_t l = 0; l < n; ++l)
            image.push_back(a.eval_full(std::vector<GaussRat>{GaussRat(static_cast<long>(l))}));
        out.sets = {pull_back_linear(b, 0, 1, n), pull_back_linear(c, 0, 1, n), GridSet::from_unique(std::move(image))};
        break;
    }
    case FormKind::product: {
        auto [cg, mg] = monomial_part(a);
        auto [ch, mh] = monomial_part(b);
        auto [ck, mk] = monomial_part(c);
        out.sets = {powers_of_two(GaussRat(1), mk, n), powers_of_two(GaussRat(1), mh, n),
                    powers_of_two(cg * pow(ch * ck, mg), mg * mh * mk, n)};
        break;
    }
    }
    out.M = count_zeros(to_poly(form), out.sets[0], out.sets[1], out.sets[2], options).M();
    ensure_invariant(4 * out.M >= static_cast<std::uint64_t>(n) * n,
                     "extremal construction below n^2/4 at n = " + std::to_string(n));
    return out;
}

std::vector<GrowthRow> verify_quadratic_growth(const SpecialForm& form, const std::vector<std::size_t>& n_list,
                                               const CountOptions& options)
{
    for (std::size_t k = 1; k < n_list.size(); ++k) {
        if (n_list[k] <= n_list[k - 1]) throw InputError("n_list must be strictly ascending");
    }
    std::vector<GrowthRow> rows;
    for (std::size_t n : n_list) {
        GrowthRow row{n, extremal_sets(form, n, options).M, (static_cast<std::uint64_t>(n) * n + 3) / 4};
        ensure_invariant(row.M >= row.lower_bound, "quadratic growth violated at n = " + std::to_string(n));
        rows.push_back(row);
    }
    return rows;
}

std::string growth_csv(const std::vector<GrowthRow>& rows)
{
    std::ostringstream out;
    out << "n,M,lower_bound\n";
    for (const auto& r : rows) out << r.n << ',' << r.M << ',' << r.lower_bound << '\n';
    return out.str();
}

} // namespace eszlab
