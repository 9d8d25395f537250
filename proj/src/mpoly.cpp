#include "eszlab/mpoly.hpp"

#include <algorithm>
#include <numeric>

#include "eszlab/errors.hpp"

namespace eszlab {

bool GrlexLess::operator()(const Exponent& a, const Exponent& b) const
{
    std::uint64_t da = std::accumulate(a.begin(), a.end(), std::uint64_t{0});
    std::uint64_t db = std::accumulate(b.begin(), b.end(), std::uint64_t{0});
    if (da != db) return da < db;
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

std::vector<std::string> merge_vars(const std::vector<std::string>& a, const std::vector<std::string>& b)
{
    std::vector<std::string> out = a;
    for (const auto& v : b) {
        if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
    }
    return out;
}

MPoly::MPoly(std::vector<std::string> vars) : vars_(std::move(vars))
{
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        for (std::size_t j = i + 1; j < vars_.size(); ++j) {
            if (vars_[i] == vars_[j]) throw InputError("duplicate variable '" + vars_[i] + "'");
        }
    }
}

MPoly::MPoly(std::vector<std::string> vars, const GaussRat& constant) : MPoly(std::move(vars))
{
    if (!constant.is_zero()) terms_.emplace(Exponent(vars_.size(), 0), constant);
}

MPoly MPoly::variable(const std::string& name, std::vector<std::string> vars)
{
    MPoly p(std::move(vars));
    Exponent e(p.vars_.size(), 0);
    e[p.var_index(name)] = 1;
    p.terms_.emplace(std::move(e), GaussRat(1));
    return p;
}

MPoly MPoly::monomial(std::vector<std::string> vars, Exponent exp, GaussRat coeff)
{
    MPoly p(std::move(vars));
    if (exp.size() != p.vars_.size()) throw InputError("exponent length does not match variable count");
    if (!coeff.is_zero()) p.terms_.emplace(std::move(exp), std::move(coeff));
    return p;
}

bool MPoly::is_constant() const
{
    if (terms_.empty()) return true;
    if (terms_.size() > 1) return false;
    const auto& e = terms_.begin()->first;
    return std::all_of(e.begin(), e.end(), [](auto k) { return k == 0; });
}

GaussRat MPoly::constant_term() const
{
    if (terms_.empty()) return GaussRat(0);
    // The zero exponent is the grlex minimum.
    const auto& [e, c] = *terms_.begin();
    if (std::all_of(e.begin(), e.end(), [](auto k) { return k == 0; })) return c;
    return GaussRat(0);
}

int MPoly::degree() const
{
    if (terms_.empty()) return kZeroDegree;
    const auto& e = terms_.rbegin()->first;
    return static_cast<int>(std::accumulate(e.begin(), e.end(), std::uint64_t{0}));
}

bool MPoly::has_var(const std::string& var) const
{
    return std::find(vars_.begin(), vars_.end(), var) != vars_.end();
}

std::size_t MPoly::var_index(const std::string& var) const
{
    auto it = std::find(vars_.begin(), vars_.end(), var);
    if (it == vars_.end()) throw InputError("unknown variable '" + var + "'");
    return static_cast<std::size_t>(it - vars_.begin());
}

int MPoly::degree_in(const std::string& var) const
{
    if (terms_.empty()) return kZeroDegree;
    if (!has_var(var)) return 0;
    std::size_t k = var_index(var);
    std::uint32_t d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e[k]);
    return static_cast<int>(d);
}

bool MPoly::depends_on(const std::string& var) const
{
    return degree_in(var) > 0;
}

std::vector<std::string> MPoly::used_vars() const
{
    std::vector<std::string> out;
    for (std::size_t k = 0; k < vars_.size(); ++k) {
        for (const auto& [e, c] : terms_) {
            if (e[k] > 0) {
                out.push_back(vars_[k]);
                break;
            }
        }
    }
    return out;
}

const Exponent& MPoly::leading_exponent() const
{
    if (terms_.empty()) throw InputError("leading term of the zero polynomial");
    return terms_.rbegin()->first;
}

const GaussRat& MPoly::leading_coefficient() const
{
    if (terms_.empty()) throw InputError("leading coefficient of the zero polynomial");
    return terms_.rbegin()->second;
}

MPoly MPoly::monic() const
{
    if (terms_.empty() || leading_coefficient().is_one()) return *this;
    return *this * leading_coefficient().inverse();
}

MPoly MPoly::with_vars(const std::vector<std::string>& new_vars) const
{
    if (new_vars == vars_) return *this;
    MPoly out(new_vars);
    std::vector<std::size_t> target(vars_.size());
    std::vector<bool> present(vars_.size(), false);
    for (std::size_t k = 0; k < vars_.size(); ++k) {
        auto it = std::find(new_vars.begin(), new_vars.end(), vars_[k]);
        if (it != new_vars.end()) {
            target[k] = static_cast<std::size_t>(it - new_vars.begin());
            present[k] = true;
        }
    }
    for (const auto& [e, c] : terms_) {
        Exponent ne(new_vars.size(), 0);
        for (std::size_t k = 0; k < vars_.size(); ++k) {
            if (e[k] == 0) continue;
            if (!present[k]) throw InputError("variable '" + vars_[k] + "' missing from target variable list");
            ne[target[k]] = e[k];
        }
        out.terms_.emplace(std::move(ne), c);
    }
    return out;
}

MPoly MPoly::rename(const std::map<std::string, std::string>& mapping) const
{
    std::vector<std::string> nv = vars_;
    for (auto& v : nv) {
        auto it = mapping.find(v);
        if (it != mapping.end()) v = it->second;
    }
    MPoly out(nv);
    out.terms_ = terms_;
    return out;
}

MPoly MPoly::eval(const std::map<std::string, GaussRat>& assignment) const
{
    std::vector<std::string> rest;
    std::vector<int> keep;  // index into rest, or -1 when substituted
    std::vector<const GaussRat*> value(vars_.size(), nullptr);
    for (const auto& [name, v] : assignment) {
        if (!has_var(name)) throw InputError("assignment to unknown variable '" + name + "'");
    }
    for (std::size_t k = 0; k < vars_.size(); ++k) {
        auto it = assignment.find(vars_[k]);
        if (it == assignment.end()) {
            keep.push_back(static_cast<int>(rest.size()));
            rest.push_back(vars_[k]);
        } else {
            keep.push_back(-1);
            value[k] = &it->second;
        }
    }
    // Power tables per substituted variable.
    std::vector<std::vector<GaussRat>> powers(vars_.size());
    for (std::size_t k = 0; k < vars_.size(); ++k) {
        if (!value[k]) continue;
        std::uint32_t d = 0;
        for (const auto& [e, c] : terms_) d = std::max(d, e[k]);
        powers[k].reserve(d + 1);
        powers[k].emplace_back(1);
        for (std::uint32_t j = 1; j <= d; ++j) powers[k].push_back(powers[k].back() * *value[k]);
    }
    MPoly out(rest);
    for (const auto& [e, c] : terms_) {
        GaussRat coeff = c;
        Exponent ne(rest.size(), 0);
        for (std::size_t k = 0; k < vars_.size(); ++k) {
            if (keep[k] >= 0) {
                ne[static_cast<std::size_t>(keep[k])] = e[k];
            } else if (e[k] > 0) {
                coeff *= powers[k][e[k]];
            }
        }
        out.add_term(ne, coeff);
    }
    return out;
}

GaussRat MPoly::eval_full(std::span<const GaussRat> values) const
{
    if (values.size() != vars_.size()) throw InputError("eval_full: wrong number of values");
    GaussRat sum(0);
    for (const auto& [e, c] : terms_) {
        GaussRat t = c;
        for (std::size_t k = 0; k < e.size(); ++k) {
            if (e[k] > 0) t *= pow(values[k], e[k]);
        }
        sum += t;
    }
    return sum;
}

MPoly MPoly::substitute(const std::string& var, const MPoly& image) const
{
    if (!has_var(var)) return *this;
    std::vector<std::string> others;
    for (const auto& v : vars_) {
        if (v != var) others.push_back(v);
    }
    std::vector<std::string> out_vars = merge_vars(others, image.vars());
    auto coeffs = coefficients_in(var);
    // Horner in the image.
    MPoly img = image.with_vars(out_vars);
    MPoly acc(out_vars);
    for (std::size_t j = coeffs.size(); j-- > 0;) {
        acc = acc * img + coeffs[j].with_vars(out_vars);
    }
    return acc;
}

MPoly MPoly::derivative(const std::string& var) const
{
    MPoly out(vars_);
    if (!has_var(var)) return out;
    std::size_t k = var_index(var);
    for (const auto& [e, c] : terms_) {
        if (e[k] == 0) continue;
        Exponent ne = e;
        ne[k] -= 1;
        out.add_term(ne, c * GaussRat(static_cast<long>(e[k])));
    }
    return out;
}

std::vector<MPoly> MPoly::coefficients_in(const std::string& var) const
{
    std::vector<std::string> rest;
    for (const auto& v : vars_) {
        if (v != var) rest.push_back(v);
    }
    int d = std::max(degree_in(var), 0);
    std::vector<MPoly> out(static_cast<std::size_t>(d) + 1, MPoly(rest));
    if (!has_var(var)) {
        out[0] = *this;
        return out;
    }
    std::size_t k = var_index(var);
    for (const auto& [e, c] : terms_) {
        Exponent ne;
        ne.reserve(rest.size());
        for (std::size_t j = 0; j < e.size(); ++j) {
            if (j != k) ne.push_back(e[j]);
        }
        out[e[k]].add_term(ne, c);
    }
    return out;
}

void MPoly::add_term(const Exponent& exp, const GaussRat& coeff)
{
    if (coeff.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(exp, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

MPoly& MPoly::operator+=(const MPoly& o)
{
    if (o.vars_ != vars_) {
        auto nv = merge_vars(vars_, o.vars_);
        *this = with_vars(nv);
        MPoly other = o.with_vars(nv);
        for (const auto& [e, c] : other.terms_) add_term(e, c);
        return *this;
    }
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

MPoly& MPoly::operator-=(const MPoly& o)
{
    return *this += -o;
}

MPoly MPoly::operator-() const
{
    MPoly out = *this;
    for (auto& [e, c] : out.terms_) c = -c;
    return out;
}

MPoly operator*(const MPoly& a, const MPoly& b)
{
    if (a.vars_ != b.vars_) {
        auto nv = merge_vars(a.vars_, b.vars_);
        return a.with_vars(nv) * b.with_vars(nv);
    }
    MPoly out(a.vars_);
    if (a.is_zero() || b.is_zero()) return out;
    Exponent e(a.vars_.size());
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            for (std::size_t k = 0; k < e.size(); ++k) e[k] = ea[k] + eb[k];
            out.add_term(e, ca * cb);
        }
    }
    return out;
}

MPoly& MPoly::operator*=(const MPoly& o)
{
    *this = *this * o;
    return *this;
}

MPoly& MPoly::operator*=(const GaussRat& c)
{
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_) v *= c;
    return *this;
}

bool operator==(const MPoly& a, const MPoly& b)
{
    if (a.vars_ == b.vars_) return a.terms_ == b.terms_;
    if (a.terms_.size() != b.terms_.size()) return false;
    auto nv = merge_vars(a.vars_, b.vars_);
    return a.with_vars(nv).terms_ == b.with_vars(nv).terms_;
}

MPoly pow(const MPoly& base, unsigned exponent)
{
    MPoly result(base.vars(), GaussRat(1));
    MPoly b = base;
    while (exponent) {
        if (exponent & 1u) result *= b;
        exponent >>= 1;
        if (exponent) b = b * b;
    }
    return result;
}

namespace {

std::string coefficient_text(const GaussRat& c, bool& negative)
{
    negative = false;
    if (c.is_real()) {
        if (sgn(c.re()) < 0) {
            negative = true;
            return mpq_class(-c.re()).get_str();
        }
        return c.re().get_str();
    }
    if (sgn(c.re()) == 0) {
        if (sgn(c.im()) < 0) {
            negative = true;
            return GaussRat(mpq_class(0), -c.im()).to_string();
        }
        return c.to_string();
    }
    return "(" + c.to_string() + ")";
}

} // namespace

std::string MPoly::to_string() const
{
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        bool negative = false;
        std::string coeff = coefficient_text(c, negative);
        std::string mono;
        for (std::size_t k = 0; k < e.size(); ++k) {
            if (e[k] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += vars_[k];
            if (e[k] > 1) mono += "^" + std::to_string(e[k]);
        }
        std::string term;
        if (mono.empty()) term = coeff;
        else if (coeff == "1") term = mono;
        else term = coeff + "*" + mono;
        if (first) out += negative ? "-" + term : term;
        else out += negative ? " - " + term : " + " + term;
        first = false;
    }
    return out;
}

UPolyView::UPolyView(MPoly base_poly, std::string variable)
    : base(std::move(base_poly)), var(std::move(variable)), coeffs(base.coefficients_in(var))
{
}

MPoly UPolyView::reassemble() const
{
    std::vector<std::string> nv = base.vars();
    if (std::find(nv.begin(), nv.end(), var) == nv.end()) nv.push_back(var);
    MPoly x = MPoly::variable(var, nv);
    MPoly acc(nv);
    for (std::size_t j = coeffs.size(); j-- > 0;) acc = acc * x + coeffs[j].with_vars(nv);
    return acc;
}

} // namespace eszlab
