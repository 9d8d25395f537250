#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "eszlab/gauss_rat.hpp"

namespace eszlab {

using Exponent = std::vector<std::uint32_t>;

// Graded lexicographic order: total degree first, ties broken
// lexicographically with the first declared variable most significant.
struct GrlexLess {
    bool operator()(const Exponent& a, const Exponent& b) const;
};

inline constexpr int kZeroDegree = -1;

// Sparse multivariate polynomial over GaussRat.
//
// Polynomials over different variable lists may be combined; the result
// lives over the left operand's variables followed by any new variables of
// the right operand, in order of appearance.
class MPoly {
public:
    using TermMap = std::map<Exponent, GaussRat, GrlexLess>;

    MPoly() = default;
    explicit MPoly(std::vector<std::string> vars);
    MPoly(std::vector<std::string> vars, const GaussRat& constant);

    static MPoly variable(const std::string& name, std::vector<std::string> vars);
    static MPoly variable(const std::string& name) { return variable(name, {name}); }
    static MPoly monomial(std::vector<std::string> vars, Exponent exp, GaussRat coeff);

    const std::vector<std::string>& vars() const { return vars_; }
    const TermMap& terms() const { return terms_; }
    std::size_t num_terms() const { return terms_.size(); }
    std::size_t num_vars() const { return vars_.size(); }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    // Constant term value; the whole value when is_constant().
    GaussRat constant_term() const;

    // Total degree, kZeroDegree for the zero polynomial.
    int degree() const;
    int degree_in(const std::string& var) const;
    bool depends_on(const std::string& var) const;
    bool has_var(const std::string& var) const;
    std::size_t var_index(const std::string& var) const;
    // Variables that actually occur with a positive exponent, in declared order.
    std::vector<std::string> used_vars() const;

    const Exponent& leading_exponent() const;
    const GaussRat& leading_coefficient() const;
    // Scaled so that the grlex-leading coefficient is 1 (zero stays zero).
    MPoly monic() const;

    // Same polynomial over a different variable list; every used variable
    // must appear in new_vars.
    MPoly with_vars(const std::vector<std::string>& new_vars) const;
    MPoly rename(const std::map<std::string, std::string>& mapping) const;

    // Substitutes the listed variables; the result drops them from vars().
    MPoly eval(const std::map<std::string, GaussRat>& assignment) const;
    // Full evaluation with values in vars() order.
    GaussRat eval_full(std::span<const GaussRat> values) const;
    // Replaces var by an arbitrary polynomial.
    MPoly substitute(const std::string& var, const MPoly& image) const;

    MPoly derivative(const std::string& var) const;

    // Coefficients of powers of var, each a polynomial in the remaining variables.
    std::vector<MPoly> coefficients_in(const std::string& var) const;

    MPoly& operator+=(const MPoly& o);
    MPoly& operator-=(const MPoly& o);
    MPoly& operator*=(const MPoly& o);
    MPoly& operator*=(const GaussRat& c);

    friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
    friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
    friend MPoly operator*(const MPoly& a, const MPoly& b);
    friend MPoly operator*(MPoly a, const GaussRat& c) { return a *= c; }
    friend MPoly operator*(const GaussRat& c, MPoly a) { return a *= c; }
    MPoly operator-() const;

    // Semantic equality: variable lists are unified first.
    friend bool operator==(const MPoly& a, const MPoly& b);

    // Canonical text: terms in decreasing grlex order, re-parseable.
    std::string to_string() const;

    void add_term(const Exponent& exp, const GaussRat& coeff);

private:
    std::vector<std::string> vars_;
    TermMap terms_;
};

MPoly pow(const MPoly& base, unsigned exponent);

// Variable list of a followed by the variables of b not already in a.
std::vector<std::string> merge_vars(const std::vector<std::string>& a, const std::vector<std::string>& b);

// Coefficient decomposition base = sum_k coeffs[k] * var^k.
struct UPolyView {
    MPoly base;
    std::string var;
    std::vector<MPoly> coeffs;

    UPolyView(MPoly base_poly, std::string variable);
    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    MPoly reassemble() const;
};

} // namespace eszlab
