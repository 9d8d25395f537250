#pragma once

#include <functional>
#include <random>
#include <string>
#include <vector>

#include "eszlab/mpoly.hpp"
#include "eszlab/poly_parse.hpp"

namespace eszlab::testing {

inline MPoly P(const std::string& text, const std::vector<std::string>& vars = {"x", "y", "z"})
{
    return parse_poly(text, vars);
}

inline GaussRat Q(const std::string& text)
{
    return GaussRat::parse(text);
}

inline GaussRat random_rat(std::mt19937_64& gen, int num_range = 9, int den_range = 4, bool complex = false)
{
    std::uniform_int_distribution<int> num(-num_range, num_range);
    std::uniform_int_distribution<int> den(1, den_range);
    GaussRat re = GaussRat::from_ratio(num(gen), den(gen));
    if (!complex) return re;
    return re + GaussRat::from_ratio(num(gen), den(gen)) * GaussRat::i();
}

// Dense-ish random polynomial of total degree <= max_degree with small
// integer coefficients; roughly half the monomials present.
inline MPoly random_poly(std::mt19937_64& gen, const std::vector<std::string>& vars, int max_degree,
                         bool complex = false)
{
    MPoly p(vars);
    std::uniform_int_distribution<int> coin(0, 1);
    std::uniform_int_distribution<int> coeff(-5, 5);
    Exponent e(vars.size(), 0);
    // Enumerate all exponent vectors of total degree <= max_degree.
    std::function<void(std::size_t, int)> rec = [&](std::size_t k, int left) {
        if (k == vars.size()) {
            if (coin(gen)) {
                GaussRat c(coeff(gen));
                if (complex && coin(gen)) c += GaussRat(coeff(gen)) * GaussRat::i();
                p.add_term(e, c);
            }
            return;
        }
        for (int j = 0; j <= left; ++j) {
            e[k] = static_cast<std::uint32_t>(j);
            rec(k + 1, left - j);
        }
        e[k] = 0;
    };
    rec(0, max_degree);
    return p;
}

// Univariate polynomial in var of exact degree deg, nonzero constant-free
// leading coefficient.
inline MPoly random_univariate(std::mt19937_64& gen, const std::string& var, int deg)
{
    std::uniform_int_distribution<int> coeff(-4, 4);
    MPoly p({var});
    for (int k = 0; k <= deg; ++k) {
        int c = coeff(gen);
        if (k == deg && c == 0) c = 1;
        p.add_term(Exponent{static_cast<std::uint32_t>(k)}, GaussRat(c));
    }
    return p;
}

} // namespace eszlab::testing
