#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "eszlab/mpoly.hpp"
#include "eszlab/roots.hpp"

namespace eszlab {

// Quotient and remainder of multivariate division by the grlex leading term.
std::pair<MPoly, MPoly> divide(const MPoly& f, const MPoly& g);

// f / g when g divides f; std::nullopt otherwise.
std::optional<MPoly> try_divide_exact(const MPoly& f, const MPoly& g);
// f / g, throwing InvariantViolation when the division is not exact.
MPoly divide_exact(const MPoly& f, const MPoly& g);
bool divides(const MPoly& g, const MPoly& f);

struct PseudoDivision {
    MPoly remainder;
    unsigned multiplier_power = 0;  // lc^k * f = q * g + remainder
};

// Pseudo-remainder of f by g viewed as polynomials in var; the leading
// coefficient of g is applied only as often as needed.
PseudoDivision pseudo_remainder(const MPoly& f, const MPoly& g, const std::string& var);

// Sylvester resultant eliminating var, by fraction-free (Bareiss)
// elimination. The result lives over the remaining variables.
// Throws InputError when either input has degree 0 in var.
MPoly resultant(const MPoly& f, const MPoly& g, const std::string& var);

// Determinant of a square matrix of polynomials by Bareiss elimination.
MPoly bareiss_determinant(std::vector<std::vector<MPoly>> m, const std::vector<std::string>& vars);

// Greatest common divisor normalized to grlex-leading coefficient 1;
// gcd(0, 0) = 0.
MPoly poly_gcd(const MPoly& f, const MPoly& g);
MPoly poly_gcd(const std::vector<MPoly>& polys);

// gcd of the coefficients of f as a polynomial in var.
MPoly content_in(const MPoly& f, const std::string& var);
MPoly primitive_part_in(const MPoly& f, const std::string& var);

// Product of the distinct irreducible factors of f (up to a constant),
// normalized monic. Throws InputError for f = 0.
MPoly squarefree_part(const MPoly& f);

// Roots in Q(i) of a univariate polynomial (one used variable, or constant).
// roots are distinct; residual is the monic cofactor carrying the roots that
// are not Gaussian rationals (constant 1 when there are none).
struct GaussianRoots {
    std::vector<GaussRat> roots;
    MPoly residual;
};
GaussianRoots gaussian_rational_roots(const MPoly& univariate, const RootFinderConfig& config = {});

// Coefficients of a univariate polynomial in var as doubles, index = power.
std::vector<Complex> numeric_coefficients(const MPoly& univariate, const std::string& var);

} // namespace eszlab
