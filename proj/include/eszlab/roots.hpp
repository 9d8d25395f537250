#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

namespace eszlab {

using Complex = std::complex<double>;

struct RootFinderConfig {
    double tol = 1e-12;
    int max_iterations = 200;
};

// All roots, with multiplicity, of sum_k coeffs[k] z^k by Durand-Kerner
// simultaneous iteration. Trailing zero coefficients (highest powers) are
// trimmed first. Each returned r satisfies
//   |p(r)| <= tol * (1+|r|)^deg * max_k |coeffs[k]|.
// Throws ConvergenceError when that is not reached within max_iterations,
// InputError for a constant polynomial.
std::vector<Complex> complex_roots(std::span<const Complex> coeffs, const RootFinderConfig& config = {});

Complex horner(std::span<const Complex> coeffs, Complex z);

// Scaled residual |p(r)| / ((1+|r|)^deg * max|c_k|).
double scaled_residual(std::span<const Complex> coeffs, Complex r);

} // namespace eszlab
