#include "eszlab/roots.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "eszlab/errors.hpp"

namespace eszlab {

Complex horner(std::span<const Complex> coeffs, Complex z)
{
    Complex acc = 0.0;
    for (std::size_t k = coeffs.size(); k-- > 0;) acc = acc * z + coeffs[k];
    return acc;
}

double scaled_residual(std::span<const Complex> coeffs, Complex r)
{
    double norm = 0.0;
    for (const auto& c : coeffs) norm = std::max(norm, std::abs(c));
    if (norm == 0.0) return 0.0;
    double deg = static_cast<double>(coeffs.size() - 1);
    return std::abs(horner(coeffs, r)) / (std::pow(1.0 + std::abs(r), deg) * norm);
}

std::vector<Complex> complex_roots(std::span<const Complex> coeffs, const RootFinderConfig& config)
{
    std::size_t n = coeffs.size();
    while (n > 0 && coeffs[n - 1] == Complex(0.0)) --n;
    if (n <= 1) throw InputError("complex_roots: polynomial has no roots (degree < 1)");
    std::vector<Complex> p(coeffs.begin(), coeffs.begin() + static_cast<std::ptrdiff_t>(n));
    const std::size_t deg = n - 1;

    // Normalize to a monic polynomial.
    const Complex lead = p[deg];
    for (auto& c : p) c /= lead;
    if (deg == 1) return {-p[0]};

    double radius = 0.0;
    for (std::size_t k = 0; k < deg; ++k) radius = std::max(radius, std::abs(p[k]));
    radius += 1.0;

    // Offset by a fixed irrational rotation so no start point sits on a
    // symmetry axis of a real polynomial.
    constexpr double kRotation = 0.4 * std::numbers::sqrt2;
    std::vector<Complex> z(deg);
    for (std::size_t k = 0; k < deg; ++k) {
        double angle = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(deg) + kRotation;
        z[k] = std::polar(radius, angle);
    }

    auto converged = [&]() {
        return std::all_of(z.begin(), z.end(), [&](Complex r) { return scaled_residual(p, r) <= config.tol; });
    };

    for (int it = 0; it < config.max_iterations; ++it) {
        double max_step = 0.0;
        for (std::size_t k = 0; k < deg; ++k) {
            Complex denom = 1.0;
            for (std::size_t j = 0; j < deg; ++j) {
                if (j != k) denom *= (z[k] - z[j]);
            }
            if (std::abs(denom) == 0.0) denom = Complex(1e-300, 0.0);
            Complex step = horner(p, z[k]) / denom;
            z[k] -= step;
            max_step = std::max(max_step, std::abs(step) / (1.0 + std::abs(z[k])));
        }
        if (max_step < 1e-15 || converged()) {
            if (converged()) return z;
        }
    }
    if (converged()) return z;
    throw ConvergenceError("complex_roots: no convergence after " + std::to_string(config.max_iterations) +
                           " iterations (degree " + std::to_string(deg) + ")");
}

} // namespace eszlab
