#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "eszlab/mpoly.hpp"
#include "eszlab/roots.hpp"

namespace eszlab {

// Variables of the fiber product, in this order.
const std::vector<std::string>& quad_variables();

// The four copies F(x,y,z1), F(x,y',z2), F(x',y,z3), F(x',y',z4) of F,
// whose variables are taken in the role order (x, y, z).
struct QuadSystem {
    MPoly F;
    std::array<MPoly, 4> copies;

    explicit QuadSystem(const MPoly& F);
};

// G = F2(x,y,z1) F1(x,y',z2) F1(x',y,z3) F2(x',y',z4)
//   - F1(x,y,z1) F2(x,y',z2) F2(x',y,z3) F1(x',y',z4)
// with Fk the partial derivative along the k-th variable.
class GPoly {
public:
    // Throws InputError when a partial derivative of F vanishes identically.
    explicit GPoly(const MPoly& F);

    const MPoly& value() const { return value_; }
    const std::array<MPoly, 3>& partials() const { return partials_; }

private:
    std::array<MPoly, 3> partials_;
    MPoly value_;
};

GPoly build_G(const MPoly& F);

// Pseudo-remainder of G by the copies in z4, z3, z2, z1. Its degree in each
// z_i is below the degree of F in z, so it is free of z1..z4 when F is
// linear in z.
MPoly reduce_mod_V(const GPoly& g, const QuadSystem& sys);

using Point8 = std::array<Complex, 8>;

struct VSample {
    Point8 point;
    Complex G;
    double abs_G = 0.0;
    double min_abs_F3 = 0.0;
    double max_residual = 0.0;
    // 10^3 tol (1 + |point|)^deg G
    double threshold = 0.0;
};

struct SampleSet {
    std::vector<VSample> points;
    std::size_t draws = 0;
    std::size_t on_V0 = 0;
    std::size_t root_failures = 0;
};

// Random (x,x',y,y') with real and imaginary parts in [-5,5] + U[0,1),
// completed to points of V by solving each copy for its z; keeps the points
// off V0 whose scaled copy residuals are at most tol.
SampleSet sample_V_points(const QuadSystem& sys, const GPoly& g, std::size_t n_samples, std::uint64_t seed,
                          double tol);

enum class Verdict { degenerate, nondegenerate, inconclusive };
std::string to_string(Verdict v);

struct DegeneracyConfig {
    std::size_t samples = 32;
    std::uint64_t seed = 0xE5CAB0;
    double tol = 1e-12;
};

struct DegeneracyVerdict {
    Verdict verdict = Verdict::inconclusive;
    bool g_identically_zero = false;
    // Absent only when the pipeline never reached the reduction.
    std::optional<MPoly> remainder;
    std::vector<VSample> samples;
    std::size_t n_samples = 0;
    double max_abs_G = 0.0;
    std::vector<std::string> caveats;
};

DegeneracyVerdict degeneracy_test(const MPoly& F, const DegeneracyConfig& config = {});

struct JacobianCheck {
    Complex det_times_F3;
    Complex G;
    double relative_error = 0.0;
    bool consistent = false;
};

// Compares det(J) * prod F3 with G at a point of V off V0. Throws InputError
// when the point is not on V within tol or lies within tol of V0.
JacobianCheck jacobian_consistency(const MPoly& F, const Point8& point, double tol = 1e-12, double rel_tol = 1e-6);

} // namespace eszlab
