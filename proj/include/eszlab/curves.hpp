#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "eszlab/grid.hpp"
#include "eszlab/mpoly.hpp"

namespace eszlab {

struct CurveFlags {
    bool is_empty = false;
    bool is_full_plane = false;
    bool contains_axis_parallel_line = false;
};

// Plane curve given by a squarefree defining polynomial in two named
// variables, normalized to grlex-leading coefficient 1. The zero polynomial
// gives the full plane and a nonzero constant the empty curve.
class PlaneCurve {
public:
    PlaneCurve(std::array<std::string, 2> vars, const MPoly& defining);

    const std::array<std::string, 2>& vars() const { return vars_; }
    const MPoly& defining() const { return defining_; }
    int degree() const;
    const CurveFlags& flags() const { return flags_; }

    bool contains(const GaussRat& u, const GaussRat& v) const;

    friend bool operator==(const PlaneCurve& a, const PlaneCurve& b)
    {
        return a.vars_ == b.vars_ && a.defining_ == b.defining_;
    }

private:
    std::array<std::string, 2> vars_;
    MPoly defining_;
    CurveFlags flags_;
};

// Zero set of Res_x(F(x,y0,z), F(x,y0',z')) in (z, z'), where F is declared
// over three variables in the role order (x, y, z). The second output
// variable is the third variable name with a prime appended.
PlaneCurve gamma_curve(const MPoly& F, const GaussRat& y0, const GaussRat& y0_prime);
// Same construction with the roles of y and z exchanged; output in (y, y').
PlaneCurve dual_curve(const MPoly& F, const GaussRat& z0, const GaussRat& z0_prime);

enum class ExceptionReason { empty_curve, full_plane, exceptional_value };
std::string to_string(ExceptionReason r);

struct ExceptionalPair {
    GaussRat first, second;
    ExceptionReason reason;
};

struct CurveFamily {
    std::vector<std::pair<GaussRat, GaussRat>> index;
    std::vector<PlaneCurve> curves;
    std::vector<ExceptionalPair> exceptional;
};

// gamma curves for all ordered pairs of distinct elements of B. Pairs whose
// curve is empty or the full plane, or which involve an exceptional value,
// are listed in exceptional and left out of index/curves.
CurveFamily gamma_family(const MPoly& F, const GridSet& B);

enum class Axis { y, z };

struct ExceptionalSet {
    // Verified Gaussian-rational axis values, sorted.
    std::vector<GaussRat> values;
    // Set when part of the answer is not a finite list of Gaussian
    // rationals: either the coefficient system is solvable for every axis
    // value or some candidates are irrational roots of this polynomial.
    std::optional<MPoly> residual;
    std::string residual_reason;
};

// Axis values y0 for which F(x0, y0, .) vanishes identically for some x0 or
// F(., y0, z0) vanishes identically for some z0 (roles of y and z swapped
// for Axis::z).
ExceptionalSet exceptional_set(const MPoly& F, Axis axis);

struct PopularComponent {
    MPoly defining;
    std::size_t multiplicity = 0;
    bool popular = false;
};

struct PopularReport {
    std::vector<PopularComponent> components;
    std::uint64_t threshold = 0;
};

// Common factors of pairs of family members, each with the number of
// members it divides. threshold defaults to d^4 + 1.
PopularReport popular_components(const std::vector<PlaneCurve>& family, int d,
                                 std::optional<std::uint64_t> threshold = std::nullopt);

struct BezoutResult {
    bool common_component = false;
    // Gaussian-rational common points; absent with a common component.
    std::optional<std::vector<std::pair<GaussRat, GaussRat>>> points;
};

// Common component test, then the common points (restricted to the grid
// when one is given, otherwise all Gaussian-rational ones). Asserts the
// number of points is at most deg(c1) * deg(c2).
BezoutResult bezout_check(const PlaneCurve& c1, const PlaneCurve& c2,
                          const std::optional<std::array<GridSet, 2>>& grid = std::nullopt);

struct FamilyIntersection {
    MPoly common_factor;
    // deg(common_factor) when it is nonconstant, else the number of common points.
    int degree = 0;
    std::vector<std::pair<GaussRat, GaussRat>> points;
};

// Asserts degree <= delta^2 with delta the largest degree in the family.
FamilyIntersection family_common_degree(const std::vector<PlaneCurve>& family);

} // namespace eszlab
