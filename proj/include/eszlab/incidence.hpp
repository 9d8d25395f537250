#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "eszlab/curves.hpp"
#include "eszlab/errors.hpp"
#include "eszlab/grid.hpp"

namespace eszlab {

using Point2 = std::pair<GaussRat, GaussRat>;

// Points inside the Cartesian product of two grids, without duplicates.
class PointSet2 {
public:
    PointSet2(std::array<GridSet, 2> ambient, std::vector<Point2> members);
    static PointSet2 full(const GridSet& a1, const GridSet& a2);

    const std::array<GridSet, 2>& ambient() const { return ambient_; }
    const std::vector<Point2>& members() const { return members_; }
    std::size_t size() const { return members_.size(); }
    std::uint64_t ambient_size() const { return ambient_[0].size() * ambient_[1].size(); }

    PointSet2 subset(const std::vector<std::size_t>& indices) const;

private:
    std::array<GridSet, 2> ambient_;
    std::vector<Point2> members_;
};

struct CurveEntry {
    PlaneCurve curve;
    std::size_t multiplicity = 1;
};

class CurveMultiset {
public:
    CurveMultiset() = default;
    explicit CurveMultiset(std::vector<CurveEntry> entries);

    const std::vector<CurveEntry>& entries() const { return entries_; }
    std::size_t num_entries() const { return entries_.size(); }
    std::uint64_t total() const;
    int max_degree() const;

private:
    std::vector<CurveEntry> entries_;
};

// Incidences with multiplicity, by exact evaluation.
std::uint64_t incidence_count(const PointSet2& pts, const CurveMultiset& curves);

// One copy of one multiset entry.
struct CurveCopy {
    std::size_t entry = 0;
    std::size_t copy = 0;
    friend auto operator<=>(const CurveCopy&, const CurveCopy&) = default;
};

struct CurveViolation {
    CurveCopy curve;
    // Other curve copies sharing more than mu points with it.
    std::size_t conflicts = 0;
};

struct PointViolation {
    std::size_t point = 0;
    // Other points lying on more than mu common curves.
    std::size_t conflicts = 0;
};

struct MultiplicityVerdict {
    bool holds = true;
    std::vector<CurveViolation> curve_violations;
    std::vector<PointViolation> point_violations;
};

// Definition of (lambda, mu)-bounded multiplicity. Copies of the same
// multiset entry always conflict with each other.
MultiplicityVerdict bounded_multiplicity_check(const PointSet2& pts, const CurveMultiset& curves, std::uint64_t lambda,
                                               std::uint64_t mu);

class MultiplicityError : public InputError {
public:
    explicit MultiplicityError(MultiplicityVerdict verdict);
    const MultiplicityVerdict& verdict() const { return verdict_; }

private:
    MultiplicityVerdict verdict_;
};

struct MultiplicityPartition {
    std::vector<std::vector<std::size_t>> point_classes;
    std::vector<std::vector<CurveCopy>> curve_classes;
};

// Greedy colorings of the point- and curve-conflict graphs, at most
// lambda + 1 classes each. Throws MultiplicityError when the system does not
// have (lambda, mu)-bounded multiplicity.
MultiplicityPartition multiplicity_partition(const PointSet2& pts, const CurveMultiset& curves, std::uint64_t lambda,
                                             std::uint64_t mu);

// Sub-multiset holding the given copies.
CurveMultiset curve_class(const CurveMultiset& curves, const std::vector<CurveCopy>& copies);

struct IncidenceReport {
    std::uint64_t I = 0;
    std::uint64_t trivial_bound = 0;
    // Right-hand sides with all constants set to 1; never asserted.
    double thm41_reference = 0.0;
    double thm43_reference = 0.0;
    // Absent when the system is not (lambda, mu)-bounded.
    std::optional<std::size_t> classes_points;
    std::optional<std::size_t> classes_curves;
};

IncidenceReport incidence_bound_report(const PointSet2& pts, const CurveMultiset& curves, int delta,
                                       std::uint64_t lambda, std::uint64_t mu);

} // namespace eszlab
