#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "eszlab/counting.hpp"
#include "eszlab/grid.hpp"
#include "eszlab/mpoly.hpp"

namespace eszlab {

enum class FormKind { sum, composed, product };
std::string to_string(FormKind k);
FormKind form_kind_from_string(const std::string& s);

// SUM:      p(x) + q(y) + r(z)
// COMPOSED: z - g(h(x) + k(y))
// PRODUCT:  z - g(h(x) * k(y))
// Each part is a nonconstant polynomial in at most one variable; its name
// does not matter. parts holds (p, q, r) or (g, h, k).
class SpecialForm {
public:
    SpecialForm(FormKind kind, std::array<MPoly, 3> parts);

    FormKind kind() const { return kind_; }
    const std::array<MPoly, 3>& parts() const { return parts_; }

private:
    FormKind kind_;
    std::array<MPoly, 3> parts_;
};

// Expanded polynomial over (x, y, z).
MPoly to_poly(const SpecialForm& form);

struct ExtremalSets {
    std::array<GridSet, 3> sets;
    std::uint64_t M = 0;
};

// Pullbacks of arithmetic progressions (linear parts of SUM, or linear h, k
// of COMPOSED) or of geometric progressions (monomial parts of PRODUCT);
// counts the zeros and asserts 4M >= n^2.
ExtremalSets extremal_sets(const SpecialForm& form, std::size_t n, const CountOptions& options = {});

struct GrowthRow {
    std::size_t n = 0;
    std::uint64_t M = 0;
    std::uint64_t lower_bound = 0;  // ceil(n^2 / 4)
};

std::vector<GrowthRow> verify_quadratic_growth(const SpecialForm& form, const std::vector<std::size_t>& n_list,
                                               const CountOptions& options = {});
std::string growth_csv(const std::vector<GrowthRow>& rows);

} // namespace eszlab
