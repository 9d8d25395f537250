// Serial reference implementation kept for testing the parallel engines.

#include <array>

#include "eszlab/counting.hpp"
#include "eszlab/errors.hpp"

namespace eszlab {

std::vector<ZeroTriple> find_zeros_reference(const MPoly& F, const GridSet& A, const GridSet& B, const GridSet& C)
{
    if (F.is_zero()) throw InputError("F is identically zero");
    if (F.num_vars() != 3) throw InputError("F must be declared over exactly three variables");
    std::vector<ZeroTriple> out;
    std::array<GaussRat, 3> point;
    for (std::uint32_t ia = 0; ia < A.size(); ++ia) {
        point[0] = A[ia];
        for (std::uint32_t ib = 0; ib < B.size(); ++ib) {
            point[1] = B[ib];
            for (std::uint32_t ic = 0; ic < C.size(); ++ic) {
                point[2] = C[ic];
                if (F.eval_full(point).is_zero()) out.push_back({ia, ib, ic});
            }
        }
    }
    return out;
}

} // namespace eszlab
