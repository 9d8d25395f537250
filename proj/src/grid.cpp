#include "eszlab/grid.hpp"

#include <algorithm>

#include "eszlab/errors.hpp"

namespace eszlab {

GridSet::GridSet(std::vector<GaussRat> values) : elements_(std::move(values))
{
    std::sort(elements_.begin(), elements_.end());
    auto dup = std::adjacent_find(elements_.begin(), elements_.end());
    if (dup != elements_.end()) throw InputError("duplicate grid element " + dup->to_string());
}

GridSet GridSet::from_unique(std::vector<GaussRat> values)
{
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    GridSet g;
    g.elements_ = std::move(values);
    return g;
}

GridSet GridSet::integers(long first, long count, long step)
{
    std::vector<GaussRat> v;
    v.reserve(static_cast<std::size_t>(std::max(count, 0L)));
    for (long k = 0; k < count; ++k) v.emplace_back(first + k * step);
    return GridSet(std::move(v));
}

std::optional<std::size_t> GridSet::index_of(const GaussRat& v) const
{
    auto it = std::lower_bound(elements_.begin(), elements_.end(), v);
    if (it == elements_.end() || !(*it == v)) return std::nullopt;
    return static_cast<std::size_t>(it - elements_.begin());
}

bool GridSet::all_real() const
{
    return std::all_of(elements_.begin(), elements_.end(), [](const GaussRat& v) { return v.is_real(); });
}

} // namespace eszlab
