#pragma once

#include <optional>
#include <string>
#include <vector>

#include "eszlab/gauss_rat.hpp"

namespace eszlab {

// Finite set of Gaussian rationals kept sorted by (re, im).
class GridSet {
public:
    GridSet() = default;
    // Sorts; throws InputError on duplicates.
    explicit GridSet(std::vector<GaussRat> values);
    // Sorts and drops duplicates.
    static GridSet from_unique(std::vector<GaussRat> values);
    static GridSet integers(long first, long count, long step = 1);

    std::size_t size() const { return elements_.size(); }
    bool empty() const { return elements_.empty(); }
    const std::vector<GaussRat>& elements() const { return elements_; }
    const GaussRat& operator[](std::size_t k) const { return elements_[k]; }
    auto begin() const { return elements_.begin(); }
    auto end() const { return elements_.end(); }

    std::optional<std::size_t> index_of(const GaussRat& v) const;
    bool contains(const GaussRat& v) const { return index_of(v).has_value(); }
    bool all_real() const;

    friend bool operator==(const GridSet&, const GridSet&) = default;

private:
    std::vector<GaussRat> elements_;
};

} // namespace eszlab
