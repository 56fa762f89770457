#pragma once

// Incremental linear span of sparse vectors over Q(i), kept in echelon form
// keyed by leading (largest) monomial. Used by the bounded membership
// oracles.

#include <map>
#include <utility>

#include "nilnull/linear_combination.hpp"

namespace nilnull {

template <class Key, class Compare>
class SpanBasis {
public:
    using Vector = LinearCombination<Key, Compare>;

    /// Reduces v against the basis; the result is zero iff v lies in the span.
    Vector reduce(Vector v) const {
        Vector rest;
        while (!v.is_zero()) {
            auto lead = std::prev(v.end());
            auto it = pivots_.find(lead->first);
            if (it == pivots_.end()) {
                rest.add(lead->first, lead->second);
                v.add(lead->first, -lead->second);
                continue;
            }
            v.add(it->second, -lead->second);
        }
        return rest;
    }

    bool contains(const Vector& v) const { return reduce(v).is_zero(); }

    /// Adds v to the span; returns false if it was already contained.
    bool insert(Vector v) {
        while (!v.is_zero()) {
            auto lead = std::prev(v.end());
            auto it = pivots_.find(lead->first);
            if (it == pivots_.end()) {
                Key k = lead->first;
                v *= lead->second.inv();
                pivots_.emplace(std::move(k), std::move(v));
                return true;
            }
            v.add(it->second, -lead->second);
        }
        return false;
    }

    std::size_t dimension() const { return pivots_.size(); }

private:
    std::map<Key, Vector, Compare> pivots_;
};

}  // namespace nilnull
