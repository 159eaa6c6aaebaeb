#pragma once

#include <compare>
#include <initializer_list>
#include <vector>

#include "varcalc/bundle.hpp"

namespace varcalc {

// Symmetric multi-index over base coordinate indices: an unordered multiset
// recording which total derivatives were taken. Stored as a multiplicity
// vector with trailing zeros trimmed, so equality is count-map equality.
class MultiIndex {
public:
    MultiIndex() = default;

    // Builds from 1-based base indices in any order, e.g. {1, 2, 1}.
    static MultiIndex of(std::initializer_list<int> indices);
    static MultiIndex of(const std::vector<int>& indices);

    int order() const;            // |Lambda|
    int count(int lambda) const;  // multiplicity of a base index
    int width() const;            // largest base index with nonzero count, 0 if empty
    bool empty() const { return counts_.empty(); }

    // lambda + Lambda: one more derivative in direction lambda (lambda >= 1).
    MultiIndex plus(int lambda) const;

    // Sorted expansion into individual indices, e.g. {1, 1, 2}.
    std::vector<int> letters() const;

    bool operator==(const MultiIndex&) const = default;

    // Graded-lexicographic: by |Lambda| first, then by the sorted letter
    // sequence. Fixed once; every deterministic ordering in the library
    // derives from it.
    std::strong_ordering operator<=>(const MultiIndex& other) const;

private:
    std::vector<int> counts_;  // counts_[k] = multiplicity of base index k+1
    void trim();
};

// lambda + Lambda with the index checked against the bundle's base dimension.
MultiIndex mi_concat(const MultiIndex& mi, int lambda, const Bundle& b);

// All multi-indices with |Lambda| <= max_order over base indices 1..base_dim,
// each exactly once, in graded-lexicographic order.
std::vector<MultiIndex> mi_enumerate(int base_dim, int max_order);

}  // namespace varcalc
