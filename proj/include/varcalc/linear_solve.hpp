#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "varcalc/rational.hpp"

namespace varcalc {

// One equation: sorted sparse coefficient row plus right-hand side.
struct SparseRow {
    std::vector<std::pair<std::size_t, Rational>> entries;  // (column, value), ascending
    Rational rhs;
};

// Solves the sparse rational system exactly. Columns are eliminated in
// ascending order; the pivot row is the shortest candidate (lowest index on
// ties), and free columns are fixed to zero, so the returned solution is
// deterministic. Returns nullopt when the system is inconsistent.
std::optional<std::vector<Rational>> solve_sparse_exact(std::size_t num_cols,
                                                        std::vector<SparseRow> rows);

}  // namespace varcalc
