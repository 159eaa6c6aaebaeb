#include "varcalc/linear_solve.hpp"

#include <algorithm>
#include <limits>

namespace varcalc {

namespace {

// row -= factor * pivot; both entry lists sorted, zeros dropped.
void eliminate(SparseRow& row, const SparseRow& pivot, const Rational& factor) {
    std::vector<std::pair<std::size_t, Rational>> merged;
    merged.reserve(row.entries.size() + pivot.entries.size());
    std::size_t a = 0, b = 0;
    while (a < row.entries.size() || b < pivot.entries.size()) {
        if (b == pivot.entries.size() ||
            (a < row.entries.size() && row.entries[a].first < pivot.entries[b].first)) {
            merged.push_back(row.entries[a++]);
        } else if (a == row.entries.size() || pivot.entries[b].first < row.entries[a].first) {
            merged.emplace_back(pivot.entries[b].first, -factor * pivot.entries[b].second);
            ++b;
        } else {
            Rational v = row.entries[a].second - factor * pivot.entries[b].second;
            if (v != 0) merged.emplace_back(row.entries[a].first, std::move(v));
            ++a;
            ++b;
        }
    }
    row.entries = std::move(merged);
    row.rhs -= factor * pivot.rhs;
}

}  // namespace

std::optional<std::vector<Rational>> solve_sparse_exact(std::size_t num_cols,
                                                        std::vector<SparseRow> rows) {
    std::vector<char> is_pivot_row(rows.size(), 0);
    std::vector<std::pair<std::size_t, std::size_t>> pivots;  // (column, row)

    for (std::size_t col = 0; col < num_cols; ++col) {
        // Active rows carry no entries below `col`, so a row meets this
        // column iff its first entry sits there. Shortest row wins.
        std::size_t best = std::numeric_limits<std::size_t>::max();
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (is_pivot_row[r] || rows[r].entries.empty()) continue;
            if (rows[r].entries.front().first != col) continue;
            if (best == std::numeric_limits<std::size_t>::max() ||
                rows[r].entries.size() < rows[best].entries.size())
                best = r;
        }
        if (best == std::numeric_limits<std::size_t>::max()) continue;  // free column

        const Rational& pivot_value = rows[best].entries.front().second;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == best || is_pivot_row[r] || rows[r].entries.empty()) continue;
            if (rows[r].entries.front().first != col) continue;
            Rational factor = rows[r].entries.front().second / pivot_value;
            eliminate(rows[r], rows[best], factor);
        }
        is_pivot_row[best] = 1;
        pivots.emplace_back(col, best);
    }

    for (std::size_t r = 0; r < rows.size(); ++r)
        if (!is_pivot_row[r] && rows[r].entries.empty() && rows[r].rhs != 0) return std::nullopt;

    std::vector<Rational> solution(num_cols, Rational(0));
    for (auto it = pivots.rbegin(); it != pivots.rend(); ++it) {
        const auto& [col, r] = *it;
        Rational acc = rows[r].rhs;
        const auto& entries = rows[r].entries;
        for (std::size_t k = 1; k < entries.size(); ++k)
            acc -= entries[k].second * solution[entries[k].first];
        solution[col] = acc / entries.front().second;
    }
    return solution;
}

}  // namespace varcalc
