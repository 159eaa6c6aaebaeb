#include "varcalc/multi_index.hpp"

#include <stdexcept>
#include <string>

namespace varcalc {

void MultiIndex::trim() {
    while (!counts_.empty() && counts_.back() == 0) counts_.pop_back();
}

MultiIndex MultiIndex::of(std::initializer_list<int> indices) {
    return of(std::vector<int>(indices));
}

MultiIndex MultiIndex::of(const std::vector<int>& indices) {
    MultiIndex mi;
    for (int lambda : indices) {
        if (lambda < 1) throw std::invalid_argument("MultiIndex: base index must be >= 1");
        if (static_cast<int>(mi.counts_.size()) < lambda) mi.counts_.resize(lambda, 0);
        ++mi.counts_[lambda - 1];
    }
    return mi;
}

int MultiIndex::order() const {
    int s = 0;
    for (int c : counts_) s += c;
    return s;
}

int MultiIndex::count(int lambda) const {
    if (lambda < 1 || lambda > static_cast<int>(counts_.size())) return 0;
    return counts_[lambda - 1];
}

int MultiIndex::width() const { return static_cast<int>(counts_.size()); }

MultiIndex MultiIndex::plus(int lambda) const {
    if (lambda < 1) throw std::invalid_argument("MultiIndex: base index must be >= 1");
    MultiIndex mi = *this;
    if (static_cast<int>(mi.counts_.size()) < lambda) mi.counts_.resize(lambda, 0);
    ++mi.counts_[lambda - 1];
    return mi;
}

std::vector<int> MultiIndex::letters() const {
    std::vector<int> out;
    for (int k = 0; k < static_cast<int>(counts_.size()); ++k)
        out.insert(out.end(), counts_[k], k + 1);
    return out;
}

std::strong_ordering MultiIndex::operator<=>(const MultiIndex& other) const {
    if (auto c = order() <=> other.order(); c != 0) return c;
    return letters() <=> other.letters();
}

MultiIndex mi_concat(const MultiIndex& mi, int lambda, const Bundle& b) {
    if (lambda < 1 || lambda > b.base_dim)
        throw std::out_of_range("mi_concat: base index " + std::to_string(lambda) +
                                " outside 1.." + std::to_string(b.base_dim));
    return mi.plus(lambda);
}

namespace {

void enumerate_order(int base_dim, int order, int min_index, MultiIndex prefix,
                     std::vector<MultiIndex>& out) {
    if (order == 0) {
        out.push_back(std::move(prefix));
        return;
    }
    for (int lambda = min_index; lambda <= base_dim; ++lambda)
        enumerate_order(base_dim, order - 1, lambda, prefix.plus(lambda), out);
}

}  // namespace

std::vector<MultiIndex> mi_enumerate(int base_dim, int max_order) {
    if (base_dim < 1) throw std::invalid_argument("mi_enumerate: base_dim must be >= 1");
    if (max_order < 0) throw std::invalid_argument("mi_enumerate: max_order must be >= 0");
    std::vector<MultiIndex> out;
    for (int s = 0; s <= max_order; ++s) enumerate_order(base_dim, s, 1, MultiIndex(), out);
    return out;
}

}  // namespace varcalc
