#pragma once

#include <compare>

#include "varcalc/multi_index.hpp"

namespace varcalc {

// Generator of the exterior algebra in the contact basis: either a horizontal
// dx^lambda or a contact 1-form theta^i_Lambda = du^i_Lambda - u^i_{lambda+Lambda} dx^lambda.
class CoVector {
public:
    static CoVector dx(int lambda) { return CoVector(false, lambda, MultiIndex()); }
    static CoVector theta(int i, MultiIndex mi = MultiIndex()) {
        return CoVector(true, i, std::move(mi));
    }

    bool is_dx() const { return !theta_; }
    bool is_theta() const { return theta_; }
    int index() const { return index_; }
    const MultiIndex& multi() const { return multi_; }
    int jet_order() const { return theta_ ? multi_.order() : 0; }

    bool operator==(const CoVector&) const = default;

    // Canonical wedge order: dx factors (ascending lambda) before theta
    // factors (ascending (i, Lambda)).
    std::strong_ordering operator<=>(const CoVector& other) const {
        if (theta_ != other.theta_) return theta_ <=> other.theta_;
        if (index_ != other.index_) return index_ <=> other.index_;
        return multi_ <=> other.multi_;
    }

private:
    CoVector(bool theta, int index, MultiIndex mi)
        : theta_(theta), index_(index), multi_(std::move(mi)) {
        if (index < 1) throw std::invalid_argument("CoVector: index must be >= 1");
    }

    bool theta_;
    int index_;
    MultiIndex multi_;
};

}  // namespace varcalc
