#pragma once

#include <compare>

#include "varcalc/multi_index.hpp"

namespace varcalc {

// One jet coordinate: either a base variable x^lambda or a fiber derivative
// coordinate u^i_Lambda (u^i itself when Lambda is empty).
class JetVariable {
public:
    static JetVariable base(int lambda) { return JetVariable(false, lambda, MultiIndex()); }
    static JetVariable fiber(int i, MultiIndex mi = MultiIndex()) {
        return JetVariable(true, i, std::move(mi));
    }

    bool is_base() const { return !fiber_; }
    bool is_fiber() const { return fiber_; }
    int index() const { return index_; }                 // lambda or i
    const MultiIndex& multi() const { return multi_; }   // empty for base variables
    int jet_order() const { return fiber_ ? multi_.order() : 0; }

    bool operator==(const JetVariable&) const = default;

    // Base variables before fiber variables; base by lambda; fiber by
    // (i, Lambda) with Lambda in graded-lex order.
    std::strong_ordering operator<=>(const JetVariable& other) const {
        if (fiber_ != other.fiber_) return fiber_ <=> other.fiber_;
        if (index_ != other.index_) return index_ <=> other.index_;
        return multi_ <=> other.multi_;
    }

private:
    JetVariable(bool fiber, int index, MultiIndex mi)
        : fiber_(fiber), index_(index), multi_(std::move(mi)) {
        if (index < 1) throw std::invalid_argument("JetVariable: index must be >= 1");
    }

    bool fiber_;
    int index_;
    MultiIndex multi_;
};

}  // namespace varcalc
