#pragma once

#include <stdexcept>

namespace varcalc {

// Trivial bundle R^n x R^p -> R^n with one global chart. Base coordinates are
// indexed 1..n, fiber coordinates 1..p.
struct Bundle {
    int base_dim;   // n
    int fiber_dim;  // p

    Bundle(int n, int p) : base_dim(n), fiber_dim(p) {
        if (n < 1) throw std::invalid_argument("Bundle: base_dim must be >= 1");
        if (p < 1) throw std::invalid_argument("Bundle: fiber_dim must be >= 1");
    }

    bool operator==(const Bundle&) const = default;
};

}  // namespace varcalc
