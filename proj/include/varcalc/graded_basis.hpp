#pragma once

#include <vector>

#include "varcalc/form.hpp"

namespace varcalc {

// Finite truncation of Q^{k,s}: all monomial-coefficient wedge terms within
// the stated jet-order and polynomial-degree bounds, in a fixed deterministic
// order (wedge words ascending, then coefficient monomials ascending).
struct GradedBasis {
    Bidegree bidegree;
    int max_jet_order;
    int max_poly_degree;
    std::vector<Form> elements;
};

GradedBasis enumerate_graded_basis(const Bundle& b, Bidegree bd, int max_jet_order,
                                   int max_poly_degree);

}  // namespace varcalc
