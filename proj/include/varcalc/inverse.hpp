#pragma once

#include <cstddef>
#include <optional>

#include "varcalc/form.hpp"
#include "varcalc/graded_basis.hpp"
#include "varcalc/source_form.hpp"

namespace varcalc {

struct SolveBounds {
    int jet_order;
    int poly_degree;
};

struct SolveReport {
    std::optional<Form> solution;  // when present, d_H(solution) == target exactly
    std::size_t domain_dim = 0;
    std::size_t codomain_dim = 0;
    int escalations = 0;  // bound increases consumed before success
};

enum class GradedOperator { d_h };

// Solves d_H(xi) = target over the graded basis of the bidegree one lower in
// horizontal degree, within the given bounds. The solution is absent when the
// system is inconsistent at these bounds; any returned solution has been
// re-checked by applying d_H.
SolveReport solve_graded_linear(const Form& target, GradedOperator op, SolveBounds bounds);
SolveReport solve_graded_linear(const Form& target, SolveBounds bounds);

// Exact d_H-potential of a homogeneous (k, s)-form, 1 <= s <= n. The search
// starts at jet order max(jet_order(phi) - 1, 0) and polynomial degree
// deg(phi), escalating the jet order up to jet_order(phi) + 2 (and the degree
// up to deg(phi) + 2, since d_H can lower the base-variable degree) before
// giving up. Throws NotClosedError (s < n, d_H(phi) != 0) or NoPotentialError.
Form dh_potential(const Form& phi, std::optional<SolveBounds> initial_bounds = std::nullopt);

// Volterra construction: L = (sum_i u^i * Etilde_i) * omega, where Etilde_i
// rescales each monomial of fiber degree m by 1/(m+1) — the exact value of
// the homotopy integral for polynomial components. Requires the Helmholtz
// condition; the reconstruction is verified via euler_lagrange before return.
Form volterra_lagrangian(const SourceForm& eps);

// For a variationally trivial Lagrangian returns xi with L = d_H(xi) exactly.
// Throws NotTrivialError (carrying the Euler-Lagrange form) otherwise.
Form triviality_decompose(const Form& lagrangian);

}  // namespace varcalc
