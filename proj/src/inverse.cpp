#include "varcalc/inverse.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "varcalc/errors.hpp"
#include "varcalc/linear_solve.hpp"
#include "varcalc/variational.hpp"

namespace varcalc {

namespace {

using RowKey = std::pair<WedgeWord, Monomial>;

void scatter(const Form& phi, std::size_t col, std::map<RowKey, SparseRow>& rows) {
    for (const auto& [w, f] : phi.terms())
        for (const auto& [m, c] : f.terms())
            rows[{w, m}].entries.emplace_back(col, c);
}

}  // namespace

SolveReport solve_graded_linear(const Form& target, GradedOperator, SolveBounds bounds) {
    return solve_graded_linear(target, bounds);
}

SolveReport solve_graded_linear(const Form& target, SolveBounds bounds) {
    auto bd = target.bidegree();
    if (!bd) throw std::invalid_argument("solve_graded_linear: target must be homogeneous");
    if (bd->horizontal < 1)
        throw std::invalid_argument("solve_graded_linear: target has horizontal degree 0");

    const Bidegree candidate_bd{bd->contact, bd->horizontal - 1};
    GradedBasis basis =
        enumerate_graded_basis(target.bundle(), candidate_bd, bounds.jet_order, bounds.poly_degree);

    // Row per (wedge word, monomial) pair occurring in any image or in the
    // target; deterministic because the map is ordered.
    std::map<RowKey, SparseRow> rows;
    for (std::size_t j = 0; j < basis.elements.size(); ++j)
        scatter(horizontal_d(basis.elements[j]), j, rows);
    for (auto& [key, row] : rows) row.rhs = Rational(0);
    for (const auto& [w, f] : target.terms())
        for (const auto& [m, c] : f.terms()) rows[{w, m}].rhs = c;

    SolveReport report;
    report.domain_dim = basis.elements.size();
    report.codomain_dim = rows.size();

    std::vector<SparseRow> system;
    system.reserve(rows.size());
    for (auto& [key, row] : rows) system.push_back(std::move(row));

    auto coeffs = solve_sparse_exact(basis.elements.size(), std::move(system));
    if (!coeffs) return report;

    Form solution(target.bundle());
    for (std::size_t j = 0; j < basis.elements.size(); ++j)
        if ((*coeffs)[j] != 0) solution += (*coeffs)[j] * basis.elements[j];

    if (!(horizontal_d(solution) == target))
        throw RoundTripError("solve_graded_linear: solution failed re-application check");
    report.solution = std::move(solution);
    return report;
}

Form dh_potential(const Form& phi, std::optional<SolveBounds> initial_bounds) {
    if (phi.is_zero()) return Form(phi.bundle());
    auto bd = phi.bidegree();
    if (!bd) throw std::invalid_argument("dh_potential: target must be homogeneous");
    if (bd->horizontal < 1 || bd->horizontal > phi.bundle().base_dim)
        throw std::invalid_argument("dh_potential: horizontal degree outside 1..n");
    if (bd->horizontal < phi.bundle().base_dim && !horizontal_d(phi).is_zero())
        throw NotClosedError("dh_potential: target is not d_H-closed");

    const int jo = phi.jet_order();
    const int dg = phi.poly_degree();
    SolveBounds start = initial_bounds.value_or(SolveBounds{std::max(jo - 1, 0), dg});
    const int max_order = std::max(start.jet_order, jo + 2);
    const int max_degree = start.poly_degree + 2;

    int escalations = 0;
    for (int order = start.jet_order; order <= max_order; ++order) {
        for (int degree = start.poly_degree; degree <= max_degree; ++degree) {
            SolveReport report = solve_graded_linear(phi, SolveBounds{order, degree});
            if (report.solution) return std::move(*report.solution);
            ++escalations;
        }
    }
    throw NoPotentialError("dh_potential: no potential within jet order " +
                           std::to_string(max_order) + " and degree " +
                           std::to_string(max_degree) + " (" + std::to_string(escalations) +
                           " escalations)");
}

Form volterra_lagrangian(const SourceForm& eps) {
    auto report = helmholtz_check(eps);
    if (!report.passes)
        throw HelmholtzFailedError("volterra_lagrangian: source form fails the Helmholtz condition",
                                   std::move(report.obstruction));

    const Bundle& b = eps.bundle();
    DiffPoly density;
    for (const auto& [i, e] : eps.components()) {
        DiffPoly scaled;
        for (const auto& [m, c] : e.terms())
            scaled.add_term(m, c / Rational(m.fiber_degree() + 1));
        density += DiffPoly::variable(JetVariable::fiber(i)) * scaled;
    }
    Form lagrangian = density * volume_form(b);

    if (!(euler_lagrange(lagrangian) == eps))
        throw RoundTripError("volterra_lagrangian: reconstruction failed verification");
    return lagrangian;
}

Form triviality_decompose(const Form& lagrangian) {
    auto bd = lagrangian.bidegree();
    if (bd && (bd->contact != 0 || bd->horizontal != lagrangian.bundle().base_dim))
        throw std::invalid_argument("triviality_decompose: expected a horizontal density");
    SourceForm el = euler_lagrange(lagrangian);
    if (!el.is_zero())
        throw NotTrivialError("triviality_decompose: Lagrangian is not variationally trivial",
                              std::move(el));
    return dh_potential(lagrangian);
}

}  // namespace varcalc
