#include "varcalc/graded_basis.hpp"

#include <algorithm>
#include <stdexcept>

namespace varcalc {

namespace {

// Strictly ascending choices of `count` covectors from `pool`.
void choose_words(const std::vector<CoVector>& pool, int count, std::size_t from,
                  std::vector<CoVector>& current, std::vector<std::vector<CoVector>>& out) {
    if (count == 0) {
        out.push_back(current);
        return;
    }
    for (std::size_t k = from; k + static_cast<std::size_t>(count) <= pool.size(); ++k) {
        current.push_back(pool[k]);
        choose_words(pool, count - 1, k + 1, current, out);
        current.pop_back();
    }
}

void enumerate_monomials(const std::vector<JetVariable>& vars, std::size_t from, int degree_left,
                         Monomial current, std::vector<Monomial>& out) {
    out.push_back(current);
    if (degree_left == 0) return;
    for (std::size_t k = from; k < vars.size(); ++k)
        enumerate_monomials(vars, k, degree_left - 1, current.times(vars[k]), out);
}

}  // namespace

GradedBasis enumerate_graded_basis(const Bundle& b, Bidegree bd, int max_jet_order,
                                   int max_poly_degree) {
    if (bd.contact < 0 || bd.horizontal < 0 || bd.horizontal > b.base_dim)
        throw std::invalid_argument("enumerate_graded_basis: bad bidegree");
    if (max_jet_order < 0 || max_poly_degree < 0)
        throw std::invalid_argument("enumerate_graded_basis: negative bound");

    GradedBasis basis{bd, max_jet_order, max_poly_degree, {}};
    const auto multis = mi_enumerate(b.base_dim, max_jet_order);

    std::vector<CoVector> dx_pool, theta_pool;
    for (int lambda = 1; lambda <= b.base_dim; ++lambda) dx_pool.push_back(CoVector::dx(lambda));
    for (int i = 1; i <= b.fiber_dim; ++i)
        for (const auto& mi : multis) theta_pool.push_back(CoVector::theta(i, mi));
    std::sort(theta_pool.begin(), theta_pool.end());

    std::vector<std::vector<CoVector>> dx_choices, theta_choices;
    std::vector<CoVector> scratch;
    choose_words(dx_pool, bd.horizontal, 0, scratch, dx_choices);
    choose_words(theta_pool, bd.contact, 0, scratch, theta_choices);

    std::vector<WedgeWord> words;
    for (const auto& dxs : dx_choices) {
        for (const auto& thetas : theta_choices) {
            std::vector<CoVector> factors = dxs;
            factors.insert(factors.end(), thetas.begin(), thetas.end());
            words.push_back(WedgeWord::normalize(std::move(factors))->first);
        }
    }
    std::sort(words.begin(), words.end());

    std::vector<JetVariable> vars;
    for (int lambda = 1; lambda <= b.base_dim; ++lambda) vars.push_back(JetVariable::base(lambda));
    for (int i = 1; i <= b.fiber_dim; ++i)
        for (const auto& mi : multis) vars.push_back(JetVariable::fiber(i, mi));
    std::sort(vars.begin(), vars.end());

    std::vector<Monomial> monomials;
    enumerate_monomials(vars, 0, max_poly_degree, Monomial(), monomials);
    std::sort(monomials.begin(), monomials.end());

    for (const auto& w : words)
        for (const auto& m : monomials)
            basis.elements.push_back(Form::term(b, DiffPoly::term(Rational(1), m), w));
    return basis;
}

}  // namespace varcalc
