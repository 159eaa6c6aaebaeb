#include <doctest.h>

#include "support/random_forms.hpp"
#include "varcalc/diff_poly.hpp"

using namespace varcalc;
using vartest::GenBounds;
using vartest::Rng;

namespace {

const JetVariable X = JetVariable::base(1);
const JetVariable U = JetVariable::fiber(1);
const JetVariable Ux = JetVariable::fiber(1, MultiIndex::of({1}));
const JetVariable Uxx = JetVariable::fiber(1, MultiIndex::of({1, 1}));

DiffPoly var(const JetVariable& v) { return DiffPoly::variable(v); }

}  // namespace

TEST_CASE("partial derivative treats jet coordinates as independent") {
    CHECK(partial_derivative(var(Ux) * var(Ux), Ux) == rat(2) * var(Ux));
    CHECK(partial_derivative(var(X) * var(U), U) == var(X));
    CHECK(partial_derivative(var(U) * var(Uxx), Uxx) == var(U));
    CHECK(partial_derivative(var(U), Ux).is_zero());
}

TEST_CASE("total derivative") {
    CHECK(total_derivative(var(U), 1) == var(Ux));
    CHECK(total_derivative(var(X), 1) == DiffPoly::constant(rat(1)));

    // Leibniz oracle by hand expansion: d_x(u u_x) = u_x^2 + u u_xx.
    DiffPoly expected = var(Ux) * var(Ux) + var(U) * var(Uxx);
    CHECK(total_derivative(var(U) * var(Ux), 1) == expected);

    // exactness through rational coefficients: d_x(1/2 u_x^2) = u_x u_xx
    DiffPoly half_sq = rat(1, 2) * (var(Ux) * var(Ux));
    CHECK(total_derivative(half_sq, 1) == var(Ux) * var(Uxx));
}

TEST_CASE("fiber_scale scales by fiber degree") {
    CHECK(fiber_scale(var(U) * var(Uxx), rat(2)) == rat(4) * (var(U) * var(Uxx)));
    DiffPoly x2 = var(X) * var(X);
    CHECK(fiber_scale(x2, rat(17, 5)) == x2);
    DiffPoly p = var(U) + var(X) * var(Ux);
    CHECK(fiber_scale(p, rat(3)) == rat(3) * p);
}

TEST_CASE("jet order and degree bookkeeping") {
    DiffPoly p = var(X) * var(Uxx) + DiffPoly::constant(rat(5));
    CHECK(p.jet_order() == 2);
    CHECK(p.degree() == 2);
    CHECK(DiffPoly().jet_order() == 0);
    CHECK(total_derivative(p, 1).jet_order() == 3);
}

TEST_CASE("derivation and commutation properties on random samples") {
    Rng rng(0x9d1f5u);
    GenBounds g;
    int checked = 0;
    for (int it = 0; it < 220; ++it) {
        Bundle b = rng.bundle();
        DiffPoly p = rng.poly(b, g);
        DiffPoly q = rng.poly(b, g);
        int lambda = rng.uniform(1, b.base_dim);
        int mu = rng.uniform(1, b.base_dim);

        // mixed total derivatives commute
        CHECK(total_derivative(total_derivative(p, lambda), mu) ==
              total_derivative(total_derivative(p, mu), lambda));

        // d_lambda is a derivation
        CHECK(total_derivative(p * q, lambda) ==
              total_derivative(p, lambda) * q + p * total_derivative(q, lambda));

        // partial derivatives commute for distinct variables
        JetVariable v = rng.variable(b, g.max_jet_order);
        JetVariable w = rng.variable(b, g.max_jet_order);
        CHECK(partial_derivative(partial_derivative(p, v), w) ==
              partial_derivative(partial_derivative(p, w), v));

        // fiber_scale at 1 is the identity; at 0 only fiber-free monomials survive
        CHECK(fiber_scale(p, rat(1)) == p);
        DiffPoly killed = fiber_scale(p, rat(0));
        for (const auto& [m, c] : killed.terms()) CHECK(m.fiber_degree() == 0);
        for (const auto& [m, c] : p.terms())
            if (m.fiber_degree() == 0) CHECK(killed.coefficient(m) == c);

        // ring axioms
        CHECK(p * q == q * p);
        CHECK((p + q) * p == p * p + q * p);
        DiffPoly r = rng.poly(b, g);
        CHECK((p * q) * r == p * (q * r));

        // d_lambda raises the jet order by at most one and never the degree
        DiffPoly dp = total_derivative(p, lambda);
        CHECK(dp.jet_order() <= p.jet_order() + 1);
        CHECK(dp.degree() <= p.degree());

        // canonical storage: no zero coefficients survive arithmetic
        DiffPoly cancelled = p - p + q;
        CHECK(cancelled == q);
        for (const auto& [m, c] : cancelled.terms()) CHECK(c != 0);
        ++checked;
    }
    CHECK(checked >= 200);
}
