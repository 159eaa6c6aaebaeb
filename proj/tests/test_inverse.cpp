#include <doctest.h>

#include "support/random_forms.hpp"
#include "varcalc/errors.hpp"
#include "varcalc/exprio.hpp"
#include "varcalc/inverse.hpp"
#include "varcalc/variational.hpp"

using namespace varcalc;
using vartest::GenBounds;
using vartest::Rng;

namespace {

const Bundle B11(1, 1);

Form F(const std::string& expr, const Bundle& b = B11) { return parse_form(expr, b); }

}  // namespace

TEST_CASE("graded basis enumeration is deterministic and duplicate-free") {
    Bundle b(2, 2);
    auto basis = enumerate_graded_basis(b, {1, 1}, 1, 2);
    CHECK(!basis.elements.empty());
    auto again = enumerate_graded_basis(b, {1, 1}, 1, 2);
    REQUIRE(basis.elements.size() == again.elements.size());
    for (std::size_t k = 0; k < basis.elements.size(); ++k) {
        CHECK(basis.elements[k] == again.elements[k]);
        auto bd = basis.elements[k].bidegree();
        REQUIRE(bd.has_value());
        CHECK(*bd == Bidegree{1, 1});
        CHECK(basis.elements[k].jet_order() <= 1);
        CHECK(basis.elements[k].poly_degree() <= 2);
        for (std::size_t j = k + 1; j < basis.elements.size(); ++j)
            CHECK(!(basis.elements[k] == basis.elements[j]));
    }

    // 0-form basis over (n=1, p=1), order <= 1, degree <= 2:
    // monomials in {x, u, u_x} of degree <= 2.
    auto scalars = enumerate_graded_basis(B11, {0, 0}, 1, 2);
    CHECK(scalars.elements.size() == 10);
}

TEST_CASE("solve_graded_linear solves d_H systems") {
    auto report = solve_graded_linear(F("u1_x * dx1"), SolveBounds{1, 1});
    REQUIRE(report.solution.has_value());
    CHECK(*report.solution == F("u1"));
    CHECK(report.domain_dim > 0);
    CHECK(report.codomain_dim > 0);

    auto base = solve_graded_linear(F("dx1"), GradedOperator::d_h, SolveBounds{0, 1});
    REQUIRE(base.solution.has_value());
    CHECK(*base.solution == F("x1"));

    // a source form is never d_H-exact
    auto stuck = solve_graded_linear(F("th1 ^ dx1"), SolveBounds{1, 1});
    CHECK(!stuck.solution.has_value());
}

TEST_CASE("dh_potential finds exact potentials") {
    CHECK(dh_potential(F("u1_x * dx1")) == F("u1"));
    CHECK(dh_potential(F("u1_x * u1_xx * dx1")) == F("1/2 * u1_x * u1_x"));
    CHECK(dh_potential(Form::zero(B11)).is_zero());

    // d_H drops the base-variable degree, so the ladder must escalate degree
    CHECK(dh_potential(F("2 * x1 * dx1")) == F("x1 * x1"));

    // explicit initial bounds seed the ladder
    CHECK(dh_potential(F("u1_x * dx1"), SolveBounds{0, 1}) == F("u1"));
    CHECK(dh_potential(F("u1_x * u1_xx * dx1"), SolveBounds{3, 2}) == F("1/2 * u1_x * u1_x"));

    CHECK_THROWS_AS(dh_potential(F("th1 ^ dx1")), NoPotentialError);

    // non-closed target below top horizontal degree
    Bundle b21(2, 1);
    CHECK_THROWS_AS(dh_potential(F("u1 * dx1", b21)), NotClosedError);

    // closed (0, 1)-target over n = 2
    Form exact = horizontal_d(F("u1 * u1_y", b21));
    Form xi = dh_potential(exact);
    CHECK(horizontal_d(xi) == exact);
}

TEST_CASE("volterra_lagrangian reconstructs Lagrangians") {
    SourceForm one(B11);
    one.set_component(1, DiffPoly::constant(rat(1)));
    CHECK(volterra_lagrangian(one) == F("u1 * dx1"));

    SourceForm linear(B11);
    linear.set_component(1, DiffPoly::variable(JetVariable::fiber(1)));
    CHECK(volterra_lagrangian(linear) == F("1/2 * u1 * u1 * dx1"));

    SourceForm wave(B11);
    wave.set_component(1, parse_form("-1 * u1_xx", B11).coefficient(WedgeWord()));
    Form lagrangian = volterra_lagrangian(wave);
    CHECK(lagrangian == F("-1/2 * u1 * u1_xx * dx1"));
    CHECK(euler_lagrange(lagrangian) == wave);

    SourceForm bad(B11);
    bad.set_component(1, parse_form("u1 * u1_x", B11).coefficient(WedgeWord()));
    CHECK_THROWS_AS(volterra_lagrangian(bad), HelmholtzFailedError);
    try {
        volterra_lagrangian(bad);
    } catch (const HelmholtzFailedError& e) {
        CHECK(e.obstruction() == F("u1 * th1_x ^ th1 ^ dx1"));
    }
}

TEST_CASE("triviality_decompose") {
    CHECK(triviality_decompose(F("u1_x * dx1")) == F("u1"));
    CHECK(triviality_decompose(F("u1_x * u1_xx * dx1")) == F("1/2 * u1_x * u1_x"));

    CHECK_THROWS_AS(triviality_decompose(F("1/2 * u1_x * u1_x * dx1")), NotTrivialError);
    try {
        triviality_decompose(F("1/2 * u1_x * u1_x * dx1"));
    } catch (const NotTrivialError& e) {
        CHECK(e.euler_lagrange_form().component(1) ==
              parse_form("-1 * u1_xx", B11).coefficient(WedgeWord()));
    }
}

TEST_CASE("divergence round trip on random potentials") {
    Rng rng(0x4a3fu);
    GenBounds g{2, 2, 2};
    for (int it = 0; it < 25; ++it) {
        Bundle b(rng.uniform(1, 2), rng.uniform(1, 2));
        Form xi = rng.form(b, {0, b.base_dim - 1}, g, 1);
        Form lagrangian = horizontal_d(xi);
        CHECK(euler_lagrange(lagrangian).is_zero());
        Form found = triviality_decompose(lagrangian);
        CHECK(horizontal_d(found) == lagrangian);
    }
}

TEST_CASE("volterra round trip on random source forms") {
    Rng rng(0x9e2bu);
    GenBounds g;
    for (int it = 0; it < 25; ++it) {
        Bundle b = rng.bundle();
        Form lagrangian = wedge(Form::scalar(b, rng.poly(b, g)), volume_form(b));
        SourceForm eps = euler_lagrange(lagrangian);
        CHECK(helmholtz_check(eps).passes);
        Form rebuilt = volterra_lagrangian(eps);
        CHECK(euler_lagrange(rebuilt) == eps);
    }
}
