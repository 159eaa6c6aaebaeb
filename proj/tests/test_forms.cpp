#include <doctest.h>

#include "support/random_forms.hpp"
#include "varcalc/form.hpp"

using namespace varcalc;
using vartest::GenBounds;
using vartest::Rng;

namespace {

const Bundle B11(1, 1);

Form one_form(const Bundle& b, const CoVector& c) {
    return Form::term(b, DiffPoly::constant(rat(1)), WedgeWord::normalize({c})->first);
}

Form scalar(const Bundle& b, const DiffPoly& f) { return Form::scalar(b, f); }

const DiffPoly U = DiffPoly::variable(JetVariable::fiber(1));
const DiffPoly Ux = DiffPoly::variable(JetVariable::fiber(1, MultiIndex::of({1})));
const CoVector DX1 = CoVector::dx(1);
const CoVector TH = CoVector::theta(1);
const CoVector THx = CoVector::theta(1, MultiIndex::of({1}));
const CoVector THxx = CoVector::theta(1, MultiIndex::of({1, 1}));

}  // namespace

TEST_CASE("wedge antisymmetry and coefficients") {
    Form dx = one_form(B11, DX1);
    Form th = one_form(B11, TH);

    CHECK(wedge(dx, dx).is_zero());
    CHECK(wedge(th, dx) == -wedge(dx, th));

    Form lhs = wedge(wedge(scalar(B11, U), th), wedge(scalar(B11, Ux), dx));
    Form target = (U * Ux) * wedge(th, dx);
    CHECK(lhs == target);

    CHECK_THROWS_AS(wedge(dx, one_form(Bundle(2, 1), DX1)), std::invalid_argument);
}

TEST_CASE("wedge is associative and graded-commutative") {
    Rng rng(0xa11ceu);
    GenBounds g{2, 2, 2};
    for (int it = 0; it < 200; ++it) {
        Bundle b = rng.bundle();
        Bidegree bda{rng.uniform(0, 1), rng.uniform(0, 1)};
        Bidegree bdb{rng.uniform(0, 1), rng.uniform(0, b.base_dim - bda.horizontal)};
        Form alpha = rng.form(b, bda, g, 1);
        Form beta = rng.form(b, bdb, g, 1);
        Form gamma = rng.form(b, {0, 0}, g, 1);

        int da = bda.contact + bda.horizontal;
        int db = bdb.contact + bdb.horizontal;
        int sign = (da * db) % 2 == 0 ? 1 : -1;
        CHECK(wedge(alpha, beta) == rat(sign) * wedge(beta, alpha));
        CHECK(wedge(wedge(alpha, beta), gamma) == wedge(alpha, wedge(beta, gamma)));
    }
}

TEST_CASE("exterior differential on generators and functions") {
    // du = theta + u_x dx
    Form expected = one_form(B11, TH) + Ux * one_form(B11, DX1);
    CHECK(exterior_d(scalar(B11, U)) == expected);

    // d(theta_x) = dx ^ theta_xx
    CHECK(exterior_d(one_form(B11, THx)) == wedge(one_form(B11, DX1), one_form(B11, THxx)));

    CHECK(exterior_d(one_form(B11, DX1)).is_zero());
}

TEST_CASE("horizontal differential") {
    CHECK(horizontal_d(scalar(B11, U)) == Ux * one_form(B11, DX1));
    CHECK(horizontal_d(one_form(B11, TH)) == wedge(one_form(B11, DX1), one_form(B11, THx)));
    CHECK(horizontal_d(one_form(B11, DX1)).is_zero());
}

TEST_CASE("vertical differential") {
    // d_V(u u_x) = u_x theta + u theta_x
    Form expected = Ux * one_form(B11, TH) + U * one_form(B11, THx);
    CHECK(vertical_d(scalar(B11, U * Ux)) == expected);

    CHECK(vertical_d(scalar(B11, DiffPoly::variable(JetVariable::base(1)))).is_zero());
    CHECK(vertical_d(one_form(B11, THx)).is_zero());
}

TEST_CASE("bidegree parts") {
    Form phi = U * wedge(one_form(B11, TH), one_form(B11, DX1)) + Ux * one_form(B11, DX1);
    auto parts = bidegree_parts(phi);
    REQUIRE(parts.size() == 2);
    CHECK(parts.at({1, 1}) == U * wedge(one_form(B11, TH), one_form(B11, DX1)));
    CHECK(parts.at({0, 1}) == Ux * one_form(B11, DX1));

    CHECK(bidegree_parts(Form::zero(B11)).empty());

    Form two_contact = wedge(one_form(B11, TH), one_form(B11, THx));
    auto parts2 = bidegree_parts(two_contact);
    REQUIRE(parts2.size() == 1);
    CHECK(parts2.begin()->first == Bidegree{2, 0});
}

TEST_CASE("contract_fiber deletes one contact factor with the Koszul sign") {
    Form phi = U * wedge(one_form(B11, THx), one_form(B11, DX1));
    CHECK(contract_fiber(phi, 1, MultiIndex::of({1})) == U * one_form(B11, DX1));

    CHECK(contract_fiber(one_form(B11, DX1), 1, MultiIndex()).is_zero());

    Form pair = wedge(one_form(B11, TH), one_form(B11, THx));
    CHECK(contract_fiber(pair, 1, MultiIndex()) == one_form(B11, THx));
    CHECK(contract_fiber(pair, 1, MultiIndex::of({1})) == -one_form(B11, TH));
}

TEST_CASE("forms reject indices outside the bundle") {
    Bundle b21(2, 1);
    CHECK_THROWS_AS(one_form(b21, CoVector::dx(3)), std::out_of_range);
    CHECK_THROWS_AS(one_form(b21, CoVector::theta(2)), std::out_of_range);
    CHECK_THROWS_AS(one_form(b21, CoVector::theta(1, MultiIndex::of({3}))), std::out_of_range);
    CHECK_THROWS_AS(scalar(b21, DiffPoly::variable(JetVariable::base(3))), std::out_of_range);
    CHECK_THROWS_AS(scalar(b21, DiffPoly::variable(JetVariable::fiber(2))), std::out_of_range);
}

TEST_CASE("volume form") {
    CHECK(volume_form(B11) == one_form(B11, DX1));
    Bundle b21(2, 1);
    CHECK(volume_form(b21) == wedge(one_form(b21, CoVector::dx(1)), one_form(b21, CoVector::dx(2))));
    for (int lambda = 1; lambda <= 2; ++lambda)
        CHECK(wedge(volume_form(b21), one_form(b21, CoVector::dx(lambda))).is_zero());
}

TEST_CASE("bicomplex identities on random forms") {
    Rng rng(0xb1c0u);
    GenBounds g;  // jet order <= 3, degree <= 2
    int checked = 0;
    for (int it = 0; it < 210; ++it) {
        Bundle b = rng.bundle();
        Form phi = rng.mixed_form(b, g);

        CHECK(exterior_d(exterior_d(phi)).is_zero());
        CHECK(horizontal_d(horizontal_d(phi)).is_zero());
        CHECK(vertical_d(vertical_d(phi)).is_zero());
        CHECK((horizontal_d(vertical_d(phi)) + vertical_d(horizontal_d(phi))).is_zero());
        CHECK(exterior_d(phi) == horizontal_d(phi) + vertical_d(phi));

        // the bidegree decomposition resolves the identity
        Form sum(b);
        for (const auto& [bd, part] : bidegree_parts(phi)) {
            sum += part;
            auto again = bidegree_parts(part);
            REQUIRE(again.size() <= 1);
            if (!part.is_zero()) CHECK(again.at(bd) == part);
        }
        CHECK(sum == phi);
        ++checked;
    }
    CHECK(checked >= 200);
}

TEST_CASE("horizontal_d vanishes on top horizontal degree") {
    Rng rng(0x70f1u);
    GenBounds g;
    for (int it = 0; it < 60; ++it) {
        Bundle b = rng.bundle();
        Form phi = rng.form(b, {rng.uniform(0, 2), b.base_dim}, g);
        CHECK(horizontal_d(phi).is_zero());
    }
}

TEST_CASE("contract_fiber is a graded antiderivation") {
    Rng rng(0xc0ffu);
    GenBounds g{2, 2, 2};
    for (int it = 0; it < 200; ++it) {
        Bundle b = rng.bundle();
        Bidegree bda{rng.uniform(0, 2), rng.uniform(0, 1)};
        Bidegree bdb{rng.uniform(0, 1), rng.uniform(0, b.base_dim - bda.horizontal)};
        Form alpha = rng.form(b, bda, g, 1);
        Form beta = rng.form(b, bdb, g, 1);
        int i = rng.uniform(1, b.fiber_dim);
        MultiIndex mi = rng.multi(b, 2);

        Form lhs = contract_fiber(wedge(alpha, beta), i, mi);
        int sign = (bda.contact + bda.horizontal) % 2 == 0 ? 1 : -1;
        Form rhs = wedge(contract_fiber(alpha, i, mi), beta) +
                   rat(sign) * wedge(alpha, contract_fiber(beta, i, mi));
        CHECK(lhs == rhs);
    }
}
