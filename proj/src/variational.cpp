#include "varcalc/variational.hpp"

#include <set>
#include <stdexcept>
#include <utility>

#include "varcalc/inverse.hpp"

namespace varcalc {

namespace {

Form d_multi(Form phi, const MultiIndex& mi) {
    for (int lambda : mi.letters()) phi = total_derivative(phi, lambda);
    return phi;
}

void require_top_horizontal(const Form& phi, int min_contact, const char* who) {
    if (phi.is_zero()) return;
    auto bd = phi.bidegree();
    if (!bd || bd->horizontal != phi.bundle().base_dim || bd->contact < min_contact)
        throw std::invalid_argument(std::string(who) + ": expected a homogeneous (k, n)-form");
}

}  // namespace

Form tau_bar(const Form& phi) {
    require_top_horizontal(phi, 1, "tau_bar");
    const Bundle& b = phi.bundle();
    Form out(b);
    if (phi.is_zero()) return out;

    std::set<std::pair<int, MultiIndex>> occurring;
    for (const auto& [w, f] : phi.terms())
        for (const auto& c : w.factors())
            if (c.is_theta()) occurring.insert({c.index(), c.multi()});

    for (const auto& [i, mi] : occurring) {
        Form contracted = contract_fiber(phi, i, mi);
        if (contracted.is_zero()) continue;
        Form shifted = d_multi(std::move(contracted), mi);
        Form theta = Form::term(b, DiffPoly::constant(Rational(1)),
                                WedgeWord::normalize({CoVector::theta(i)})->first);
        Rational sign((mi.order() % 2 == 0) ? 1 : -1);
        out += sign * wedge(theta, shifted);
    }
    return out;
}

Form tau(const Form& phi) {
    const int n = phi.bundle().base_dim;
    Form out(phi.bundle());
    for (const auto& [bd, part] : bidegree_parts(phi)) {
        if (bd.horizontal != n || bd.contact < 1) continue;
        out += Rational(1, static_cast<unsigned long>(bd.contact)) * tau_bar(part);
    }
    return out;
}

Form delta(const Form& phi) {
    require_top_horizontal(phi, 0, "delta");
    return tau(exterior_d(phi));
}

SourceForm euler_lagrange(const Form& lagrangian) {
    const Bundle& b = lagrangian.bundle();
    require_top_horizontal(lagrangian, 0, "euler_lagrange");
    if (auto bd = lagrangian.bidegree(); bd && bd->contact != 0)
        throw std::invalid_argument("euler_lagrange: expected a horizontal density");

    SourceForm out(b);
    if (lagrangian.is_zero()) return out;
    const DiffPoly f = lagrangian.coefficient(volume_form(b).terms().begin()->first);
    for (int i = 1; i <= b.fiber_dim; ++i) {
        DiffPoly e;
        for (const auto& v : f.variables()) {
            if (!v.is_fiber() || v.index() != i) continue;
            DiffPoly d = partial_derivative(f, v);
            for (int lambda : v.multi().letters()) d = total_derivative(d, lambda);
            if (v.multi().order() % 2 == 1) d = -d;
            e += d;
        }
        out.set_component(i, std::move(e));
    }
    return out;
}

HelmholtzReport helmholtz_check(const SourceForm& eps) {
    Form obstruction = delta(eps.to_form());
    return {obstruction.is_zero(), std::move(obstruction)};
}

Decomposition decompose(const Form& rho) {
    require_top_horizontal(rho, 1, "decompose");
    Form source = tau(rho);
    Form remainder = rho - source;
    Form potential(rho.bundle());
    if (!remainder.is_zero()) potential = dh_potential(remainder);
    return {std::move(source), std::move(potential)};
}

FirstVariation first_variation(const Form& lagrangian) {
    require_top_horizontal(lagrangian, 0, "first_variation");
    if (auto bd = lagrangian.bidegree(); bd && bd->contact != 0)
        throw std::invalid_argument("first_variation: expected a horizontal density");
    Form dv = vertical_d(lagrangian);
    if (dv.is_zero()) return {SourceForm(lagrangian.bundle()), Form(lagrangian.bundle())};
    Decomposition dec = decompose(dv);
    return {SourceForm::from_form(dec.source_part), std::move(dec.potential)};
}

}  // namespace varcalc
