#include "varcalc/source_form.hpp"

#include <stdexcept>

namespace varcalc {

SourceForm SourceForm::from_components(const Bundle& b, std::map<int, DiffPoly> components) {
    SourceForm out(b);
    for (auto& [i, e] : components) out.set_component(i, std::move(e));
    return out;
}

DiffPoly SourceForm::component(int i) const {
    auto it = components_.find(i);
    return it == components_.end() ? DiffPoly() : it->second;
}

void SourceForm::set_component(int i, DiffPoly value) {
    if (i < 1 || i > bundle_.fiber_dim)
        throw std::out_of_range("SourceForm: fiber index outside 1.." +
                                std::to_string(bundle_.fiber_dim));
    if (value.is_zero())
        components_.erase(i);
    else
        components_[i] = std::move(value);
}

Form SourceForm::to_form() const {
    Form out(bundle_);
    const Form omega = volume_form(bundle_);
    for (const auto& [i, e] : components_) {
        Form theta = Form::term(bundle_, DiffPoly::constant(Rational(1)),
                                WedgeWord::normalize({CoVector::theta(i)})->first);
        out += wedge(e * theta, omega);
    }
    return out;
}

SourceForm SourceForm::from_form(const Form& phi) {
    SourceForm out(phi.bundle());
    const int n = phi.bundle().base_dim;
    // theta^i ^ omega stored canonically is (-1)^n * (dx^1 ^ ... ^ dx^n ^ theta^i).
    const Rational sign((n % 2 == 0) ? 1 : -1);
    for (const auto& [w, f] : phi.terms()) {
        const auto& factors = w.factors();
        if (w.contact_degree() != 1 || w.horizontal_degree() != n)
            throw std::invalid_argument("SourceForm: form is not of bidegree (1, n)");
        const CoVector& contact = factors.back();  // thetas sort after dx factors
        if (!contact.multi().empty())
            throw std::invalid_argument("SourceForm: contact factor carries derivative indices");
        out.set_component(contact.index(), sign * f + out.component(contact.index()));
    }
    return out;
}

}  // namespace varcalc
