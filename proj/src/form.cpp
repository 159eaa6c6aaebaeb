#include "varcalc/form.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

namespace varcalc {

std::optional<std::pair<WedgeWord, int>> WedgeWord::normalize(std::vector<CoVector> factors) {
    // Insertion sort; each adjacent swap flips the sign.
    int sign = 1;
    for (std::size_t i = 1; i < factors.size(); ++i) {
        for (std::size_t j = i; j > 0 && factors[j] < factors[j - 1]; --j) {
            std::swap(factors[j], factors[j - 1]);
            sign = -sign;
        }
    }
    for (std::size_t i = 1; i < factors.size(); ++i)
        if (factors[i] == factors[i - 1]) return std::nullopt;
    WedgeWord w;
    w.factors_ = std::move(factors);
    return std::make_pair(std::move(w), sign);
}

int WedgeWord::contact_degree() const {
    int k = 0;
    for (const auto& c : factors_) k += c.is_theta() ? 1 : 0;
    return k;
}

int WedgeWord::horizontal_degree() const { return degree() - contact_degree(); }

int WedgeWord::jet_order() const {
    int r = 0;
    for (const auto& c : factors_) r = std::max(r, c.jet_order());
    return r;
}

namespace {

void check_variable(const JetVariable& v, const Bundle& b) {
    if (v.is_base()) {
        if (v.index() > b.base_dim)
            throw std::out_of_range("base index " + std::to_string(v.index()) + " outside 1.." +
                                    std::to_string(b.base_dim));
    } else {
        if (v.index() > b.fiber_dim)
            throw std::out_of_range("fiber index " + std::to_string(v.index()) + " outside 1.." +
                                    std::to_string(b.fiber_dim));
        if (v.multi().width() > b.base_dim)
            throw std::out_of_range("derivative index outside 1.." + std::to_string(b.base_dim));
    }
}

void check_covector(const CoVector& c, const Bundle& b) {
    if (c.is_dx()) {
        if (c.index() > b.base_dim)
            throw std::out_of_range("dx index " + std::to_string(c.index()) + " outside 1.." +
                                    std::to_string(b.base_dim));
    } else {
        if (c.index() > b.fiber_dim)
            throw std::out_of_range("theta index " + std::to_string(c.index()) + " outside 1.." +
                                    std::to_string(b.fiber_dim));
        if (c.multi().width() > b.base_dim)
            throw std::out_of_range("derivative index outside 1.." + std::to_string(b.base_dim));
    }
}

}  // namespace

Form Form::scalar(const Bundle& b, DiffPoly f) {
    Form phi(b);
    phi.add_term(WedgeWord(), f);
    return phi;
}

Form Form::term(const Bundle& b, DiffPoly f, const WedgeWord& w) {
    Form phi(b);
    phi.add_term(w, f);
    return phi;
}

DiffPoly Form::coefficient(const WedgeWord& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? DiffPoly() : it->second;
}

int Form::jet_order() const {
    int r = 0;
    for (const auto& [w, f] : terms_) r = std::max({r, w.jet_order(), f.jet_order()});
    return r;
}

int Form::poly_degree() const {
    int d = 0;
    for (const auto& [w, f] : terms_) d = std::max(d, f.degree());
    return d;
}

bool Form::is_homogeneous() const {
    if (terms_.empty()) return true;
    Bidegree bd = terms_.begin()->first.bidegree();
    for (const auto& [w, f] : terms_)
        if (w.bidegree() != bd) return false;
    return true;
}

std::optional<Bidegree> Form::bidegree() const {
    if (terms_.empty() || !is_homogeneous()) return std::nullopt;
    return terms_.begin()->first.bidegree();
}

void Form::add_term(const WedgeWord& w, const DiffPoly& f) {
    if (f.is_zero()) return;
    for (const auto& c : w.factors()) check_covector(c, bundle_);
    for (const auto& [m, c] : f.terms())
        for (const auto& [v, e] : m.factors()) check_variable(v, bundle_);
    auto [it, inserted] = terms_.emplace(w, f);
    if (!inserted) {
        it->second += f;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Form Form::operator-() const {
    Form out(bundle_);
    for (const auto& [w, f] : terms_) out.terms_.emplace(w, -f);
    return out;
}

Form& Form::operator+=(const Form& o) {
    if (!(bundle_ == o.bundle_)) throw std::invalid_argument("Form: bundle mismatch");
    for (const auto& [w, f] : o.terms_) add_term(w, f);
    return *this;
}

Form& Form::operator-=(const Form& o) {
    if (!(bundle_ == o.bundle_)) throw std::invalid_argument("Form: bundle mismatch");
    for (const auto& [w, f] : o.terms_) add_term(w, -f);
    return *this;
}

Form operator*(const Rational& c, const Form& phi) {
    Form out(phi.bundle_);
    if (c == 0) return out;
    for (const auto& [w, f] : phi.terms_) out.terms_.emplace(w, c * f);
    return out;
}

Form operator*(const DiffPoly& f, const Form& phi) {
    Form out(phi.bundle_);
    for (const auto& [w, g] : phi.terms_) out.add_term(w, f * g);
    return out;
}

Form wedge(const Form& a, const Form& b) {
    if (!(a.bundle() == b.bundle())) throw std::invalid_argument("wedge: bundle mismatch");
    Form out(a.bundle());
    for (const auto& [wa, fa] : a.terms()) {
        for (const auto& [wb, fb] : b.terms()) {
            std::vector<CoVector> factors = wa.factors();
            factors.insert(factors.end(), wb.factors().begin(), wb.factors().end());
            auto norm = WedgeWord::normalize(std::move(factors));
            if (!norm) continue;
            out.add_term(norm->first, Rational(norm->second) * (fa * fb));
        }
    }
    return out;
}

Form total_derivative(const Form& phi, int lambda) {
    if (lambda < 1 || lambda > phi.bundle().base_dim)
        throw std::out_of_range("total_derivative: base index outside bundle");
    Form out(phi.bundle());
    for (const auto& [w, f] : phi.terms()) {
        out.add_term(w, total_derivative(f, lambda));
        // Even derivation across the wedge factors; dx factors are constant.
        const auto& factors = w.factors();
        for (std::size_t j = 0; j < factors.size(); ++j) {
            if (factors[j].is_dx()) continue;
            std::vector<CoVector> shifted = factors;
            shifted[j] = CoVector::theta(factors[j].index(), factors[j].multi().plus(lambda));
            auto norm = WedgeWord::normalize(std::move(shifted));
            if (!norm) continue;
            out.add_term(norm->first, Rational(norm->second) * f);
        }
    }
    return out;
}

Form horizontal_d(const Form& phi) {
    const Bundle& b = phi.bundle();
    Form out(b);
    for (int lambda = 1; lambda <= b.base_dim; ++lambda) {
        Form dx = Form::term(b, DiffPoly::constant(Rational(1)),
                             WedgeWord::normalize({CoVector::dx(lambda)})->first);
        out += wedge(dx, total_derivative(phi, lambda));
    }
    return out;
}

Form vertical_d(const Form& phi) {
    const Bundle& b = phi.bundle();
    Form out(b);
    for (const auto& [w, f] : phi.terms()) {
        // theta^i_Lambda ^ partial^Lambda_i acts on coefficients only.
        for (const auto& v : f.variables()) {
            if (v.is_base()) continue;
            DiffPoly df = partial_derivative(f, v);
            if (df.is_zero()) continue;
            std::vector<CoVector> factors;
            factors.push_back(CoVector::theta(v.index(), v.multi()));
            factors.insert(factors.end(), w.factors().begin(), w.factors().end());
            auto norm = WedgeWord::normalize(std::move(factors));
            if (!norm) continue;
            out.add_term(norm->first, Rational(norm->second) * df);
        }
    }
    return out;
}

namespace {

// coeff * (c ^ W), with c in front.
void add_prefixed(Form& out, const CoVector& c, const WedgeWord& w, const DiffPoly& coeff) {
    if (coeff.is_zero()) return;
    std::vector<CoVector> factors;
    factors.reserve(w.factors().size() + 1);
    factors.push_back(c);
    factors.insert(factors.end(), w.factors().begin(), w.factors().end());
    if (auto norm = WedgeWord::normalize(std::move(factors)))
        out.add_term(norm->first, Rational(norm->second) * coeff);
}

}  // namespace

// Computed from its own definition rather than as d_H + d_V, so the splitting
// d = d_H + d_V stays a checkable identity: df expands in the contact basis
// via du^i_L = theta^i_L + u^i_{l+L} dx^l, and on generators d(dx^l) = 0,
// d(theta^i_L) = dx^l ^ theta^i_{l+L}, extended by the graded Leibniz rule.
Form exterior_d(const Form& phi) {
    const Bundle& b = phi.bundle();
    Form out(b);
    for (const auto& [w, f] : phi.terms()) {
        for (int lambda = 1; lambda <= b.base_dim; ++lambda)
            add_prefixed(out, CoVector::dx(lambda), w,
                         partial_derivative(f, JetVariable::base(lambda)));
        for (const auto& v : f.variables()) {
            if (v.is_base()) continue;
            DiffPoly part = partial_derivative(f, v);
            if (part.is_zero()) continue;
            add_prefixed(out, CoVector::theta(v.index(), v.multi()), w, part);
            for (int lambda = 1; lambda <= b.base_dim; ++lambda)
                add_prefixed(
                    out, CoVector::dx(lambda), w,
                    part * DiffPoly::variable(JetVariable::fiber(v.index(),
                                                                 v.multi().plus(lambda))));
        }
        const auto& factors = w.factors();
        for (std::size_t j = 0; j < factors.size(); ++j) {
            if (factors[j].is_dx()) continue;
            int koszul = (j % 2 == 0) ? 1 : -1;  // factors ahead of position j are 1-forms
            for (int lambda = 1; lambda <= b.base_dim; ++lambda) {
                std::vector<CoVector> spliced(factors.begin(), factors.end());
                spliced[j] =
                    CoVector::theta(factors[j].index(), factors[j].multi().plus(lambda));
                spliced.insert(spliced.begin() + static_cast<std::ptrdiff_t>(j),
                               CoVector::dx(lambda));
                if (auto norm = WedgeWord::normalize(std::move(spliced)))
                    out.add_term(norm->first, Rational(koszul * norm->second) * f);
            }
        }
    }
    return out;
}

std::map<Bidegree, Form> bidegree_parts(const Form& phi) {
    std::map<Bidegree, Form> parts;
    for (const auto& [w, f] : phi.terms()) {
        auto it = parts.find(w.bidegree());
        if (it == parts.end()) it = parts.emplace(w.bidegree(), Form(phi.bundle())).first;
        it->second.add_term(w, f);
    }
    return parts;
}

Form bidegree_part(const Form& phi, Bidegree bd) {
    Form out(phi.bundle());
    for (const auto& [w, f] : phi.terms())
        if (w.bidegree() == bd) out.add_term(w, f);
    return out;
}

Form contract_fiber(const Form& phi, int i, const MultiIndex& mi) {
    const CoVector target = CoVector::theta(i, mi);
    Form out(phi.bundle());
    for (const auto& [w, f] : phi.terms()) {
        const auto& factors = w.factors();
        for (std::size_t j = 0; j < factors.size(); ++j) {
            if (!(factors[j] == target)) continue;
            std::vector<CoVector> rest(factors.begin(), factors.end());
            rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(j));
            WedgeWord word;
            if (auto norm = WedgeWord::normalize(std::move(rest))) word = norm->first;
            int sign = (j % 2 == 0) ? 1 : -1;  // (-1)^(position-1), positions 1-based
            out.add_term(word, Rational(sign) * f);
            break;  // factors are distinct
        }
    }
    return out;
}

Form volume_form(const Bundle& b) {
    std::vector<CoVector> factors;
    for (int lambda = 1; lambda <= b.base_dim; ++lambda) factors.push_back(CoVector::dx(lambda));
    return Form::term(b, DiffPoly::constant(Rational(1)),
                      WedgeWord::normalize(std::move(factors))->first);
}

}  // namespace varcalc
