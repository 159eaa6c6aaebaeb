#include "varcalc/diff_poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace varcalc {

Monomial Monomial::variable(const JetVariable& v, int exponent) {
    return Monomial().times(v, exponent);
}

Monomial Monomial::times(const JetVariable& v, int exponent) const {
    if (exponent < 0) throw std::invalid_argument("Monomial: negative exponent");
    if (exponent == 0) return *this;
    Monomial m = *this;
    auto it = std::lower_bound(m.factors_.begin(), m.factors_.end(), v,
                               [](const auto& f, const JetVariable& x) { return f.first < x; });
    if (it != m.factors_.end() && it->first == v)
        it->second += exponent;
    else
        m.factors_.insert(it, {v, exponent});
    return m;
}

Monomial Monomial::times(const Monomial& other) const {
    Monomial m = *this;
    for (const auto& [v, e] : other.factors_) m = m.times(v, e);
    return m;
}

Monomial Monomial::without_one(const JetVariable& v) const {
    Monomial m = *this;
    auto it = std::lower_bound(m.factors_.begin(), m.factors_.end(), v,
                               [](const auto& f, const JetVariable& x) { return f.first < x; });
    if (it == m.factors_.end() || !(it->first == v))
        throw std::invalid_argument("Monomial: dividing by an absent variable");
    if (--it->second == 0) m.factors_.erase(it);
    return m;
}

int Monomial::exponent(const JetVariable& v) const {
    for (const auto& [w, e] : factors_)
        if (w == v) return e;
    return 0;
}

int Monomial::degree() const {
    int d = 0;
    for (const auto& [v, e] : factors_) d += e;
    return d;
}

int Monomial::fiber_degree() const {
    int d = 0;
    for (const auto& [v, e] : factors_)
        if (v.is_fiber()) d += e;
    return d;
}

int Monomial::jet_order() const {
    int r = 0;
    for (const auto& [v, e] : factors_) r = std::max(r, v.jet_order());
    return r;
}

std::strong_ordering Monomial::operator<=>(const Monomial& other) const {
    if (auto c = degree() <=> other.degree(); c != 0) return c;
    return factors_ <=> other.factors_;
}

DiffPoly DiffPoly::constant(Rational c) {
    DiffPoly p;
    p.add_term(Monomial(), c);
    return p;
}

DiffPoly DiffPoly::variable(const JetVariable& v) {
    DiffPoly p;
    p.add_term(Monomial::variable(v), Rational(1));
    return p;
}

DiffPoly DiffPoly::term(Rational c, Monomial m) {
    DiffPoly p;
    p.add_term(m, c);
    return p;
}

bool DiffPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_unit());
}

Rational DiffPoly::constant_value() const { return coefficient(Monomial()); }

int DiffPoly::degree() const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
}

int DiffPoly::jet_order() const {
    int r = 0;
    for (const auto& [m, c] : terms_) r = std::max(r, m.jet_order());
    return r;
}

Rational DiffPoly::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

std::vector<JetVariable> DiffPoly::variables() const {
    std::vector<JetVariable> out;
    for (const auto& [m, c] : terms_)
        for (const auto& [v, e] : m.factors()) out.push_back(v);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

void DiffPoly::add_term(const Monomial& m, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

DiffPoly DiffPoly::operator-() const {
    DiffPoly p;
    for (const auto& [m, c] : terms_) p.terms_.emplace(m, -c);
    return p;
}

DiffPoly& DiffPoly::operator+=(const DiffPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

DiffPoly& DiffPoly::operator-=(const DiffPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

DiffPoly operator*(const DiffPoly& a, const DiffPoly& b) {
    DiffPoly p;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) p.add_term(ma.times(mb), ca * cb);
    return p;
}

DiffPoly operator*(const Rational& c, const DiffPoly& p) {
    DiffPoly out;
    if (c == 0) return out;
    for (const auto& [m, k] : p.terms_) out.terms_.emplace(m, c * k);
    return out;
}

DiffPoly partial_derivative(const DiffPoly& p, const JetVariable& v) {
    DiffPoly out;
    for (const auto& [m, c] : p.terms()) {
        int e = m.exponent(v);
        if (e == 0) continue;
        out.add_term(m.without_one(v), c * e);
    }
    return out;
}

DiffPoly total_derivative(const DiffPoly& p, int lambda) {
    if (lambda < 1) throw std::out_of_range("total_derivative: base index must be >= 1");
    DiffPoly out;
    const JetVariable x = JetVariable::base(lambda);
    for (const auto& [m, c] : p.terms()) {
        // Leibniz over the factors of the monomial: d_lambda(x^mu) = delta,
        // d_lambda(u^i_Lambda) = u^i_{lambda+Lambda}.
        for (const auto& [v, e] : m.factors()) {
            Monomial rest = m.without_one(v);
            if (v.is_base()) {
                if (v == x) out.add_term(rest, c * e);
            } else {
                JetVariable dv = JetVariable::fiber(v.index(), v.multi().plus(lambda));
                out.add_term(rest.times(dv), c * e);
            }
        }
    }
    return out;
}

DiffPoly fiber_scale(const DiffPoly& p, const Rational& t) {
    DiffPoly out;
    for (const auto& [m, c] : p.terms()) {
        int fd = m.fiber_degree();
        Rational scale(1);
        for (int k = 0; k < fd; ++k) scale *= t;
        out.add_term(m, c * scale);
    }
    return out;
}

}  // namespace varcalc
