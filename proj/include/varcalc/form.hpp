#pragma once

#include <compare>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "varcalc/bundle.hpp"
#include "varcalc/covector.hpp"
#include "varcalc/diff_poly.hpp"

namespace varcalc {

// Bidegree of a wedge monomial: k contact factors, s horizontal factors.
struct Bidegree {
    int contact;
    int horizontal;

    bool operator==(const Bidegree&) const = default;
    std::strong_ordering operator<=>(const Bidegree&) const = default;
};

// Strictly ascending wedge product of covectors; the empty word stands for a
// scalar. Antisymmetry is absorbed into the normalizing sign.
class WedgeWord {
public:
    WedgeWord() = default;

    // Sorts an arbitrary factor list, tracking the permutation sign. Returns
    // nullopt when a factor repeats (the wedge is zero).
    static std::optional<std::pair<WedgeWord, int>> normalize(std::vector<CoVector> factors);

    const std::vector<CoVector>& factors() const { return factors_; }
    int degree() const { return static_cast<int>(factors_.size()); }
    int contact_degree() const;
    int horizontal_degree() const;
    Bidegree bidegree() const { return {contact_degree(), horizontal_degree()}; }
    int jet_order() const;  // max |Lambda| over theta factors

    bool operator==(const WedgeWord&) const = default;
    std::strong_ordering operator<=>(const WedgeWord& other) const {
        if (auto c = factors_.size() <=> other.factors_.size(); c != 0) return c;
        return factors_ <=> other.factors_;
    }

private:
    std::vector<CoVector> factors_;
};

// Exterior form over DiffPoly in the contact basis {dx^lambda, theta^i_Lambda}.
// Terms are kept canonical: ascending wedge words, no zero coefficients.
class Form {
public:
    explicit Form(const Bundle& b) : bundle_(b) {}

    static Form zero(const Bundle& b) { return Form(b); }
    static Form scalar(const Bundle& b, DiffPoly f);
    static Form term(const Bundle& b, DiffPoly f, const WedgeWord& w);

    const Bundle& bundle() const { return bundle_; }
    const std::map<WedgeWord, DiffPoly>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    DiffPoly coefficient(const WedgeWord& w) const;

    int jet_order() const;    // over coefficients and theta factors
    int poly_degree() const;  // max coefficient total degree

    bool is_homogeneous() const;
    // Bidegree of a nonzero homogeneous form; nullopt for zero or mixed.
    std::optional<Bidegree> bidegree() const;

    // Accumulates f * w, canonicalizing and validating indices against the bundle.
    void add_term(const WedgeWord& w, const DiffPoly& f);

    Form operator-() const;
    Form& operator+=(const Form& o);
    Form& operator-=(const Form& o);
    friend Form operator+(Form a, const Form& b) { return a += b; }
    friend Form operator-(Form a, const Form& b) { return a -= b; }
    friend Form operator*(const Rational& c, const Form& phi);
    friend Form operator*(const DiffPoly& f, const Form& phi);

    bool operator==(const Form&) const = default;

private:
    Bundle bundle_;
    std::map<WedgeWord, DiffPoly> terms_;
};

// Graded product; 0-forms act as scalars. Throws on bundle mismatch.
Form wedge(const Form& a, const Form& b);

// d_lambda extended to forms as an even derivation: total_derivative on
// coefficients, theta^i_Lambda -> theta^i_{lambda+Lambda}, dx^mu -> 0.
Form total_derivative(const Form& phi, int lambda);

Form exterior_d(const Form& phi);    // d = d_H + d_V
Form horizontal_d(const Form& phi);  // d_H(phi) = dx^lambda ^ d_lambda(phi)
Form vertical_d(const Form& phi);    // d_V(phi) = theta^i_Lambda ^ partial^Lambda_i(phi)

// Splits into homogeneous (k, s) parts; the projections h_k and h^s.
std::map<Bidegree, Form> bidegree_parts(const Form& phi);
Form bidegree_part(const Form& phi, Bidegree bd);

// Interior product with the vector field dual to theta^i_Lambda: deletes one
// matching contact factor per term with the Koszul sign (-1)^(position-1).
Form contract_fiber(const Form& phi, int i, const MultiIndex& mi);

// omega = dx^1 ^ ... ^ dx^n.
Form volume_form(const Bundle& b);

}  // namespace varcalc
