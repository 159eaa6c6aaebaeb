#pragma once

#include <compare>
#include <map>
#include <utility>
#include <vector>

#include "varcalc/jet_variable.hpp"
#include "varcalc/rational.hpp"

namespace varcalc {

// Power product of jet variables, kept sorted with positive exponents.
class Monomial {
public:
    Monomial() = default;  // the unit monomial

    static Monomial variable(const JetVariable& v, int exponent = 1);

    Monomial times(const JetVariable& v, int exponent = 1) const;
    Monomial times(const Monomial& other) const;
    // Divides by one power of v; v must occur.
    Monomial without_one(const JetVariable& v) const;

    int exponent(const JetVariable& v) const;
    int degree() const;        // total degree over all variables
    int fiber_degree() const;  // total degree counting fiber variables only
    int jet_order() const;     // max |Lambda| over fiber variables, 0 if none
    bool is_unit() const { return factors_.empty(); }

    const std::vector<std::pair<JetVariable, int>>& factors() const { return factors_; }

    bool operator==(const Monomial&) const = default;

    // Graded-lexicographic: total degree first, then the factor sequence.
    std::strong_ordering operator<=>(const Monomial& other) const;

private:
    std::vector<std::pair<JetVariable, int>> factors_;
};

// Polynomial in the jet coordinates with exact rational coefficients; the
// coefficient ring of the whole library. Zero coefficients are never stored.
class DiffPoly {
public:
    DiffPoly() = default;  // zero

    static DiffPoly constant(Rational c);
    static DiffPoly variable(const JetVariable& v);
    static DiffPoly term(Rational c, Monomial m);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    // Coefficient of the unit monomial (the whole value when is_constant()).
    Rational constant_value() const;

    int degree() const;     // max total degree, 0 for the zero polynomial
    int jet_order() const;  // max |Lambda| over occurring fiber variables

    const std::map<Monomial, Rational>& terms() const { return terms_; }
    Rational coefficient(const Monomial& m) const;
    std::vector<JetVariable> variables() const;  // sorted, distinct

    void add_term(const Monomial& m, const Rational& c);

    DiffPoly operator-() const;
    DiffPoly& operator+=(const DiffPoly& o);
    DiffPoly& operator-=(const DiffPoly& o);
    friend DiffPoly operator+(DiffPoly a, const DiffPoly& b) { return a += b; }
    friend DiffPoly operator-(DiffPoly a, const DiffPoly& b) { return a -= b; }
    friend DiffPoly operator*(const DiffPoly& a, const DiffPoly& b);
    friend DiffPoly operator*(const Rational& c, const DiffPoly& p);

    bool operator==(const DiffPoly&) const = default;

private:
    std::map<Monomial, Rational> terms_;
};

// Formal partial derivative treating every jet coordinate as independent.
DiffPoly partial_derivative(const DiffPoly& p, const JetVariable& v);

// Total derivative d_lambda = partial_lambda + sum u^i_{lambda+Lambda} partial^Lambda_i,
// truncated to the variables occurring in p.
DiffPoly total_derivative(const DiffPoly& p, int lambda);

// Scales every fiber variable by t: each monomial of fiber degree m picks up t^m.
DiffPoly fiber_scale(const DiffPoly& p, const Rational& t);

}  // namespace varcalc
