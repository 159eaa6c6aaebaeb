#include <string>
#include <vector>

#include "varcalc/exprio.hpp"

namespace varcalc {

namespace {

std::string index_suffix(const MultiIndex& mi, const Bundle& b) {
    if (mi.empty()) return "";
    std::string out = "_";
    if (b.base_dim <= 3) {
        static const char letters[] = {'x', 'y', 'z'};
        for (int lambda : mi.letters()) out += letters[lambda - 1];
    } else {
        out += '{';
        bool first = true;
        for (int lambda : mi.letters()) {
            if (!first) out += ',';
            out += std::to_string(lambda);
            first = false;
        }
        out += '}';
    }
    return out;
}

std::string variable_string(const JetVariable& v, const Bundle& b) {
    if (v.is_base()) return "x" + std::to_string(v.index());
    return "u" + std::to_string(v.index()) + index_suffix(v.multi(), b);
}

std::string covector_string(const CoVector& c, const Bundle& b) {
    if (c.is_dx()) return "dx" + std::to_string(c.index());
    return "th" + std::to_string(c.index()) + index_suffix(c.multi(), b);
}

// Display order: contact factors descending, then dx ascending — the usual
// E * th ^ omega reading. Returns the permutation sign relative to storage.
int display_factors(const WedgeWord& w, const Bundle& b, std::vector<std::string>& out) {
    std::vector<CoVector> display;
    const auto& stored = w.factors();
    for (auto it = stored.rbegin(); it != stored.rend(); ++it)
        if (it->is_theta()) display.push_back(*it);
    for (const auto& c : stored)
        if (c.is_dx()) display.push_back(c);

    // Parity of the permutation taking stored order to display order.
    std::vector<CoVector> scratch = stored;
    int sign = 1;
    for (std::size_t i = 0; i < display.size(); ++i) {
        std::size_t j = i;
        while (!(scratch[j] == display[i])) ++j;
        for (; j > i; --j) {
            std::swap(scratch[j], scratch[j - 1]);
            sign = -sign;
        }
    }
    for (const auto& c : display) out.push_back(covector_string(c, b));
    return sign;
}

std::string term_string(const Rational& coeff, const Monomial& m,
                        const std::vector<std::string>& wedge_factors, const Bundle& b) {
    std::vector<std::string> pieces;
    for (const auto& [v, e] : m.factors())
        pieces.insert(pieces.end(), e, variable_string(v, b));
    if (!wedge_factors.empty()) {
        std::string w = wedge_factors.front();
        for (std::size_t k = 1; k < wedge_factors.size(); ++k) w += " ^ " + wedge_factors[k];
        pieces.push_back(std::move(w));
    }
    std::string factors;
    for (std::size_t k = 0; k < pieces.size(); ++k)
        factors += (k == 0 ? "" : " * ") + pieces[k];
    if (pieces.empty()) return rational_to_string(coeff);
    if (coeff == 1) return factors;
    return rational_to_string(coeff) + " * " + factors;
}

struct PrintTerm {
    Rational coeff;
    Monomial monomial;
    std::vector<std::string> wedge_factors;
};

std::string join_terms(const std::vector<PrintTerm>& terms, const Bundle& b) {
    if (terms.empty()) return "0";
    std::string out = term_string(terms.front().coeff, terms.front().monomial,
                                  terms.front().wedge_factors, b);
    for (std::size_t k = 1; k < terms.size(); ++k) {
        const auto& t = terms[k];
        if (t.coeff < 0)
            out += " - " + term_string(-t.coeff, t.monomial, t.wedge_factors, b);
        else
            out += " + " + term_string(t.coeff, t.monomial, t.wedge_factors, b);
    }
    return out;
}

}  // namespace

std::string print_canonical(const Form& phi) {
    std::vector<PrintTerm> terms;
    for (const auto& [w, f] : phi.terms()) {
        std::vector<std::string> wedge_factors;
        int sign = display_factors(w, phi.bundle(), wedge_factors);
        for (const auto& [m, c] : f.terms())
            terms.push_back({Rational(sign) * c, m, wedge_factors});
    }
    return join_terms(terms, phi.bundle());
}

std::string print_canonical(const DiffPoly& p, const Bundle& b) {
    std::vector<PrintTerm> terms;
    for (const auto& [m, c] : p.terms()) terms.push_back({c, m, {}});
    return join_terms(terms, b);
}

}  // namespace varcalc
