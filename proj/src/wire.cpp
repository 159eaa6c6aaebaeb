#include "varcalc/errors.hpp"
#include "varcalc/exprio.hpp"

namespace varcalc {

namespace {

constexpr int kWireVersion = 1;

nlohmann::json multi_json(const MultiIndex& mi) { return nlohmann::json(mi.letters()); }

MultiIndex multi_from_json(const nlohmann::json& j) {
    if (!j.is_array()) throw WireError("wire: derivative index list must be an array");
    std::vector<int> letters;
    for (const auto& e : j) {
        if (!e.is_number_integer() || e.get<int>() < 1)
            throw WireError("wire: derivative indices must be positive integers");
        letters.push_back(e.get<int>());
    }
    return MultiIndex::of(letters);
}

int int_field(const nlohmann::json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_number_integer())
        throw WireError(std::string("wire: missing integer field '") + key + "'");
    return j[key].get<int>();
}

std::string string_field(const nlohmann::json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_string())
        throw WireError(std::string("wire: missing string field '") + key + "'");
    return j[key].get<std::string>();
}

}  // namespace

nlohmann::json to_wire(const Form& phi) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [w, f] : phi.terms()) {
        nlohmann::json wedge = nlohmann::json::array();
        for (const auto& c : w.factors()) {
            nlohmann::json cov;
            cov["cov"] = c.is_dx() ? "dx" : "th";
            cov["index"] = c.index();
            if (c.is_theta()) cov["derivs"] = multi_json(c.multi());
            wedge.push_back(std::move(cov));
        }
        nlohmann::json monomials = nlohmann::json::array();
        for (const auto& [m, coeff] : f.terms()) {
            nlohmann::json vars = nlohmann::json::array();
            for (const auto& [v, e] : m.factors()) {
                nlohmann::json var;
                var["var"] = v.is_base() ? "x" : "u";
                var["index"] = v.index();
                var["power"] = e;
                if (v.is_fiber()) var["derivs"] = multi_json(v.multi());
                vars.push_back(std::move(var));
            }
            monomials.push_back({{"variables", std::move(vars)},
                                 {"rational", rational_to_string(coeff)}});
        }
        terms.push_back({{"coeff_monomials", std::move(monomials)}, {"wedge", std::move(wedge)}});
    }
    return nlohmann::json{{"version", kWireVersion},
                          {"bundle", {{"n", phi.bundle().base_dim}, {"p", phi.bundle().fiber_dim}}},
                          {"terms", std::move(terms)}};
}

Form from_wire(const nlohmann::json& doc) {
    if (!doc.is_object()) throw WireError("wire: document must be an object");
    if (!doc.contains("version") || !doc["version"].is_number_integer())
        throw WireError("wire: missing version");
    if (doc["version"].get<int>() != kWireVersion)
        throw WireError("wire: unsupported version " + doc["version"].dump());
    if (!doc.contains("bundle")) throw WireError("wire: missing bundle");
    Bundle b(int_field(doc["bundle"], "n"), int_field(doc["bundle"], "p"));

    Form phi(b);
    if (!doc.contains("terms") || !doc["terms"].is_array())
        throw WireError("wire: missing terms array");
    try {
        for (const auto& term : doc["terms"]) {
            std::vector<CoVector> factors;
            if (!term.contains("wedge") || !term["wedge"].is_array())
                throw WireError("wire: term missing wedge array");
            for (const auto& cov : term["wedge"]) {
                std::string kind = string_field(cov, "cov");
                int index = int_field(cov, "index");
                if (kind == "dx")
                    factors.push_back(CoVector::dx(index));
                else if (kind == "th")
                    factors.push_back(CoVector::theta(
                        index, cov.contains("derivs") ? multi_from_json(cov["derivs"])
                                                      : MultiIndex()));
                else
                    throw WireError("wire: unknown covector kind '" + kind + "'");
            }
            auto norm = WedgeWord::normalize(std::move(factors));
            if (!norm) throw WireError("wire: repeated wedge factor");

            DiffPoly f;
            if (!term.contains("coeff_monomials") || !term["coeff_monomials"].is_array())
                throw WireError("wire: term missing coeff_monomials array");
            for (const auto& mono : term["coeff_monomials"]) {
                Monomial m;
                if (!mono.contains("variables") || !mono["variables"].is_array())
                    throw WireError("wire: monomial missing variables array");
                for (const auto& var : mono["variables"]) {
                    std::string kind = string_field(var, "var");
                    int index = int_field(var, "index");
                    int power = int_field(var, "power");
                    if (power < 1) throw WireError("wire: variable power must be >= 1");
                    if (kind == "x")
                        m = m.times(JetVariable::base(index), power);
                    else if (kind == "u")
                        m = m.times(JetVariable::fiber(index,
                                                       var.contains("derivs")
                                                           ? multi_from_json(var["derivs"])
                                                           : MultiIndex()),
                                    power);
                    else
                        throw WireError("wire: unknown variable kind '" + kind + "'");
                }
                Rational c;
                try {
                    c = rational_from_string(string_field(mono, "rational"));
                } catch (const std::invalid_argument& e) {
                    throw WireError(std::string("wire: ") + e.what());
                }
                f.add_term(m, c);
            }
            phi.add_term(norm->first, Rational(norm->second) * f);
        }
    } catch (const std::out_of_range& e) {
        throw WireError(std::string("wire: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw WireError(std::string("wire: ") + e.what());
    }
    return phi;
}

Form from_wire(const nlohmann::json& doc, const Bundle& expected) {
    Form phi = from_wire(doc);
    if (!(phi.bundle() == expected))
        throw WireError("wire: bundle mismatch (document has n=" +
                        std::to_string(phi.bundle().base_dim) +
                        ", p=" + std::to_string(phi.bundle().fiber_dim) + ")");
    return phi;
}

}  // namespace varcalc
