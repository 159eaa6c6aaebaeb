#pragma once

#include <string>

#include <json.hpp>

#include "varcalc/form.hpp"

namespace varcalc {

// Expression grammar: rational literals ("3", "1/2"), variables x<l>, u<i>,
// u<i>_<indices>, generators dx<l>, th<i>, th<i>_<indices>, operators
// + - * ^ and parentheses. '*' and '^' are both the graded product; '^' is
// conventionally written between wedge factors. Index suffixes use letters
// (x/y/z -> 1/2/3) or the numeric form u1_{1,1,2}.
Form parse_form(const std::string& text, const Bundle& b);

// Deterministic canonical printing; parse_form(print_canonical(phi)) == phi.
// Wedge factors print contact-first (descending), then dx ascending, with the
// reordering sign folded into the coefficient.
std::string print_canonical(const Form& phi);
std::string print_canonical(const DiffPoly& p, const Bundle& b);

// Version-tagged structured document; lossless and byte-stable for equal forms.
nlohmann::json to_wire(const Form& phi);
Form from_wire(const nlohmann::json& doc);
Form from_wire(const nlohmann::json& doc, const Bundle& expected);

}  // namespace varcalc
