#include "varcalc/rational.hpp"

#include <cctype>

namespace varcalc {

Rational rational_from_string(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty rational literal");
    std::size_t i = 0;
    if (text[i] == '-') ++i;
    bool digits = false;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        ++i;
        digits = true;
    }
    if (!digits) throw std::invalid_argument("malformed rational literal: " + text);
    if (i < text.size()) {
        if (text[i] != '/') throw std::invalid_argument("malformed rational literal: " + text);
        ++i;
        bool den_digits = false;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            ++i;
            den_digits = true;
        }
        if (!den_digits || i != text.size())
            throw std::invalid_argument("malformed rational literal: " + text);
    }
    Rational r;
    if (mpq_set_str(r.get_mpq_t(), text.c_str(), 10) != 0)
        throw std::invalid_argument("malformed rational literal: " + text);
    if (r.get_den() == 0) throw std::invalid_argument("rational with zero denominator: " + text);
    r.canonicalize();
    return r;
}

std::string rational_to_string(const Rational& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

}  // namespace varcalc
