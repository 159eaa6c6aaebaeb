#pragma once

#include <map>

#include "varcalc/form.hpp"

namespace varcalc {

// Element of E_1: sum_i E_i theta^i ^ omega, stored by its components E_i.
// Components that are zero are absent from the map.
class SourceForm {
public:
    explicit SourceForm(const Bundle& b) : bundle_(b) {}

    static SourceForm from_components(const Bundle& b, std::map<int, DiffPoly> components);

    const Bundle& bundle() const { return bundle_; }
    const std::map<int, DiffPoly>& components() const { return components_; }
    DiffPoly component(int i) const;
    bool is_zero() const { return components_.empty(); }

    void set_component(int i, DiffPoly value);

    // The (1, n)-form sum_i E_i theta^i ^ omega.
    Form to_form() const;

    // Inverse of to_form; throws std::invalid_argument when the form does not
    // have the rigid source shape.
    static SourceForm from_form(const Form& phi);

    bool operator==(const SourceForm&) const = default;

private:
    Bundle bundle_;
    std::map<int, DiffPoly> components_;
};

}  // namespace varcalc
