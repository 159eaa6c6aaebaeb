// varcalc: command-line front end for the variational calculus toolkit.
//
// Exit codes: 0 success; 1 usage, parse, or internal errors; 2 well-defined
// negative verdicts (Helmholtz failure, non-trivial Lagrangian).

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>

#include "varcalc/errors.hpp"
#include "varcalc/exprio.hpp"
#include "varcalc/inverse.hpp"
#include "varcalc/variational.hpp"

namespace {

using namespace varcalc;

struct Options {
    int base_dim = 1;
    int fiber_dim = 1;
    std::string format = "text";
    int max_order = -1;  // initial jet-order bound for potential searches; -1 = automatic
    std::string expression;
};

std::string read_expression(const Options& opts) {
    if (!opts.expression.empty()) return opts.expression;
    std::string text((std::istreambuf_iterator<char>(std::cin)),
                     std::istreambuf_iterator<char>());
    return text;
}

// Lagrangian inputs may be written as a bare coefficient; the volume form is
// implied.
Form as_lagrangian(Form phi) {
    const Bundle b = phi.bundle();
    if (phi.is_zero()) return phi;
    auto bd = phi.bidegree();
    if (bd && bd->contact == 0 && bd->horizontal == 0) return wedge(phi, volume_form(b));
    if (bd && bd->contact == 0 && bd->horizontal == b.base_dim) return phi;
    throw std::invalid_argument("expected a horizontal density or a bare coefficient");
}

// Source-form inputs: a bare coefficient is E_1; a full (1, n)-form must have
// the source shape sum_i E_i th<i> ^ omega.
SourceForm as_source_form(Form phi) {
    const Bundle b = phi.bundle();
    if (phi.is_zero()) return SourceForm(b);
    auto bd = phi.bidegree();
    if (bd && bd->contact == 0 && bd->horizontal == 0) {
        SourceForm eps(b);
        eps.set_component(1, phi.coefficient(WedgeWord()));
        return eps;
    }
    return SourceForm::from_form(phi);
}

Form potential_with_bounds(const Form& target, const Options& opts) {
    if (opts.max_order >= 0)
        return dh_potential(target, SolveBounds{opts.max_order, target.poly_degree()});
    return dh_potential(target);
}

void print_components(const SourceForm& eps, std::ostream& out) {
    for (int i = 1; i <= eps.bundle().fiber_dim; ++i)
        out << "E_" << i << " = " << print_canonical(eps.component(i), eps.bundle()) << "\n";
}

int run_verb(const std::string& verb, const Options& opts) {
    const Bundle bundle(opts.base_dim, opts.fiber_dim);
    const bool wire = opts.format == "wire";
    Form input = parse_form(read_expression(opts), bundle);

    auto emit_form = [&](const Form& phi) {
        if (wire)
            std::cout << to_wire(phi).dump() << "\n";
        else
            std::cout << print_canonical(phi) << "\n";
    };

    if (verb == "d" || verb == "dh" || verb == "dv" || verb == "tau") {
        Form result =
            verb == "d" ? exterior_d(input)
                        : verb == "dh" ? horizontal_d(input)
                                       : verb == "dv" ? vertical_d(input) : tau(input);
        emit_form(result);
        return 0;
    }
    if (verb == "delta") {
        emit_form(delta(input));
        return 0;
    }
    if (verb == "el") {
        SourceForm el = euler_lagrange(as_lagrangian(std::move(input)));
        if (wire)
            std::cout << to_wire(el.to_form()).dump() << "\n";
        else
            print_components(el, std::cout);
        return 0;
    }
    if (verb == "helmholtz") {
        auto report = helmholtz_check(as_source_form(std::move(input)));
        if (wire) {
            nlohmann::json doc{{"version", 1},
                               {"passes", report.passes},
                               {"obstruction", to_wire(report.obstruction)}};
            std::cout << doc.dump() << "\n";
        } else if (report.passes) {
            std::cout << "PASS\n";
        } else {
            std::cout << "FAIL\n"
                      << "obstruction = " << print_canonical(report.obstruction) << "\n";
        }
        return report.passes ? 0 : 2;
    }
    if (verb == "trivial") {
        Form lagrangian = as_lagrangian(std::move(input));
        SourceForm el = euler_lagrange(lagrangian);
        if (!el.is_zero()) {
            if (wire) {
                nlohmann::json doc{{"version", 1},
                                   {"trivial", false},
                                   {"euler_lagrange", to_wire(el.to_form())}};
                std::cout << doc.dump() << "\n";
            } else {
                std::cout << "NOT TRIVIAL\n";
                print_components(el, std::cout);
            }
            return 2;
        }
        Form xi = potential_with_bounds(lagrangian, opts);
        if (wire) {
            nlohmann::json doc{{"version", 1}, {"trivial", true}, {"xi", to_wire(xi)}};
            std::cout << doc.dump() << "\n";
        } else {
            std::cout << "xi = " << print_canonical(xi) << "\n";
        }
        return 0;
    }
    if (verb == "inverse") {
        SourceForm eps = as_source_form(std::move(input));
        auto report = helmholtz_check(eps);
        if (!report.passes) {
            if (wire) {
                nlohmann::json doc{{"version", 1},
                                   {"passes", false},
                                   {"obstruction", to_wire(report.obstruction)}};
                std::cout << doc.dump() << "\n";
            } else {
                std::cout << "HELMHOLTZ FAIL\n"
                          << "obstruction = " << print_canonical(report.obstruction) << "\n";
            }
            return 2;
        }
        Form lagrangian = volterra_lagrangian(eps);
        if (wire) {
            nlohmann::json doc{{"version", 1}, {"passes", true}, {"lagrangian", to_wire(lagrangian)}};
            std::cout << doc.dump() << "\n";
        } else {
            std::cout << "L = " << print_canonical(lagrangian) << "\n";
        }
        return 0;
    }
    if (verb == "decompose") {
        auto bd = input.bidegree();
        if (!input.is_zero() &&
            (!bd || bd->horizontal != bundle.base_dim || bd->contact < 1))
            throw std::invalid_argument("decompose: expected a homogeneous (k, n)-form, k >= 1");
        Form source = tau(input);
        Form remainder = input - source;
        Form potential =
            remainder.is_zero() ? Form(bundle) : potential_with_bounds(remainder, opts);
        if (wire) {
            nlohmann::json doc{{"version", 1},
                               {"source", to_wire(source)},
                               {"potential", to_wire(potential)}};
            std::cout << doc.dump() << "\n";
        } else {
            std::cout << "source = " << print_canonical(source) << "\n"
                      << "potential = " << print_canonical(potential) << "\n";
        }
        return 0;
    }
    if (verb == "firstvar") {
        Form lagrangian = as_lagrangian(std::move(input));
        Form dv = vertical_d(lagrangian);
        SourceForm source(bundle);
        Form potential(bundle);
        if (!dv.is_zero()) {
            Form source_part = tau(dv);
            Form remainder = dv - source_part;
            if (!remainder.is_zero()) potential = potential_with_bounds(remainder, opts);
            source = SourceForm::from_form(source_part);
        }
        if (wire) {
            nlohmann::json doc{{"version", 1},
                               {"source", to_wire(source.to_form())},
                               {"potential", to_wire(potential)}};
            std::cout << doc.dump() << "\n";
        } else {
            print_components(source, std::cout);
            std::cout << "phi = " << print_canonical(potential) << "\n";
        }
        return 0;
    }
    std::cerr << "unknown verb: " << verb << "\n";
    return 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Variational bicomplex calculator for differential-polynomial forms"};
    app.require_subcommand(1);

    Options opts;
    std::string verb;
    const std::vector<std::pair<std::string, std::string>> verbs = {
        {"d", "exterior differential"},
        {"dh", "horizontal differential d_H"},
        {"dv", "vertical differential d_V"},
        {"tau", "interior Euler projector"},
        {"delta", "variational operator tau o d"},
        {"el", "Euler-Lagrange components of a horizontal density"},
        {"helmholtz", "Helmholtz check of a source form"},
        {"trivial", "total-divergence potential of a variationally trivial Lagrangian"},
        {"inverse", "Volterra Lagrangian of a variational source form"},
        {"decompose", "split a (k,n)-form into source part plus d_H potential"},
        {"firstvar", "first variational formula dL = delta(L) + d_H(phi)"},
    };
    for (const auto& [name, desc] : verbs) {
        auto* sub = app.add_subcommand(name, desc);
        sub->add_option("--base-dim", opts.base_dim, "base dimension n")->default_val(1);
        sub->add_option("--fiber-dim", opts.fiber_dim, "fiber dimension p")->default_val(1);
        sub->add_option("--format", opts.format, "output format")
            ->check(CLI::IsMember({"text", "wire"}))
            ->default_val("text");
        sub->add_option("--max-order", opts.max_order,
                        "initial jet-order bound for potential searches");
        sub->add_option("expression", opts.expression, "input expression (stdin when omitted)");
        sub->callback([&verb, name = name] { verb = name; });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        return run_verb(verb, opts);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 1;
    } catch (const WireError& e) {
        std::cerr << "wire error: " << e.what() << "\n";
        return 1;
    } catch (const NotClosedError& e) {
        std::cerr << e.what() << "\n";
        return 1;
    } catch (const NoPotentialError& e) {
        std::cerr << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
