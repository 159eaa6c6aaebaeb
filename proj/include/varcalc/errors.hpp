#pragma once

#include <stdexcept>
#include <string>

#include "varcalc/form.hpp"
#include "varcalc/source_form.hpp"

namespace varcalc {

// Syntax or index error in the expression language; position is a 0-based
// byte offset into the input.
class ParseError : public std::runtime_error {
public:
    ParseError(std::string message, std::size_t position)
        : std::runtime_error(message + " (at position " + std::to_string(position) + ")"),
          position_(position) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

// Malformed or incompatible wire document.
class WireError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Target of a potential search in bidegree (k, s), s < n, is not d_H-closed.
class NotClosedError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// The bounded-order linear search was exhausted without finding a potential.
class NoPotentialError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Lagrangian is not variationally trivial; carries its Euler-Lagrange form.
class NotTrivialError : public std::runtime_error {
public:
    NotTrivialError(std::string message, SourceForm el)
        : std::runtime_error(std::move(message)), euler_lagrange_(std::move(el)) {}
    const SourceForm& euler_lagrange_form() const { return euler_lagrange_; }

private:
    SourceForm euler_lagrange_;
};

// Source form fails the Helmholtz condition; carries the obstruction.
class HelmholtzFailedError : public std::runtime_error {
public:
    HelmholtzFailedError(std::string message, Form obstruction)
        : std::runtime_error(std::move(message)), obstruction_(std::move(obstruction)) {}
    const Form& obstruction() const { return obstruction_; }

private:
    Form obstruction_;
};

// Internal verification equation failed; indicates a bug, not a bad input.
class RoundTripError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace varcalc
