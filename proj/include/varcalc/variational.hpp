#pragma once

#include "varcalc/form.hpp"
#include "varcalc/source_form.hpp"

namespace varcalc {

// Interior Euler operator on a homogeneous (k, n)-form, k >= 1:
//   tau_bar(phi) = sum_{i,Lambda} (-1)^|Lambda| theta^i ^ d_Lambda(partial^Lambda_i _| phi).
// The sum runs over the (i, Lambda) pairs occurring among phi's contact
// factors; every other term contracts to zero.
Form tau_bar(const Form& phi);

// tau = sum_{k>0} (1/k) tau_bar o h_k o h^n. Projector onto source-form
// representatives: kills everything outside bidegrees (k >= 1, n).
Form tau(const Form& phi);

// Variational operator delta = tau o d on homogeneous (k, n)-forms, k >= 0.
// On horizontal densities this is the Euler-Lagrange map; on E_1 the
// Helmholtz test.
Form delta(const Form& phi);

// Euler-Lagrange components of a horizontal density L = f * omega:
//   E_i = sum_Lambda (-1)^|Lambda| d_Lambda(partial f / partial u^i_Lambda).
// Computed directly from the component formula, independently of delta.
SourceForm euler_lagrange(const Form& lagrangian);

struct HelmholtzReport {
    bool passes;
    Form obstruction;  // delta of the source form; zero exactly when passes
};

HelmholtzReport helmholtz_check(const SourceForm& eps);

// rho = source_part + d_H(potential) with source_part = tau(rho).
struct Decomposition {
    Form source_part;
    Form potential;
};

// Splits a homogeneous (k, n)-form, k >= 1, along Q^{k,n} = E_k + d_H(Q^{k,n-1}).
Decomposition decompose(const Form& rho);

struct FirstVariation {
    SourceForm source;  // delta(L)
    Form boundary;      // phi with dL = delta(L) + d_H(phi)
};

// First variational formula for a horizontal density.
FirstVariation first_variation(const Form& lagrangian);

}  // namespace varcalc
