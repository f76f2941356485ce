// SPDX-License-Identifier: MIT
//
// Closed-form reference formulas for the rank-two (projective / Virasoro) and
// rank-three (W3) symmetry algebras: anchor variations of the base fields,
// section brackets with their central densities, the lifted variations of the
// conjugate fields, the moment (constraint) densities, and the associated
// scalar linear systems.  Everything is written over the graded ring with the
// covariantized z-derivative k*d_z, an independent zbar-derivative, and exact
// rational coefficients.
//
// All arguments are differential polynomials; base fields enter through their
// jets, and the parameter slots accept arbitrary (possibly base-dependent)
// polynomials, which the formulas differentiate as written.  Bilinear section
// brackets multiply first-slot factors before second-slot factors, so the same
// code polarizes correctly onto anticommuting arguments.

#pragma once

#include "agd/variational.hpp"

namespace agd::ref {

// k^n d_z^n p - the covariant z-derivative iterated n times.
DiffPoly kdz(const DiffPoly& p, int n = 1);

// ---------------------------------------------------------------------------
// Rank two: base field T (projective connection), conjugate mu (Beltrami
// differential), sections = chiral vector fields.
// ---------------------------------------------------------------------------

// Variation of T along the vector field e.
DiffPoly vir_anchor_T(const DiffPoly& T, const DiffPoly& e);

// Section bracket of two vector fields (the section part of the commutator).
DiffPoly vir_bracket(const DiffPoly& e1, const DiffPoly& e2);

// Central density of the extended commutator, including its T-dependent part;
// the last two terms form an exact cocycle on top of the standard one.
DiffPoly vir_central_density(const DiffPoly& T, const DiffPoly& e1, const DiffPoly& e2);

// Lifted variation of the Beltrami differential, inhomogeneous in zbar(e).
DiffPoly vir_anchor_mu(const DiffPoly& mu, const DiffPoly& e);

// Moment density F(T, mu); setting it to zero is the flatness constraint.
DiffPoly moment_n2(const DiffPoly& T, const DiffPoly& mu);

// Scalar linear system whose compatibility is F(T, mu) = 0: the weight -1/2
// z-equation and its zbar companion, plus the same pair in the adjoint
// (weight -1) representation.
DiffPoly schroedinger_op(const DiffPoly& T, const DiffPoly& psi);
DiffPoly dbar_op_n2(const DiffPoly& mu, const DiffPoly& psi);
DiffPoly adjoint_z_op_n2(const DiffPoly& T, const DiffPoly& phi);
DiffPoly adjoint_dbar_op_n2(const DiffPoly& mu, const DiffPoly& phi);

// ---------------------------------------------------------------------------
// Rank three: base fields T, W; conjugates mu, rho; sections carry a
// first-order slot (type 1) and a second-order slot (type 2).
// ---------------------------------------------------------------------------

// Value of a section bracket: the two differential-operator components.
struct SectionPairN3 {
    DiffPoly first_order;
    DiffPoly second_order;
};

// Anchor variations of the base fields along type-1 / type-2 parameters.
DiffPoly w3_anchor_T_1(const DiffPoly& T, const DiffPoly& e);
DiffPoly w3_anchor_W_1(const DiffPoly& T, const DiffPoly& W, const DiffPoly& e);
DiffPoly w3_anchor_T_2(const DiffPoly& T, const DiffPoly& W, const DiffPoly& e);
DiffPoly w3_anchor_W_2(const DiffPoly& T, const DiffPoly& W, const DiffPoly& e);

// Section brackets by slot types of (first, second) argument.  The (2,2)
// bracket has base-dependent structure functions through T.  All three are
// oriented so the anchor derivations close on them: [D_a, D_b] = D_{[a,b]}.
SectionPairN3 w3_bracket_11(const DiffPoly& e1, const DiffPoly& e2);
SectionPairN3 w3_bracket_12(const DiffPoly& e1, const DiffPoly& e2);
SectionPairN3 w3_bracket_22(const DiffPoly& T, const DiffPoly& e1, const DiffPoly& e2);

// Leading (top kappa-power) central densities of the extended brackets.
DiffPoly w3_central_lead_11(const DiffPoly& e1, const DiffPoly& e2);
DiffPoly w3_central_lead_12(const DiffPoly& e1, const DiffPoly& e2);
DiffPoly w3_central_lead_22(const DiffPoly& e1, const DiffPoly& e2);

// Lifted variations of the conjugate fields mu and rho.
DiffPoly w3_anchor_mu_1(const DiffPoly& mu, const DiffPoly& rho, const DiffPoly& e);
DiffPoly w3_anchor_rho_1(const DiffPoly& rho, const DiffPoly& e);
DiffPoly w3_anchor_mu_2(const DiffPoly& T, const DiffPoly& mu, const DiffPoly& rho,
                        const DiffPoly& e);
DiffPoly w3_anchor_rho_2(const DiffPoly& mu, const DiffPoly& rho, const DiffPoly& e);

// Moment densities conjugate to the two parameter types, normalized so that
// the type-j Hamiltonian equals the integral of e * moment plus nothing else:
//   int(e * moment_n3_j) = int(mu * dT + rho * dW) + int(e * zbar-cocycle).
DiffPoly moment_n3_1(const DiffPoly& T, const DiffPoly& W, const DiffPoly& mu,
                     const DiffPoly& rho);
DiffPoly moment_n3_2(const DiffPoly& T, const DiffPoly& W, const DiffPoly& mu,
                     const DiffPoly& rho);

// Scalar linear system whose compatibility is the pair of moment constraints:
// the third-order z-equation and the deformed zbar-equation on a weight -1
// scalar.
DiffPoly w3_z_op(const DiffPoly& T, const DiffPoly& W, const DiffPoly& psi);
DiffPoly w3_dbar_op(const DiffPoly& T, const DiffPoly& mu, const DiffPoly& rho,
                    const DiffPoly& psi);

// Compensated Jacobi combination: the cyclic sum of double brackets minus the
// variation of the inner bracket's structure functions along the outer
// parameter's anchor action.  Both components vanish identically when the
// algebra is consistent.  The _222 form takes three type-2 parameters; the
// _221 form takes e1, e2 of type 2 and e3 of type 1.  T and W must be the
// plain jet polynomials of the base fields.
SectionPairN3 w3_jacobi_defect_222(const DiffPoly& T, const DiffPoly& W, const DiffPoly& e1,
                                   const DiffPoly& e2, const DiffPoly& e3);
SectionPairN3 w3_jacobi_defect_221(const DiffPoly& T, const DiffPoly& W, const DiffPoly& e1,
                                   const DiffPoly& e2, const DiffPoly& e3);

}  // namespace agd::ref
