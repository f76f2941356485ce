#pragma once

// Extended phase space for second- and third-order scalar opers: the dual
// element xi conjugate to the generator fields, the zero-curvature constraint
// it satisfies, Hamiltonians of infinitesimal symmetries, the ultralocal
// canonical bracket on the conjugate pairs, and the deformed dbar operator of
// the associated linear system.
//
// The central exact statements certified by the test suite:
//   * the constraint components reproduce the moment densities of the
//     symmetry action, so solving the constraint identifies the dbar-jets of
//     the generators with differential polynomials in the conjugate fields;
//   * h_Y generates the symmetry action on generators and conjugates alike
//     through the canonical bracket, off the constraint surface;
//   * Y |-> h_Y is a genuine Lie algebra homomorphism: {h_X, h_Y} = h_[X,Y]
//     with unit coefficient and no central term, off the constraint surface.

#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "agd/oper.hpp"
#include "agd/psymbol.hpp"
#include "agd/sections.hpp"
#include "agd/variational.hpp"

namespace agd {

// Dual element xi = sum_{j=1}^{N+1} nu_j lam^{-j} with nu_{N+1} = 1, the
// lam^{-N} slot fixed by the residue section condition, and the remaining
// slots carrying the conjugate fields:
//   order 2:  nu_1 = mu
//   order 3:  nu_1 = k^2 rho,  nu_2 = k mu - k^2 rho'
// The kappa dressing of the order-3 slots is the unique one for which the
// pairing corrections of symbol composition cancel modulo total derivatives,
// so that Res(delta L o delta xi) collapses onto sum_j delta W_j delta c_j.
struct XiField {
    PsiSymbol sym;                    // the full dual symbol
    std::vector<FieldId> conjugates;  // {mu} at order 2, {mu, rho} at order 3
};

// Builds xi for an sl oper of order 2 or 3.  `conjugates` must list the
// even, ghost-number-zero conjugate fields, one per generator, in generator
// order (mu conjugate to W_2, then rho conjugate to W_3).
XiField make_xi(const Oper& L, const std::vector<FieldId>& conjugates);

// Zero-curvature constraint symbol F = k dbar L + delta_xi L.  Its degree is
// at most N-1 and on sl opers the lam^{N-1} coefficient vanishes identically,
// leaving one component per generator.
PsiSymbol constraint_symbol(const Oper& L, const XiField& xi);

// Component j (j = 2..N): the lam^{N-j} coefficient of the constraint, the
// moment density of the generator W_j up to a kappa power.
std::map<int, DiffPoly> constraint_components(const Oper& L, const XiField& xi);

// Substitution rules solving the constraint F = 0 for the dbar-jets of the
// generators: W_j[0,1] -> W_j[0,1] + F_j / k^{N-j+1} has the dbar-jet cancel
// against the remaining terms (the solve coefficient is exactly one).  Apply
// with substitute(..., rules, /*prolong=*/true).
std::map<JetKey, DiffPoly> on_shell_rules(const Oper& L, const XiField& xi);

// Hamiltonian of the window section Y:
//   h_Y = int Res(Y o F) / k^{2(N-2)}.
// Before normalizing, the pairing identity
//   int Res(Y o F) + int Res(xi o delta_Y L) = int k Res(Y o dbar L)
// is verified exactly; a violation throws std::logic_error.  The kappa
// normalization requires Y to be a dressed section (an embed_n* image or a
// bracket of such); an undressed symbol may fail the division.
Functional hamiltonian(const Oper& L, const XiField& xi, const PsiSymbol& Y);

// Canonical flow of the conjugate fields generated by h_Y, keyed by the
// conjugate FieldId: delta mu = -E_T h, delta rho = -E_W h.  Together with
// anchor_variations this is the full affine flow on the extended phase space.
std::map<FieldId, DiffPoly> xi_anchor(const Oper& L, const XiField& xi, const PsiSymbol& Y);

// Conjugate pairs (q_a, p_a) = (generator, conjugate) for the canonical
// bracket: {(T, mu)} at order 2, {(T, mu), (W, rho)} at order 3.
std::vector<std::pair<FieldId, FieldId>> canonical_pairs(const Oper& L, const XiField& xi);

// Ultralocal canonical bracket of functionals over even conjugate pairs:
//   {f, g} = sum_a int ( E_{p_a} f  E_{q_a} g  -  E_{q_a} f  E_{p_a} g ).
// With pairs from canonical_pairs this gives {h, W_j-moments} = anchor
// variations exactly and makes Y |-> h_Y a homomorphism.  (Odd conjugate
// pairs belong to the BRST layer, which extends this bracket with signs.)
Functional canonical_bracket(const std::vector<std::pair<FieldId, FieldId>>& pairs,
                             const Functional& f, const Functional& g);

// Deformation of the dbar operator induced by xi:
//   A = -(L xi)_+   (acting on the adjoint line),
//   Astar = (xi L)_+ (the z-part of the deformed dbar operator on ker L).
struct DbarDeformation {
    PsiSymbol A;
    PsiSymbol Astar;
};
DbarDeformation dbar_deformation(const Oper& L, const XiField& xi);

// Compatibility of the linear system L psi = 0, (k dbar + (xi L)_+) psi = 0:
// right-reduces D = k dbar L - L o (xi L)_+ modulo L.  The remainder is the
// obstruction; it vanishes exactly on the constraint surface, where the
// quotient collapses onto -(L xi)_+, matching the adjoint-line deformation.
struct CompatibilityReport {
    PsiSymbol quotient;
    PsiSymbol remainder;  // off-shell obstruction, reported as computed
    bool remainder_on_shell_zero = false;
    bool quotient_matches_deformation_on_shell = false;
    bool ok() const { return remainder_on_shell_zero && quotient_matches_deformation_on_shell; }
};
CompatibilityReport compatibility_check(const Oper& L, const XiField& xi);

}  // namespace agd
