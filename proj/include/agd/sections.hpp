// SPDX-License-Identifier: MIT
//
// Algebroid sections over differential-operator phase spaces.
//
// Sections are Volterra-type symbols supported in the window
// [-(order+1), -1].  Everything here is exact: compositions of an oper with a
// finite window symbol terminate, so no truncation floors enter except where
// a formula projects explicitly.  The operations provided are the anchor
// action on the oper coefficients, the section bracket with its central
// density, the Adler-trace pairing bracket of linear functionals, the residue
// section condition with its trace-free correction, and the embeddings of the
// rank-two and rank-three display parameters.

#pragma once

#include "agd/oper.hpp"
#include "agd/variational.hpp"

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace agd {

// True when X is supported (and floored, if at all) inside [-(N+1), -1].
bool in_section_window(const PsiSymbol& X, int N);

// Projection onto the section window; records no floor (the input must be
// exact).
PsiSymbol window_part(const PsiSymbol& X, int N);

// Variation of the oper symbol along the section Y:
//     delta_Y L = (L o Y)_+ o L  -  L o (Y o L)_+ .
// Exact; throws unless Y lies in the section window.  The result is a
// differential-operator symbol of order < N.
PsiSymbol anchor_symbol(const Oper& L, const PsiSymbol& Y);

// Coefficient variations delta W_j extracted from anchor_symbol under L's
// sign convention, as a map j -> delta W_j.  Entries absent from the oper's
// generator range are reported too (j = 1 for an sl oper) when nonzero, so
// callers can assert they vanish.
std::map<int, DiffPoly> anchor_variations(const Oper& L, const PsiSymbol& Y);

// The same variations as an evolutionary assignment on the generator fields.
std::map<FieldId, DiffPoly> anchor_assignment(const Oper& L, const PsiSymbol& Y);

// Applies the evolutionary derivation induced by Y to an arbitrary
// differential polynomial.
DiffPoly induced_action(const Oper& L, const PsiSymbol& Y, const DiffPoly& p);

// Density of the pairing bracket of the linear functionals l_X, l_Y:
//     {l_X, l_Y} = <(L o X) o (L o Y)_+> - <(X o L) o (Y o L)_+> ,
// returned as the residue density (the functional is its z-integral).
DiffPoly agd_bracket_density(const Oper& L, const PsiSymbol& X, const PsiSymbol& Y);

// Alternative forms of the same functional, used as consistency properties:
// the minus-projection form and the contraction <X o delta_Y L>.
DiffPoly agd_bracket_density_minus_form(const Oper& L, const PsiSymbol& X, const PsiSymbol& Y);
DiffPoly agd_bracket_density_contraction(const Oper& L, const PsiSymbol& X, const PsiSymbol& Y);

// Section bracket
//     [X, Y] = X o (L o Y)_- - (Y o L)_- o X + (Y o L)_+ o X - X o (L o Y)_+
// projected onto the section window (trace-free corrected on sl opers).  The
// orientation is fixed so that the induced derivations represent it,
//     [D_X, D_Y] = D_[X,Y] ,
// and the pairing-bracket density then satisfies
//     {l_X, l_Y} = -1/2 <[X,Y] o L> .
PsiSymbol lie_bracket(const Oper& L, const PsiSymbol& X, const PsiSymbol& Y);

// The same combination before the window projection.
PsiSymbol lie_bracket_full(const Oper& L, const PsiSymbol& X, const PsiSymbol& Y);

// Leading central density: the top kappa-filtration part of the formal
// kappa-derivative of the pairing-bracket density.
DiffPoly central_term_leading(const Oper& L, const PsiSymbol& X, const PsiSymbol& Y);

// Residue of the commutator [X, L]; sections must make its canonical
// primitive vanish.  section_condition tests exactly that.
DiffPoly section_residue_primitive(const Oper& L, const PsiSymbol& X);
bool section_condition(const Oper& L, const PsiSymbol& X);

// Adds the trace-free correction to the lam^(-N) slot so that the residue
// primitive vanishes.  Requires exact divisibility by N kappa^N.
PsiSymbol sl_correct(const Oper& L, const PsiSymbol& X);

// Embeddings of the display parameters as window sections (trace-free
// corrected).  For order 3 the two slot types are:
//   type 1: e at lam^(-2);  type 2: kappa^2 e at lam^(-1), -kappa^2 e' at
//   lam^(-2); the lam^(-3) slot carries the correction in both cases.
PsiSymbol embed_n2(const Oper& L, const DiffPoly& e);
PsiSymbol embed_n3(const Oper& L, const DiffPoly& e, int type);

// Inverse of the rank-three embedding on the window: the (type-1, type-2)
// display components of a section (slots -1 and -2 only; the correction and
// tail slots are not consulted).
std::pair<DiffPoly, DiffPoly> section_components_n3(const PsiSymbol& X);

// Variation of a (possibly field-dependent) section S along the derivation
// induced by Z: the induced action applied slot-wise, then projected back to
// the residue slice on sl opers.  This is the structure-function compensator:
// for field-dependent S the commutator identity reads
//     [D_S, D_Z] = D_[S,Z] - D_{section_variation(Z, S)} .
PsiSymbol section_variation(const Oper& L, const PsiSymbol& Z, const PsiSymbol& S);

// Cyclic compensated Jacobi sum
//     sum_cyc ( [[X,Y],Z] - section_variation(Z, [X,Y]) ) .
// The derivation identity above forces this to act trivially: all its anchor
// variations vanish and its window components vanish, leaving at most an
// inert lam^(-(N+1)) tail.
PsiSymbol jacobi_cyclic_sum(const Oper& L, const PsiSymbol& X, const PsiSymbol& Y,
                            const PsiSymbol& Z);

// Jacobi report for the standard symbolic triples (rank three: the pure
// first-type triple, the pure second-type triple, and the mixed one; rank
// two: the single available triple).
struct JacobiTriple {
    std::string label;            // which triple, e.g. "222"
    bool components_vanish;       // every window slot of the anomaly is zero
    bool acts_trivially;          // every anchor variation of the anomaly is zero
};
std::vector<JacobiTriple> jacobi_anomaly_check(const Oper& L);

// Coefficient-wise zbar-derivative of the oper symbol.
PsiSymbol dbar_symbol(const Oper& L);

// The standard linear functional on sections built from the zbar-derivative
// of the oper: kappa * integral of Res(X o dbar L).
Functional oper_cocycle(const Oper& L, const PsiSymbol& X);

// Coboundary of a Functional-valued linear map on sections, evaluated on a
// pair of sections:
//     (delta c)(e1, e2) = D_{e1} c(e2) - D_{e2} c(e1) - c([e1, e2]) .
// cocycle_check tests that the defect vanishes identically (full Euler test
// over both derivative directions).
using SectionFunctional = std::function<Functional(const PsiSymbol&)>;
Functional cocycle_defect(const Oper& L, const SectionFunctional& c, const PsiSymbol& e1,
                          const PsiSymbol& e2);
bool cocycle_check(const Oper& L, const SectionFunctional& c, const PsiSymbol& e1,
                   const PsiSymbol& e2);

}  // namespace agd
