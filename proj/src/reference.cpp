// SPDX-License-Identifier: MIT

#include "agd/reference.hpp"

#include <map>
#include <stdexcept>

namespace agd::ref {

DiffPoly kdz(const DiffPoly& p, int n) { return d_z_pow(p, n).mul_kappa(n); }

namespace {

// k d_z (k^2 d_z^2 - T) applied to x; the recurring third-order block of the
// rank-three structure functions.
DiffPoly third_block(const DiffPoly& T, const DiffPoly& x) {
    return kdz(kdz(x, 2) - T * x, 1);
}

// The field id of a polynomial that is exactly one underived jet with unit
// coefficient.  The Jacobi-defect builders need the ambient field ids to form
// the variation of the structure functions.
FieldId field_of_jet(const DiffPoly& p) {
    if (p.term_count() == 1) {
        const auto& [mono, c] = *p.terms().begin();
        if (c == Rat(1) && mono.kpow == 0 && mono.factors.size() == 1) {
            const auto& [key, exp] = mono.factors.front();
            if (exp == 1 && key.dz == 0 && key.dzbar == 0) return key.field;
        }
    }
    throw std::invalid_argument("expected a plain unit jet polynomial");
}

}  // namespace

// --------------------------------- rank two --------------------------------

DiffPoly vir_anchor_T(const DiffPoly& T, const DiffPoly& e) {
    return -(e * kdz(T)) - (T * kdz(e)).scaled(Rat(2)) + kdz(e, 3).scaled(Rat(1, 2));
}

DiffPoly vir_bracket(const DiffPoly& e1, const DiffPoly& e2) {
    return e1 * kdz(e2) - kdz(e1) * e2;
}

DiffPoly vir_central_density(const DiffPoly& T, const DiffPoly& e1, const DiffPoly& e2) {
    return (e1 * d_z_pow(e2, 3)).mul_kappa(2).scaled(Rat(-3, 2)) +
           (T * (e1 * d_z(e2))).scaled(Rat(2)) + d_z(T) * (e1 * e2);
}

DiffPoly vir_anchor_mu(const DiffPoly& mu, const DiffPoly& e) {
    return -(e * kdz(mu)) + mu * kdz(e) + d_zbar(e);
}

DiffPoly moment_n2(const DiffPoly& T, const DiffPoly& mu) {
    return d_zbar(T) + mu * kdz(T) + (kdz(mu) * T).scaled(Rat(2)) - kdz(mu, 3).scaled(Rat(1, 2));
}

DiffPoly schroedinger_op(const DiffPoly& T, const DiffPoly& psi) { return kdz(psi, 2) - T * psi; }

DiffPoly dbar_op_n2(const DiffPoly& mu, const DiffPoly& psi) {
    return d_zbar(psi) + mu * kdz(psi) - (kdz(mu) * psi).scaled(Rat(1, 2));
}

DiffPoly adjoint_z_op_n2(const DiffPoly& T, const DiffPoly& phi) {
    return kdz(phi, 3).scaled(Rat(-1, 2)) + (T * kdz(phi)).scaled(Rat(2)) + kdz(T) * phi;
}

DiffPoly adjoint_dbar_op_n2(const DiffPoly& mu, const DiffPoly& phi) {
    return d_zbar(phi) + mu * kdz(phi) - kdz(mu) * phi;
}

// -------------------------------- rank three -------------------------------

DiffPoly w3_anchor_T_1(const DiffPoly& T, const DiffPoly& e) {
    return kdz(e, 3).scaled(Rat(-2)) + (T * kdz(e)).scaled(Rat(2)) + kdz(T) * e;
}

DiffPoly w3_anchor_W_1(const DiffPoly& T, const DiffPoly& W, const DiffPoly& e) {
    return -kdz(e, 4) + (W * kdz(e)).scaled(Rat(3)) + kdz(W) * e + T * kdz(e, 2);
}

DiffPoly w3_anchor_T_2(const DiffPoly& T, const DiffPoly& W, const DiffPoly& e) {
    return kdz(e, 4) - T * kdz(e, 2) + (W.scaled(Rat(3)) - kdz(T).scaled(Rat(2))) * kdz(e) +
           (kdz(W).scaled(Rat(2)) - kdz(T, 2)) * e;
}

DiffPoly w3_anchor_W_2(const DiffPoly& T, const DiffPoly& W, const DiffPoly& e) {
    return kdz(e, 5).scaled(Rat(2, 3)) - (T * kdz(e, 3)).scaled(Rat(4, 3)) -
           (d_z(T) * d_z_pow(e, 2)).mul_kappa(3).scaled(Rat(2)) +
           ((T * T).scaled(Rat(2, 3)) - kdz(T, 2).scaled(Rat(2)) + kdz(W).scaled(Rat(2))) *
               kdz(e) +
           (kdz(W, 2) - kdz(T, 3).scaled(Rat(2, 3)) + (T * d_z(T)).mul_kappa(1).scaled(Rat(2, 3))) *
               e;
}

// The rank-three brackets are oriented so that the corresponding evolutionary
// derivations close on them: [D_a, D_b] = D_{bracket(a, b)} with the anchors
// above.  This is the opposite overall sign to the rank-two orientation of
// vir_bracket against vir_anchor_T; the two base conventions differ and the
// engine-facing conformance table records the relative constants.

SectionPairN3 w3_bracket_11(const DiffPoly& e1, const DiffPoly& e2) {
    return {kdz(e1) * e2 - e1 * kdz(e2), DiffPoly()};
}

SectionPairN3 w3_bracket_12(const DiffPoly& e1, const DiffPoly& e2) {
    SectionPairN3 out;
    out.first_order = kdz(e1, 2) * e2;
    out.second_order = (kdz(e1) * e2).scaled(Rat(2)) - e1 * kdz(e2);
    return out;
}

SectionPairN3 w3_bracket_22(const DiffPoly& T, const DiffPoly& e1, const DiffPoly& e2) {
    SectionPairN3 out;
    out.first_order =
        (e1 * third_block(T, e2)).scaled(Rat(2, 3)) - (third_block(T, e1) * e2).scaled(Rat(2, 3));
    out.second_order = e1 * kdz(e2, 2) - kdz(e1, 2) * e2;
    return out;
}

DiffPoly w3_central_lead_11(const DiffPoly& e1, const DiffPoly& e2) {
    return (e1 * d_z_pow(e2, 3)).mul_kappa(2).scaled(Rat(-2));
}

DiffPoly w3_central_lead_12(const DiffPoly& e1, const DiffPoly& e2) {
    return (e1 * d_z_pow(e2, 4)).mul_kappa(3);
}

DiffPoly w3_central_lead_22(const DiffPoly& e1, const DiffPoly& e2) {
    return (e1 * d_z_pow(e2, 5)).mul_kappa(4).scaled(Rat(2, 3));
}

DiffPoly w3_anchor_mu_1(const DiffPoly& mu, const DiffPoly& rho, const DiffPoly& e) {
    return -d_zbar(e) - mu * kdz(e) + kdz(mu) * e - rho * kdz(e, 2);
}

DiffPoly w3_anchor_rho_1(const DiffPoly& rho, const DiffPoly& e) {
    return (rho * kdz(e)).scaled(Rat(-2)) + kdz(rho) * e;
}

DiffPoly w3_anchor_mu_2(const DiffPoly& T, const DiffPoly& mu, const DiffPoly& rho,
                        const DiffPoly& e) {
    return kdz(mu, 2) * e -
           (third_block(T, rho) * e - third_block(T, e) * rho).scaled(Rat(2, 3));
}

DiffPoly w3_anchor_rho_2(const DiffPoly& mu, const DiffPoly& rho, const DiffPoly& e) {
    return -d_zbar(e) + rho * kdz(e, 2) - kdz(rho, 2) * e + (kdz(mu) * e).scaled(Rat(2)) -
           mu * kdz(e);
}

DiffPoly moment_n3_1(const DiffPoly& T, const DiffPoly& W, const DiffPoly& mu,
                     const DiffPoly& rho) {
    return d_zbar(T) + kdz(mu, 3).scaled(Rat(2)) - (T * kdz(mu)).scaled(Rat(2)) - kdz(T) * mu -
           kdz(rho, 4) + T * kdz(rho, 2) - (W * kdz(rho)).scaled(Rat(3)) +
           (d_z(T) * d_z(rho)).mul_kappa(2).scaled(Rat(2)) - (kdz(W) * rho).scaled(Rat(2)) +
           kdz(T, 2) * rho;
}

DiffPoly moment_n3_2(const DiffPoly& T, const DiffPoly& W, const DiffPoly& mu,
                     const DiffPoly& rho) {
    return d_zbar(W) + kdz(mu, 4) - T * kdz(mu, 2) - (W * kdz(mu)).scaled(Rat(3)) - kdz(W) * mu -
           kdz(rho, 5).scaled(Rat(2, 3)) + (T * kdz(rho, 3)).scaled(Rat(4, 3)) +
           (d_z(T) * d_z_pow(rho, 2)).mul_kappa(3).scaled(Rat(2)) +
           ((T * T).scaled(Rat(-2, 3)) + kdz(T, 2).scaled(Rat(2)) - kdz(W).scaled(Rat(2))) *
               kdz(rho) -
           (kdz(W, 2) - kdz(T, 3).scaled(Rat(2, 3)) + (T * d_z(T)).mul_kappa(1).scaled(Rat(2, 3))) *
               rho;
}

DiffPoly w3_z_op(const DiffPoly& T, const DiffPoly& W, const DiffPoly& psi) {
    return kdz(psi, 3) - T * kdz(psi) - W * psi;
}

DiffPoly w3_dbar_op(const DiffPoly& T, const DiffPoly& mu, const DiffPoly& rho,
                    const DiffPoly& psi) {
    return d_zbar(psi) + (mu - kdz(rho)) * d_z(psi) + (rho * d_z_pow(psi, 2)).mul_kappa(2) +
           ((kdz(rho, 2) - T * rho) * psi).scaled(Rat(2, 3)) - kdz(mu) * psi;
}

// ------------------------- rank-three Jacobi defects ------------------------

namespace {

SectionPairN3 pair_sum(const SectionPairN3& a, const SectionPairN3& b, const Rat& s = Rat(1)) {
    return {a.first_order + b.first_order.scaled(s), a.second_order + b.second_order.scaled(s)};
}

// Bracket of a mixed pair against a single type-2 parameter; both components
// of the pair contribute by bilinearity.
SectionPairN3 outer_with_type2(const DiffPoly& T, const SectionPairN3& p, const DiffPoly& e) {
    return pair_sum(w3_bracket_12(p.first_order, e), w3_bracket_22(T, p.second_order, e));
}

// Same against a type-1 parameter; the (type-2, type-1) slot order is the
// antisymmetric swap of the mixed bracket.
SectionPairN3 outer_with_type1(const SectionPairN3& p, const DiffPoly& e) {
    return pair_sum(w3_bracket_11(p.first_order, e), w3_bracket_12(e, p.second_order), Rat(-1));
}

}  // namespace

SectionPairN3 w3_jacobi_defect_222(const DiffPoly& T, const DiffPoly& W, const DiffPoly& e1,
                                   const DiffPoly& e2, const DiffPoly& e3) {
    FieldId idT = field_of_jet(T), idW = field_of_jet(W);
    auto term = [&](const DiffPoly& a, const DiffPoly& b, const DiffPoly& c) {
        SectionPairN3 inner = w3_bracket_22(T, a, b);
        SectionPairN3 outer = outer_with_type2(T, inner, c);
        // Variation of the structure-function dependence of the inner bracket
        // along the anchor action of the outer parameter.
        std::map<FieldId, DiffPoly> as{{idT, w3_anchor_T_2(T, W, c)},
                                       {idW, w3_anchor_W_2(T, W, c)}};
        SectionPairN3 comp{evolutionary(as, Parity::even, inner.first_order),
                           evolutionary(as, Parity::even, inner.second_order)};
        return pair_sum(outer, comp, Rat(-1));
    };
    return pair_sum(pair_sum(term(e1, e2, e3), term(e2, e3, e1)), term(e3, e1, e2));
}

SectionPairN3 w3_jacobi_defect_221(const DiffPoly& T, const DiffPoly& W, const DiffPoly& e1,
                                   const DiffPoly& e2, const DiffPoly& e3) {
    FieldId idT = field_of_jet(T), idW = field_of_jet(W);
    auto vary = [&](const std::map<FieldId, DiffPoly>& as, const SectionPairN3& p) {
        return SectionPairN3{evolutionary(as, Parity::even, p.first_order),
                             evolutionary(as, Parity::even, p.second_order)};
    };
    std::map<FieldId, DiffPoly> as1{{idT, w3_anchor_T_1(T, e3)}, {idW, w3_anchor_W_1(T, W, e3)}};

    SectionPairN3 inner12 = w3_bracket_22(T, e1, e2);
    SectionPairN3 termA = pair_sum(outer_with_type1(inner12, e3), vary(as1, inner12), Rat(-1));

    // Remaining cyclic arrangements; their inner brackets mix the types and
    // carry no structure-function dependence, so only the outer variation of
    // the inner components appears.
    SectionPairN3 inner23 = w3_bracket_12(e3, e2);  // bracket(e2 type-2, e3 type-1) = -this
    inner23.first_order = -inner23.first_order;
    inner23.second_order = -inner23.second_order;
    std::map<FieldId, DiffPoly> asB{{idT, w3_anchor_T_2(T, W, e1)},
                                    {idW, w3_anchor_W_2(T, W, e1)}};
    SectionPairN3 termB = pair_sum(outer_with_type2(T, inner23, e1), vary(asB, inner23), Rat(-1));

    SectionPairN3 inner31 = w3_bracket_12(e3, e1);
    std::map<FieldId, DiffPoly> asC{{idT, w3_anchor_T_2(T, W, e2)},
                                    {idW, w3_anchor_W_2(T, W, e2)}};
    SectionPairN3 termC = pair_sum(outer_with_type2(T, inner31, e2), vary(asC, inner31), Rat(-1));

    return pair_sum(pair_sum(termA, termB), termC);
}

}  // namespace agd::ref
