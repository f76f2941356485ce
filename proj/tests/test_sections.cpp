// SPDX-License-Identifier: MIT
//
// Section algebra over differential-operator symbols: window embeddings,
// anchor variations, the section bracket and its central density, Jacobi
// consistency, and the zbar cocycle, all calibrated against the closed-form
// reference algebra through the frozen conformance table.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "agd/conformance.hpp"
#include "agd/reference.hpp"
#include "agd/sections.hpp"

using namespace agd;

namespace {

struct Params {
    DiffPoly e1, e2, e3;
};

Params params() {
    auto& ft = FieldTable::instance();
    Params p;
    p.e1 = DiffPoly::jet(ft.declare("se1", Parity::even, 0, Rat(-1)));
    p.e2 = DiffPoly::jet(ft.declare("se2", Parity::even, 0, Rat(-1)));
    p.e3 = DiffPoly::jet(ft.declare("se3", Parity::even, 0, Rat(-1)));
    return p;
}

// Asserts the frozen relation raw = c * kappa^m * ref for the given table row.
void check_row(const std::string& id, const DiffPoly& raw, const DiffPoly& ref) {
    const ConformanceRow& row = conformance_row(id);
    const DiffPoly scaled = ref.scaled(row.c).mul_kappa(row.m);
    if (row.mod_dz) {
        CHECK_MESSAGE(Functional(raw - scaled).is_zero(), "row ", id);
    } else {
        CHECK_MESSAGE((raw - scaled).is_zero(), "row ", id);
    }
}

}  // namespace

TEST_CASE("window embeddings satisfy the residue section condition") {
    auto [e1, e2, e3] = params();
    {
        Oper L(2, OperType::sl, SignConvention::minus);
        PsiSymbol X = embed_n2(L, e1);
        CHECK(in_section_window(X, 2));
        CHECK(section_condition(L, X));
        CHECK(X.coeffs().at(-1) == e1);
        CHECK(X.coeffs().at(-2) == d_z(e1).scaled(Rat(-1, 2)));
    }
    {
        Oper L(3, OperType::sl, SignConvention::minus);
        DiffPoly t = DiffPoly::jet(L.w_field(2));
        PsiSymbol X1 = embed_n3(L, e1, 1);
        PsiSymbol X2 = embed_n3(L, e1, 2);
        CHECK(in_section_window(X1, 3));
        CHECK(in_section_window(X2, 3));
        CHECK(section_condition(L, X1));
        CHECK(section_condition(L, X2));
        CHECK(X1.coeffs().at(-2) == e1);
        CHECK(X1.coeffs().at(-3) == d_z(e1).scaled(Rat(-1)));
        CHECK(X2.coeffs().at(-1) == e1.mul_kappa(2));
        CHECK(X2.coeffs().at(-2) == d_z(e1).mul_kappa(2).scaled(Rat(-1)));
        CHECK(X2.coeffs().at(-3) ==
              t * e1 * DiffPoly::constant(Rat(1, 3)) + d_z_pow(e1, 2).mul_kappa(2).scaled(Rat(2, 3)));
        // component extraction inverts the embedding
        auto c2 = section_components_n3(X2);
        CHECK(c2.first.is_zero());
        CHECK(c2.second == e1);
        auto c1 = section_components_n3(X1);
        CHECK(c1.first == e1);
        CHECK(c1.second.is_zero());
    }
}

TEST_CASE("the slot below the window bottom is inert") {
    auto [e1, e2, e3] = params();
    for (int N : {2, 3}) {
        Oper L(N, OperType::sl, SignConvention::minus);
        PsiSymbol tail = PsiSymbol::term(e1, -(N + 1));
        CHECK(section_condition(L, tail));
        for (const auto& [j, v] : anchor_variations(L, tail)) {
            CAPTURE(j);
            CHECK(v.is_zero());
        }
    }
}

TEST_CASE("trace-free correction restores the section condition uniquely") {
    auto [e1, e2, e3] = params();
    Oper L(3, OperType::sl, SignConvention::minus);
    PsiSymbol X = PsiSymbol::term(e1, -2);  // off the residue slice
    CHECK_FALSE(section_condition(L, X));
    PsiSymbol Xc = sl_correct(L, X);
    CHECK(section_condition(L, Xc));
    // correction only touches the lam^(-3) slot
    CHECK(Xc.coeffs().at(-2) == e1);
    CHECK(Xc.coeffs().count(-1) == 0);
    // a pure lam^(-3) section satisfying the condition must vanish there:
    // two corrected sections with equal upper slots agree on the slot.
    PsiSymbol Y = PsiSymbol::term(e2, -3);
    CHECK_FALSE(section_condition(L, Y));
    // variations that would hit the absent trace generator are reported
    auto dv = anchor_variations(L, X);
    CHECK(dv.count(1) == 1);
    CHECK_FALSE(dv.at(1).is_zero());
    CHECK_THROWS_AS(anchor_assignment(L, X), std::invalid_argument);
}

TEST_CASE("anchor variations match the reference algebra") {
    auto [e1, e2, e3] = params();
    {
        Oper L(2, OperType::sl, SignConvention::minus);
        DiffPoly t = DiffPoly::jet(L.w_field(2));
        auto dv = anchor_variations(L, embed_n2(L, e1));
        check_row("n2.anchor.T", dv.at(2), ref::vir_anchor_T(t, e1));
    }
    {
        Oper L(3, OperType::sl, SignConvention::minus);
        DiffPoly t = DiffPoly::jet(L.w_field(2));
        DiffPoly w = DiffPoly::jet(L.w_field(3));
        auto dv1 = anchor_variations(L, embed_n3(L, e1, 1));
        auto dv2 = anchor_variations(L, embed_n3(L, e1, 2));
        check_row("n3.anchor.T.1", dv1.at(2), ref::w3_anchor_T_1(t, e1));
        check_row("n3.anchor.W.1", dv1.at(3), ref::w3_anchor_W_1(t, w, e1));
        check_row("n3.anchor.T.2", dv2.at(2), ref::w3_anchor_T_2(t, w, e1));
        check_row("n3.anchor.W.2", dv2.at(3), ref::w3_anchor_W_2(t, w, e1));
    }
}

TEST_CASE("section brackets match the reference algebra") {
    auto [e1, e2, e3] = params();
    {
        Oper L(2, OperType::sl, SignConvention::minus);
        PsiSymbol B = lie_bracket(L, embed_n2(L, e1), embed_n2(L, e2));
        CHECK(section_condition(L, B));
        check_row("n2.bracket", B.coeffs().at(-1), ref::vir_bracket(e1, e2));
        // the corrected representative keeps the embedded slot shape
        CHECK(B.coeffs().at(-2) == d_z(B.coeffs().at(-1)).scaled(Rat(-1, 2)));
    }
    {
        Oper L(3, OperType::sl, SignConvention::minus);
        DiffPoly t = DiffPoly::jet(L.w_field(2));
        PsiSymbol X11 = embed_n3(L, e1, 1), X21 = embed_n3(L, e2, 1);
        PsiSymbol X12 = embed_n3(L, e1, 2), X22 = embed_n3(L, e2, 2);
        PsiSymbol B11 = lie_bracket(L, X11, X21);
        PsiSymbol B12 = lie_bracket(L, X11, X22);
        PsiSymbol B22 = lie_bracket(L, X12, X22);
        for (const PsiSymbol* B : {&B11, &B12, &B22}) CHECK(section_condition(L, *B));
        auto c11 = section_components_n3(B11);
        auto c12 = section_components_n3(B12);
        auto c22 = section_components_n3(B22);
        auto r11 = ref::w3_bracket_11(e1, e2);
        auto r12 = ref::w3_bracket_12(e1, e2);
        auto r22 = ref::w3_bracket_22(t, e1, e2);
        check_row("n3.bracket.11.1", c11.first, r11.first_order);
        CHECK(c11.second.is_zero());
        CHECK(r11.second_order.is_zero());
        check_row("n3.bracket.12.1", c12.first, r12.first_order);
        check_row("n3.bracket.12.2", c12.second, r12.second_order);
        check_row("n3.bracket.22.1", c22.first, r22.first_order);
        check_row("n3.bracket.22.2", c22.second, r22.second_order);
        // the bracket re-embeds from its components up to the inert tail slot
        for (const PsiSymbol* B : {&B11, &B12, &B22}) {
            auto cps = section_components_n3(*B);
            PsiSymbol X = PsiSymbol::term(cps.second.mul_kappa(2), -1);
            X.set_term(-2, cps.first - d_z(cps.second).mul_kappa(2));
            PsiSymbol diff = *B - sl_correct(L, X);
            for (const auto& [d, c] : diff.coeffs()) {
                CAPTURE(d);
                CHECK((d == -4 || c.is_zero()));
            }
        }
    }
}

TEST_CASE("induced derivations represent the section bracket") {
    auto [e1, e2, e3] = params();
    {
        Oper L(2, OperType::sl, SignConvention::minus);
        DiffPoly t = DiffPoly::jet(L.w_field(2));
        PsiSymbol X = embed_n2(L, e1), Y = embed_n2(L, e2);
        auto AX = anchor_assignment(L, X), AY = anchor_assignment(L, Y);
        DiffPoly comm = evolutionary(AX, Parity::even, evolutionary(AY, Parity::even, t)) -
                        evolutionary(AY, Parity::even, evolutionary(AX, Parity::even, t));
        check_row("n2.homomorphism", comm, induced_action(L, lie_bracket(L, X, Y), t));
    }
    {
        Oper L(3, OperType::sl, SignConvention::minus);
        DiffPoly t = DiffPoly::jet(L.w_field(2));
        DiffPoly w = DiffPoly::jet(L.w_field(3));
        const PsiSymbol pairs[3][2] = {
            {embed_n3(L, e1, 1), embed_n3(L, e2, 1)},
            {embed_n3(L, e1, 1), embed_n3(L, e2, 2)},
            {embed_n3(L, e1, 2), embed_n3(L, e2, 2)},
        };
        for (const auto& pr : pairs) {
            const PsiSymbol &X = pr[0], &Y = pr[1];
            auto AX = anchor_assignment(L, X), AY = anchor_assignment(L, Y);
            PsiSymbol B = lie_bracket(L, X, Y);
            for (const DiffPoly& f : {t, w}) {
                DiffPoly comm = evolutionary(AX, Parity::even, evolutionary(AY, Parity::even, f)) -
                                evolutionary(AY, Parity::even, evolutionary(AX, Parity::even, f));
                check_row("n3.homomorphism", comm, induced_action(L, B, f));
            }
        }
    }
}

TEST_CASE("pairing-bracket density forms agree as functionals") {
    auto [e1, e2, e3] = params();
    for (int N : {2, 3}) {
        CAPTURE(N);
        Oper L(N, OperType::sl, SignConvention::minus);
        PsiSymbol X = (N == 2) ? embed_n2(L, e1) : embed_n3(L, e1, 2);
        PsiSymbol Y = (N == 2) ? embed_n2(L, e2) : embed_n3(L, e2, 2);
        DiffPoly d = agd_bracket_density(L, X, Y);
        CHECK(Functional(d - agd_bracket_density_minus_form(L, X, Y)).is_zero());
        CHECK(Functional(d - agd_bracket_density_contraction(L, X, Y)).is_zero());
        const std::string row = (N == 2) ? "n2.pairing.halfbracket" : "n3.pairing.halfbracket";
        check_row(row, d, res(compose(lie_bracket_full(L, X, Y), L.symbol(), -1)));
    }
}

TEST_CASE("leading central densities match the reference algebra") {
    auto [e1, e2, e3] = params();
    {
        Oper L(2, OperType::sl, SignConvention::minus);
        DiffPoly t = DiffPoly::jet(L.w_field(2));
        check_row("n2.central", central_term_leading(L, embed_n2(L, e1), embed_n2(L, e2)),
                  ref::vir_central_density(t, e1, e2).top_kappa_part());
    }
    {
        Oper L(3, OperType::sl, SignConvention::minus);
        check_row("n3.central.11",
                  central_term_leading(L, embed_n3(L, e1, 1), embed_n3(L, e2, 1)),
                  ref::w3_central_lead_11(e1, e2));
        check_row("n3.central.12",
                  central_term_leading(L, embed_n3(L, e1, 1), embed_n3(L, e2, 2)),
                  ref::w3_central_lead_12(e1, e2));
        check_row("n3.central.22",
                  central_term_leading(L, embed_n3(L, e1, 2), embed_n3(L, e2, 2)),
                  ref::w3_central_lead_22(e1, e2));
    }
}

TEST_CASE("compensated commutator identity holds for dependent sections") {
    auto [e1, e2, e3] = params();
    Oper L(3, OperType::sl, SignConvention::minus);
    DiffPoly t = DiffPoly::jet(L.w_field(2));
    DiffPoly w = DiffPoly::jet(L.w_field(3));
    // S = a bracket value: genuinely field-dependent through the structure
    // functions; Z = a plain embedded section.
    PsiSymbol S = lie_bracket(L, embed_n3(L, e1, 2), embed_n3(L, e2, 2));
    PsiSymbol Z = embed_n3(L, e3, 2);
    auto AS = anchor_assignment(L, S), AZ = anchor_assignment(L, Z);
    for (const DiffPoly& f : {t, w}) {
        DiffPoly comm = evolutionary(AS, Parity::even, evolutionary(AZ, Parity::even, f)) -
                        evolutionary(AZ, Parity::even, evolutionary(AS, Parity::even, f));
        DiffPoly rhs = induced_action(L, lie_bracket(L, S, Z), f) -
                       induced_action(L, section_variation(L, Z, S), f);
        CHECK(comm == rhs);
    }
}

TEST_CASE("cyclic Jacobi sums act trivially at both ranks") {
    for (int N : {2, 3}) {
        CAPTURE(N);
        Oper L(N, OperType::sl, SignConvention::minus);
        for (const auto& r : jacobi_anomaly_check(L)) {
            CAPTURE(r.label);
            CHECK(r.components_vanish);
            CHECK(r.acts_trivially);
        }
    }
}

TEST_CASE("reference jacobi defects vanish") {
    auto [e1, e2, e3] = params();
    auto& ft = FieldTable::instance();
    DiffPoly t = DiffPoly::jet(ft.declare("T", Parity::even, 0, Rat(2)));
    DiffPoly w = DiffPoly::jet(ft.declare("W", Parity::even, 0, Rat(3)));
    auto d222 = ref::w3_jacobi_defect_222(t, w, e1, e2, e3);
    CHECK(d222.first_order.is_zero());
    CHECK(d222.second_order.is_zero());
    auto d221 = ref::w3_jacobi_defect_221(t, w, e1, e2, e3);
    CHECK(d221.first_order.is_zero());
    CHECK(d221.second_order.is_zero());
}

TEST_CASE("the zbar cocycle is closed and correctly scaled") {
    auto [e1, e2, e3] = params();
    {
        Oper L(2, OperType::sl, SignConvention::minus);
        DiffPoly t = DiffPoly::jet(L.w_field(2));
        PsiSymbol X = embed_n2(L, e1), Y = embed_n2(L, e2);
        SectionFunctional c = [&](const PsiSymbol& S) { return oper_cocycle(L, S); };
        check_row("n2.cocycle", c(X).density(), e1 * d_zbar(t));
        CHECK(cocycle_check(L, c, X, Y));
        SectionFunctional cb = [&](const PsiSymbol& S) {
            return Functional(induced_action(L, S, t * t));
        };
        CHECK(cocycle_check(L, cb, X, Y));
    }
    {
        Oper L(3, OperType::sl, SignConvention::minus);
        DiffPoly t = DiffPoly::jet(L.w_field(2));
        DiffPoly w = DiffPoly::jet(L.w_field(3));
        PsiSymbol X11 = embed_n3(L, e1, 1), X21 = embed_n3(L, e2, 1);
        PsiSymbol X12 = embed_n3(L, e1, 2), X22 = embed_n3(L, e2, 2);
        SectionFunctional c = [&](const PsiSymbol& S) { return oper_cocycle(L, S); };
        check_row("n3.cocycle.1", c(X11).density(), e1 * d_zbar(t));
        check_row("n3.cocycle.2", c(X12).density(), e1 * d_zbar(w));
        CHECK(cocycle_check(L, c, X11, X21));
        CHECK(cocycle_check(L, c, X11, X22));
        CHECK(cocycle_check(L, c, X12, X22));
        SectionFunctional cb = [&](const PsiSymbol& S) {
            return Functional(induced_action(L, S, t * w));
        };
        CHECK(cocycle_check(L, cb, X11, X22));
        CHECK(cocycle_check(L, cb, X12, X22));
    }
}

TEST_CASE("conformance table is internally consistent") {
    const auto& table = conformance_table();
    CHECK(table.size() >= 20);
    for (const auto& row : table) {
        CHECK_FALSE(row.id.empty());
        CHECK_FALSE(row.engine.empty());
        CHECK_FALSE(row.reference.empty());
        CHECK_FALSE(row.c.is_zero());
        CHECK(row.m >= 0);
        CHECK(&conformance_row(row.id) == &row);
    }
    CHECK_THROWS_AS(conformance_row("no.such.row"), std::out_of_range);
}
