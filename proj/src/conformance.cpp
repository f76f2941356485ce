// SPDX-License-Identifier: MIT

#include "agd/conformance.hpp"

#include <stdexcept>

namespace agd {

const std::vector<ConformanceRow>& conformance_table() {
    static const std::vector<ConformanceRow> table = {
        // ---- rank two ----------------------------------------------------
        {"n2.anchor.T", "anchor_variations(L2, embed_n2(e))[T]", "vir_anchor_T(T, e)", Rat(-1), 1,
         false},
        {"n2.bracket", "lie_bracket(L2, embed_n2(e1), embed_n2(e2)) slot -1",
         "vir_bracket(e1, e2)", Rat(-1), 1, false},
        {"n2.central", "central_term_leading(L2, embed_n2(e1), embed_n2(e2))",
         "top_kappa_part(vir_central_density(T, e1, e2))", Rat(-4, 3), 1, true},
        {"n2.cocycle", "oper_cocycle(L2, embed_n2(e))", "int e * dzbar T", Rat(-1), 1, true},
        {"n2.homomorphism", "[D_X, D_Y] T", "induced_action(L2, lie_bracket(L2, X, Y), T)", Rat(1),
         0, false},
        {"n2.pairing.halfbracket", "agd_bracket_density(L2, X, Y)",
         "res(lie_bracket_full(L2, X, Y) o L2)", Rat(-1, 2), 0, true},
        // ---- rank three --------------------------------------------------
        {"n3.anchor.T.1", "anchor_variations(L3, embed_n3(e, 1))[T]", "w3_anchor_T_1(T, e)",
         Rat(1), 2, false},
        {"n3.anchor.W.1", "anchor_variations(L3, embed_n3(e, 1))[W]", "w3_anchor_W_1(T, W, e)",
         Rat(1), 2, false},
        {"n3.anchor.T.2", "anchor_variations(L3, embed_n3(e, 2))[T]", "w3_anchor_T_2(T, W, e)",
         Rat(1), 3, false},
        {"n3.anchor.W.2", "anchor_variations(L3, embed_n3(e, 2))[W]", "w3_anchor_W_2(T, W, e)",
         Rat(1), 3, false},
        {"n3.bracket.11.1", "lie_bracket(L3, X1(e1), X1(e2)) component 1",
         "w3_bracket_11(e1, e2).first_order", Rat(1), 2, false},
        {"n3.bracket.12.1", "lie_bracket(L3, X1(e1), X2(e2)) component 1",
         "w3_bracket_12(e1, e2).first_order", Rat(1), 3, false},
        {"n3.bracket.12.2", "lie_bracket(L3, X1(e1), X2(e2)) component 2",
         "w3_bracket_12(e1, e2).second_order", Rat(1), 2, false},
        {"n3.bracket.22.1", "lie_bracket(L3, X2(e1), X2(e2)) component 1",
         "w3_bracket_22(T, e1, e2).first_order", Rat(1), 4, false},
        {"n3.bracket.22.2", "lie_bracket(L3, X2(e1), X2(e2)) component 2",
         "w3_bracket_22(T, e1, e2).second_order", Rat(1), 3, false},
        {"n3.central.11", "central_term_leading(L3, X1(e1), X1(e2))", "w3_central_lead_11(e1, e2)",
         Rat(-6), 3, true},
        {"n3.central.12", "central_term_leading(L3, X1(e1), X2(e2))", "w3_central_lead_12(e1, e2)",
         Rat(-8), 4, true},
        {"n3.central.22", "central_term_leading(L3, X2(e1), X2(e2))", "w3_central_lead_22(e1, e2)",
         Rat(-10), 5, true},
        {"n3.cocycle.1", "oper_cocycle(L3, embed_n3(e, 1))", "int e * dzbar T", Rat(-1), 2, true},
        {"n3.cocycle.2", "oper_cocycle(L3, embed_n3(e, 2))", "int e * dzbar W", Rat(-1), 3, true},
        {"n3.homomorphism", "[D_X, D_Y] on T and W",
         "induced_action(L3, lie_bracket(L3, X, Y), .)", Rat(1), 0, false},
        {"n3.pairing.halfbracket", "agd_bracket_density(L3, X, Y)",
         "res(lie_bracket_full(L3, X, Y) o L3)", Rat(-1, 2), 0, true},
        // ---- matrix route ------------------------------------------------
        {"n2.lift.T", "solve_oper_lift(L2, {e}).variations[2]", "vir_anchor_T(T, e)", Rat(-1), 0,
         false},
        {"n3.lift.T.1", "solve_oper_lift(L3, {0, e}).variations[2]", "w3_anchor_T_1(T, e)", Rat(1),
         0, false},
        {"n3.lift.W.1", "solve_oper_lift(L3, {0, e}).variations[3]", "w3_anchor_W_1(T, W, e)",
         Rat(1), 0, false},
        {"n3.lift.T.2", "solve_oper_lift(L3, {e, 0}).variations[2]", "w3_anchor_T_2(T, W, e)",
         Rat(1), 0, false},
        {"n3.lift.W.2", "solve_oper_lift(L3, {e, 0}).variations[3]", "w3_anchor_W_2(T, W, e)",
         Rat(1), 0, false},
        {"n3.matrix.bracket.11.1", "matrix_bracket_oracle(L3, {0,e1}, {0,e2}).first_order",
         "w3_bracket_11(e1, e2).first_order", Rat(1), 0, false},
        {"n3.matrix.bracket.12.1", "matrix_bracket_oracle(L3, {0,e1}, {e2,0}).first_order",
         "w3_bracket_12(e1, e2).first_order", Rat(1), 0, false},
        {"n3.matrix.bracket.12.2", "matrix_bracket_oracle(L3, {0,e1}, {e2,0}).second_order",
         "w3_bracket_12(e1, e2).second_order", Rat(1), 0, false},
        {"n3.matrix.bracket.22.1", "matrix_bracket_oracle(L3, {e1,0}, {e2,0}).first_order",
         "w3_bracket_22(T, e1, e2).first_order", Rat(1), 0, false},
        {"n3.matrix.bracket.22.2", "matrix_bracket_oracle(L3, {e1,0}, {e2,0}).second_order",
         "w3_bracket_22(T, e1, e2).second_order", Rat(1), 0, false},
        {"n3.curvature.moment.1", "verify_w3_curvature(L3, mu, rho).F bottom row, middle",
         "moment_n3_1(T, W, mu, rho)", Rat(1), 0, false},
        {"n3.curvature.moment.2", "verify_w3_curvature(L3, mu, rho).F bottom row, left",
         "moment_n3_2(T, W, mu, rho)", Rat(1), 0, false},
        // --- extended phase space: constraint components ---
        {"n2.constraint", "constraint_components(L2, xi)[2]", "moment_n2(T, mu)", Rat(-1), 1,
         false},
        {"n3.constraint.1", "constraint_components(L3, xi)[2]", "moment_n3_1(T, W, mu, rho)",
         Rat(1), 4, true},
        {"n3.constraint.2", "constraint_components(L3, xi)[3]", "moment_n3_2(T, W, mu, rho)",
         Rat(1), 3, true},
        // --- extended phase space: canonical flow of the conjugate fields ---
        {"n2.anchor.mu", "xi_anchor(L2, xi, embed_n2(e))[mu]", "vir_anchor_mu(mu, e)", Rat(-1),
         1, false},
        {"n3.anchor.mu.1", "xi_anchor(L3, xi, embed_n3(e, 1))[mu]",
         "w3_anchor_mu_1(mu, rho, e)", Rat(1), 2, true},
        {"n3.anchor.rho.1", "xi_anchor(L3, xi, embed_n3(e, 1))[rho]", "w3_anchor_rho_1(rho, e)",
         Rat(1), 2, false},
        {"n3.anchor.mu.2", "xi_anchor(L3, xi, embed_n3(e, 2))[mu]",
         "w3_anchor_mu_2(T, mu, rho, e)", Rat(1), 3, false},
        {"n3.anchor.rho.2", "xi_anchor(L3, xi, embed_n3(e, 2))[rho]",
         "w3_anchor_rho_2(mu, rho, e)", Rat(1), 3, true},
        // --- extended phase space: deformed dbar operator, z-part slots ---
        {"n2.dbarop.1", "dbar_deformation(L2, xi).Astar.coeff(1)", "dbar_op_n2 z-part, slot 1",
         Rat(1), 1, false},
        {"n2.dbarop.0", "dbar_deformation(L2, xi).Astar.coeff(0)", "dbar_op_n2 z-part, slot 0",
         Rat(1), 1, false},
        {"n3.dbarop.2", "dbar_deformation(L3, xi).Astar.coeff(2)", "w3_dbar_op z-part, slot 2",
         Rat(1), 3, false},
        {"n3.dbarop.1", "dbar_deformation(L3, xi).Astar.coeff(1)", "w3_dbar_op z-part, slot 1",
         Rat(1), 4, false},
        {"n3.dbarop.0", "dbar_deformation(L3, xi).Astar.coeff(0)", "w3_dbar_op z-part, slot 0",
         Rat(1), 3, false},
    };
    return table;
}

const ConformanceRow& conformance_row(const std::string& id) {
    for (const auto& row : conformance_table())
        if (row.id == id) return row;
    throw std::out_of_range("conformance_row: unknown id '" + id + "'");
}

}  // namespace agd
