// SPDX-License-Identifier: MIT

#include "agd/sections.hpp"

#include <stdexcept>

namespace agd {

namespace {

void require_window(const PsiSymbol& X, int N, const char* who) {
    if (!in_section_window(X, N)) {
        throw std::invalid_argument(std::string(who) +
                                    ": argument is not an exact symbol supported in [" +
                                    std::to_string(-(N + 1)) + ", -1]");
    }
}

}  // namespace

bool in_section_window(const PsiSymbol& X, int N) {
    if (!X.exact()) return false;
    for (const auto& [d, c] : X.coeffs()) {
        (void)c;
        if (d < -(N + 1) || d > -1) return false;
    }
    return true;
}

PsiSymbol window_part(const PsiSymbol& X, int N) {
    const int lo = -(N + 1);
    if (X.floor() && *X.floor() > lo) {
        throw std::invalid_argument("window_part: floor " + std::to_string(*X.floor()) +
                                    " does not reach the section window");
    }
    PsiSymbol out;
    for (const auto& [d, c] : X.coeffs()) {
        if (d >= lo && d <= -1) out.set_term(d, c);
    }
    return out;
}

PsiSymbol anchor_symbol(const Oper& L, const PsiSymbol& Y) {
    const int N = L.order();
    require_window(Y, N, "anchor_symbol");
    const PsiSymbol Ls = L.symbol();
    const PsiSymbol LYp = compose(Ls, Y).plus_part();
    const PsiSymbol YLp = compose(Y, Ls, 0).plus_part();
    PsiSymbol dL = compose(LYp, Ls) - compose(Ls, YLp);
    if (dL.top_degree() && *dL.top_degree() >= N) {
        throw std::logic_error("anchor_symbol: variation of order >= oper order");
    }
    return dL;
}

std::map<int, DiffPoly> anchor_variations(const Oper& L, const PsiSymbol& Y) {
    const int N = L.order();
    const PsiSymbol dL = anchor_symbol(L, Y);
    const Rat sign = (L.sign() == SignConvention::minus) ? Rat(-1) : Rat(1);
    std::map<int, DiffPoly> out;
    for (const auto& [d, c] : dL.coeffs()) {
        if (d < 0) throw std::logic_error("anchor_variations: negative-degree variation");
        out[N - d] = c.scaled(sign).div_kappa(d);
    }
    return out;
}

std::map<FieldId, DiffPoly> anchor_assignment(const Oper& L, const PsiSymbol& Y) {
    std::map<FieldId, DiffPoly> out;
    for (const auto& [j, v] : anchor_variations(L, Y)) {
        if (j < L.j_min()) {
            throw std::invalid_argument(
                "anchor_assignment: variation hits W" + std::to_string(j) +
                ", absent on this oper type (apply sl_correct to the section)");
        }
        out[L.w_field(j)] = v;
    }
    return out;
}

DiffPoly induced_action(const Oper& L, const PsiSymbol& Y, const DiffPoly& p) {
    return evolutionary(anchor_assignment(L, Y), Parity::even, p);
}

DiffPoly agd_bracket_density(const Oper& L, const PsiSymbol& X, const PsiSymbol& Y) {
    const int N = L.order();
    require_window(X, N, "agd_bracket_density");
    require_window(Y, N, "agd_bracket_density");
    const PsiSymbol Ls = L.symbol();
    const PsiSymbol LX = compose(Ls, X);
    const PsiSymbol XL = compose(X, Ls, -(N + 1));
    const PsiSymbol LYp = compose(Ls, Y).plus_part();
    const PsiSymbol YLp = compose(Y, Ls, 0).plus_part();
    return res(compose(LX, LYp, -1)) - res(compose(XL, YLp, -1));
}

DiffPoly agd_bracket_density_minus_form(const Oper& L, const PsiSymbol& X, const PsiSymbol& Y) {
    const int N = L.order();
    require_window(X, N, "agd_bracket_density_minus_form");
    require_window(Y, N, "agd_bracket_density_minus_form");
    const PsiSymbol Ls = L.symbol();
    const PsiSymbol LX = compose(Ls, X);
    const PsiSymbol XL = compose(X, Ls, -(N + 1));
    const PsiSymbol LYm = compose(Ls, Y).minus_part();
    const PsiSymbol YLm = compose(Y, Ls, -(N + 1)).minus_part();
    return res(compose(XL, YLm, -1)) - res(compose(LX, LYm, -1));
}

DiffPoly agd_bracket_density_contraction(const Oper& L, const PsiSymbol& X, const PsiSymbol& Y) {
    const int N = L.order();
    require_window(X, N, "agd_bracket_density_contraction");
    return res(compose(X, anchor_symbol(L, Y), -1));
}

PsiSymbol lie_bracket_full(const Oper& L, const PsiSymbol& X, const PsiSymbol& Y) {
    const int N = L.order();
    require_window(X, N, "lie_bracket_full");
    require_window(Y, N, "lie_bracket_full");
    const int f0 = -(N + 1);
    const PsiSymbol Ls = L.symbol();
    const PsiSymbol LY = compose(Ls, Y);
    const PsiSymbol LYp = LY.plus_part();
    const PsiSymbol LYm = LY.minus_part();
    const PsiSymbol YLfull = compose(Y, Ls, f0);
    const PsiSymbol YLp = YLfull.plus_part();
    const PsiSymbol YLm = YLfull.minus_part();
    // Sign convention: oriented so that the induced derivations represent the
    // bracket, [D_X, D_Y] = D_{[X,Y]}.  With this choice the pairing identity
    // reads {l_X, l_Y} = -1/2 <[X,Y] o L>.
    return compose(X, LYm, f0) - compose(YLm, X, f0) + compose(YLp, X, f0) -
           compose(X, LYp, f0);
}

PsiSymbol lie_bracket(const Oper& L, const PsiSymbol& X, const PsiSymbol& Y) {
    PsiSymbol B = window_part(lie_bracket_full(L, X, Y), L.order());
    // On the traceless stratum the window projection lands off the residue
    // slice by a total derivative; restore the slice representative.
    if (L.type() == OperType::sl) B = sl_correct(L, B);
    return B;
}

DiffPoly central_term_leading(const Oper& L, const PsiSymbol& X, const PsiSymbol& Y) {
    return agd_bracket_density(L, X, Y).d_kappa().top_kappa_part();
}

DiffPoly section_residue_primitive(const Oper& L, const PsiSymbol& X) {
    const int N = L.order();
    require_window(X, N, "section_residue_primitive");
    const DiffPoly r = res(commutator(X, L.symbol(), -1));
    return integrate_total_dz(r);
}

bool section_condition(const Oper& L, const PsiSymbol& X) {
    const int N = L.order();
    require_window(X, N, "section_condition");
    return res(commutator(X, L.symbol(), -1)).is_zero();
}

PsiSymbol sl_correct(const Oper& L, const PsiSymbol& X) {
    const int N = L.order();
    const DiffPoly P = section_residue_primitive(L, X);
    if (P.is_zero()) return X;
    const DiffPoly delta = P.scaled(Rat(1, N)).div_kappa(N);
    PsiSymbol out = X;
    DiffPoly slot = delta;
    auto it = X.coeffs().find(-N);
    if (it != X.coeffs().end()) slot = it->second + delta;
    out.set_term(-N, slot);
    if (!section_condition(L, out)) {
        throw std::logic_error("sl_correct: corrected section still fails the residue condition");
    }
    return out;
}

PsiSymbol embed_n2(const Oper& L, const DiffPoly& e) {
    if (L.order() != 2) throw std::invalid_argument("embed_n2: oper order must be 2");
    return sl_correct(L, PsiSymbol::term(e, -1));
}

PsiSymbol embed_n3(const Oper& L, const DiffPoly& e, int type) {
    if (L.order() != 3) throw std::invalid_argument("embed_n3: oper order must be 3");
    PsiSymbol X;
    if (type == 1) {
        X = PsiSymbol::term(e, -2);
    } else if (type == 2) {
        X = PsiSymbol::term(e.mul_kappa(2), -1);
        X.set_term(-2, d_z(e).mul_kappa(2).scaled(Rat(-1)));
    } else {
        throw std::invalid_argument("embed_n3: type must be 1 or 2");
    }
    return sl_correct(L, X);
}

std::pair<DiffPoly, DiffPoly> section_components_n3(const PsiSymbol& X) {
    DiffPoly a1, a2;
    auto it = X.coeffs().find(-1);
    if (it != X.coeffs().end()) a1 = it->second;
    it = X.coeffs().find(-2);
    if (it != X.coeffs().end()) a2 = it->second;
    const DiffPoly beta2 = a1.div_kappa(2);
    const DiffPoly beta1 = a2 + d_z(beta2).mul_kappa(2);
    return {beta1, beta2};
}

PsiSymbol section_variation(const Oper& L, const PsiSymbol& Z, const PsiSymbol& S) {
    PsiSymbol out;
    for (const auto& [d, c] : S.coeffs()) {
        DiffPoly v = induced_action(L, Z, c);
        if (!v.is_zero()) out.set_term(d, v);
    }
    if (L.type() == OperType::sl) out = sl_correct(L, out);
    return out;
}

PsiSymbol jacobi_cyclic_sum(const Oper& L, const PsiSymbol& X, const PsiSymbol& Y,
                            const PsiSymbol& Z) {
    const PsiSymbol* xs[3] = {&X, &Y, &Z};
    PsiSymbol J;
    for (int i = 0; i < 3; ++i) {
        const PsiSymbol& x = *xs[i];
        const PsiSymbol& y = *xs[(i + 1) % 3];
        const PsiSymbol& z = *xs[(i + 2) % 3];
        const PsiSymbol inner = lie_bracket(L, x, y);
        J += lie_bracket(L, inner, z) - section_variation(L, z, inner);
    }
    return J;
}

namespace {

JacobiTriple classify_triple(const Oper& L, const std::string& label, const PsiSymbol& X,
                             const PsiSymbol& Y, const PsiSymbol& Z) {
    const int N = L.order();
    const PsiSymbol J = jacobi_cyclic_sum(L, X, Y, Z);
    bool comps = true;
    for (const auto& [d, c] : J.coeffs()) {
        if (d > -(N + 1) && !c.is_zero()) comps = false;
    }
    bool trivial = true;
    for (const auto& [j, v] : anchor_variations(L, J)) {
        (void)j;
        if (!v.is_zero()) trivial = false;
    }
    return JacobiTriple{label, comps, trivial};
}

}  // namespace

std::vector<JacobiTriple> jacobi_anomaly_check(const Oper& L) {
    auto& ft = FieldTable::instance();
    const FieldId f1 = ft.declare("jac_e1", Parity::even, 0, Rat(-1));
    const FieldId f2 = ft.declare("jac_e2", Parity::even, 0, Rat(-1));
    const FieldId f3 = ft.declare("jac_e3", Parity::even, 0, Rat(-1));
    const DiffPoly e1 = DiffPoly::jet(f1), e2 = DiffPoly::jet(f2), e3 = DiffPoly::jet(f3);

    std::vector<JacobiTriple> out;
    if (L.order() == 2) {
        out.push_back(classify_triple(L, "111", embed_n2(L, e1), embed_n2(L, e2),
                                      embed_n2(L, e3)));
    } else if (L.order() == 3) {
        out.push_back(classify_triple(L, "111", embed_n3(L, e1, 1), embed_n3(L, e2, 1),
                                      embed_n3(L, e3, 1)));
        out.push_back(classify_triple(L, "222", embed_n3(L, e1, 2), embed_n3(L, e2, 2),
                                      embed_n3(L, e3, 2)));
        out.push_back(classify_triple(L, "221", embed_n3(L, e1, 2), embed_n3(L, e2, 2),
                                      embed_n3(L, e3, 1)));
    } else {
        throw std::invalid_argument("jacobi_anomaly_check: supported at orders 2 and 3");
    }
    return out;
}

PsiSymbol dbar_symbol(const Oper& L) {
    PsiSymbol out;
    const PsiSymbol Ls = L.symbol();
    for (const auto& [d, c] : Ls.coeffs()) {
        DiffPoly v = d_zbar(c);
        if (!v.is_zero()) out.set_term(d, v);
    }
    return out;
}

Functional oper_cocycle(const Oper& L, const PsiSymbol& X) {
    require_window(X, L.order(), "oper_cocycle");
    return Functional(res(compose(X, dbar_symbol(L), -1)).mul_kappa(1));
}

Functional cocycle_defect(const Oper& L, const SectionFunctional& c, const PsiSymbol& e1,
                          const PsiSymbol& e2) {
    const auto A1 = anchor_assignment(L, e1);
    const auto A2 = anchor_assignment(L, e2);
    const DiffPoly d1 = evolutionary(A1, Parity::even, c(e2).density());
    const DiffPoly d2 = evolutionary(A2, Parity::even, c(e1).density());
    const DiffPoly db = c(lie_bracket(L, e1, e2)).density();
    return Functional(d1 - d2 - db);
}

bool cocycle_check(const Oper& L, const SectionFunctional& c, const PsiSymbol& e1,
                   const PsiSymbol& e2) {
    return cocycle_defect(L, c, e1, e2).is_zero();
}

}  // namespace agd
