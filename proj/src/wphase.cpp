#include "agd/wphase.hpp"

#include <string>

#include "agd/fields.hpp"

namespace agd {

namespace {

void require_conjugate(FieldId f) {
    const auto& ft = FieldTable::instance();
    if (ft.parity(f) != Parity::even || ft.ghost(f) != 0)
        throw std::invalid_argument("make_xi: conjugate field '" + ft.name(f) +
                                    "' must be even with ghost number zero");
}

// Applies `rules` (with prolongation) to every coefficient; true iff the
// symbol vanishes identically on the solved surface.
bool vanishes_on_shell(const PsiSymbol& X, const std::map<JetKey, DiffPoly>& rules) {
    for (const auto& [deg, c] : X.coeffs()) {
        (void)deg;
        if (!substitute(c, rules, /*prolong=*/true).is_zero()) return false;
    }
    return true;
}

}  // namespace

XiField make_xi(const Oper& L, const std::vector<FieldId>& conjugates) {
    const int N = L.order();
    if (L.type() != OperType::sl)
        throw std::invalid_argument("make_xi: dual element is defined for sl opers");
    if (N != 2 && N != 3)
        throw std::invalid_argument("make_xi: oper order must be 2 or 3");
    if (conjugates.size() != static_cast<std::size_t>(N - 1))
        throw std::invalid_argument("make_xi: need one conjugate field per generator");
    for (FieldId f : conjugates) require_conjugate(f);

    PsiSymbol X;
    if (N == 2) {
        X.set_term(-1, DiffPoly::jet(conjugates[0]));
    } else {
        const DiffPoly mu = DiffPoly::jet(conjugates[0]);
        const DiffPoly rho = DiffPoly::jet(conjugates[1]);
        X.set_term(-1, rho.mul_kappa(2));
        X.set_term(-2, mu.mul_kappa(1) - d_z(rho).mul_kappa(2));
    }
    X.set_term(-(N + 1), DiffPoly::constant(Rat(1)));
    return XiField{sl_correct(L, X), conjugates};
}

PsiSymbol constraint_symbol(const Oper& L, const XiField& xi) {
    const int N = L.order();
    const PsiSymbol F = dbar_symbol(L).mul_kappa(1) + anchor_symbol(L, xi.sym);
    const auto top = F.top_degree();
    if (top && *top > N - 1)
        throw std::logic_error("constraint_symbol: degree exceeds the order bound");
    if (!F.coeff(N - 1).is_zero())
        throw std::logic_error("constraint_symbol: trace component survived");
    return F;
}

std::map<int, DiffPoly> constraint_components(const Oper& L, const XiField& xi) {
    const PsiSymbol F = constraint_symbol(L, xi);
    std::map<int, DiffPoly> out;
    for (int j = L.j_min(); j <= L.order(); ++j) out[j] = F.coeff(L.order() - j);
    return out;
}

std::map<JetKey, DiffPoly> on_shell_rules(const Oper& L, const XiField& xi) {
    const int N = L.order();
    const PsiSymbol F = constraint_symbol(L, xi);
    std::map<JetKey, DiffPoly> rules;
    for (int j = L.j_min(); j <= N; ++j) {
        const FieldId wj = L.w_field(j);
        rules[JetKey{wj, 0, 1}] =
            DiffPoly::jet(wj, 0, 1) + F.coeff(N - j).div_kappa(N - j + 1);
    }
    return rules;
}

Functional hamiltonian(const Oper& L, const XiField& xi, const PsiSymbol& Y) {
    const int N = L.order();
    const PsiSymbol F = constraint_symbol(L, xi);
    const DiffPoly raw = res(compose(Y, F, -1));
    // Pairing identity between the constraint form and the anchor form of the
    // Hamiltonian; the inhomogeneous term is the dbar cocycle of the section.
    const DiffPoly anchor_form = res(compose(xi.sym, anchor_symbol(L, Y), -1));
    const DiffPoly cocycle_density = oper_cocycle(L, Y).density();
    if (!Functional(raw + anchor_form - cocycle_density).is_zero())
        throw std::logic_error("hamiltonian: constraint and anchor forms disagree");
    return Functional(raw.div_kappa(2 * (N - 2)));
}

std::map<FieldId, DiffPoly> xi_anchor(const Oper& L, const XiField& xi, const PsiSymbol& Y) {
    const DiffPoly h = hamiltonian(L, xi, Y).density();
    std::map<FieldId, DiffPoly> out;
    for (std::size_t a = 0; a < xi.conjugates.size(); ++a) {
        const FieldId generator = L.w_field(L.j_min() + static_cast<int>(a));
        out[xi.conjugates[a]] = -euler(h, generator);
    }
    return out;
}

std::vector<std::pair<FieldId, FieldId>> canonical_pairs(const Oper& L, const XiField& xi) {
    std::vector<std::pair<FieldId, FieldId>> pairs;
    for (std::size_t a = 0; a < xi.conjugates.size(); ++a)
        pairs.emplace_back(L.w_field(L.j_min() + static_cast<int>(a)), xi.conjugates[a]);
    return pairs;
}

Functional canonical_bracket(const std::vector<std::pair<FieldId, FieldId>>& pairs,
                             const Functional& f, const Functional& g) {
    DiffPoly out;
    for (const auto& [q, p] : pairs) {
        out = out + euler(f.density(), p) * euler(g.density(), q) -
              euler(f.density(), q) * euler(g.density(), p);
    }
    return Functional(out);
}

DbarDeformation dbar_deformation(const Oper& L, const XiField& xi) {
    const PsiSymbol Ls = L.symbol();
    DbarDeformation d;
    d.A = compose(Ls, xi.sym).plus_part().scaled(Rat(-1));
    d.Astar = compose(xi.sym, Ls, 0).plus_part();
    return d;
}

CompatibilityReport compatibility_check(const Oper& L, const XiField& xi) {
    const int N = L.order();
    const PsiSymbol Ls = L.symbol();
    const DbarDeformation d = dbar_deformation(L, xi);
    const PsiSymbol D = dbar_symbol(L).mul_kappa(1) - compose(Ls, d.Astar);
    const auto [Q, R] = reduce_mod_oper(D, Ls, N);
    const auto rules = on_shell_rules(L, xi);
    CompatibilityReport report;
    report.quotient = Q;
    report.remainder = R;
    report.remainder_on_shell_zero = vanishes_on_shell(R, rules);
    report.quotient_matches_deformation_on_shell = vanishes_on_shell(Q - d.A, rules);
    return report;
}

}  // namespace agd
