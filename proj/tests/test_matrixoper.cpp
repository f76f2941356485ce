// SPDX-License-Identifier: MIT
//
// Matrix realization of the oper phase space: the companion form, the
// covariant-constancy lift and its generated coefficient variations, the
// bracket oracle agreeing with the symbol-calculus bracket, gauge variations
// of connection pairs, and the flatness collapse onto the moment densities.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "agd/conformance.hpp"
#include "agd/matrixoper.hpp"
#include "agd/reference.hpp"
#include "agd/sections.hpp"

using namespace agd;

namespace {

DiffPoly fjet(const char* name, int weight = -1) {
    return DiffPoly::jet(FieldTable::instance().declare(name, Parity::even, 0, Rat(weight)));
}

// kappa-weighted z-derivative of every entry.
MatrixPoly kdz(const MatrixPoly& m) {
    MatrixPoly out(m.size());
    for (int i = 0; i < m.size(); ++i)
        for (int j = 0; j < m.size(); ++j) out.at(i, j) = d_z(m.at(i, j)).mul_kappa(1);
    return out;
}

// First-order change of the curvature along a variation of the pair.
MatrixPoly curvature_variation(const MatrixPoly& A, const MatrixPoly& Abar, const MatrixPoly& dA,
                               const MatrixPoly& dAbar) {
    return mat_d_zbar(dA) - kdz(dAbar) + mat_commutator(dAbar, A) + mat_commutator(Abar, dA);
}

MatrixPoly generic_matrix(const char* prefix, int n) {
    MatrixPoly m(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            std::string name = std::string(prefix) + std::to_string(i) + std::to_string(j);
            m.at(i, j) = fjet(name.c_str());
        }
    return m;
}

}  // namespace

TEST_CASE("matrix arithmetic keeps trace and commutators consistent") {
    MatrixPoly a = generic_matrix("ma", 2);
    MatrixPoly b = generic_matrix("mb", 2);
    CHECK(mat_commutator(a, b).trace().is_zero());
    CHECK((a + b - b - a).is_zero());
    CHECK(a == a - (a - a));
    CHECK(((a * b) * a - a * (b * a)).is_zero());
    CHECK(MatrixPoly::identity(3).trace().str() == "3");
    CHECK_FALSE(a.is_traceless());
    CHECK((a - a).is_zero());
}

TEST_CASE("the companion form realizes the oper coefficients") {
    Oper L2(2, OperType::sl, SignConvention::minus);
    MatrixPoly A2 = oper_matrix(L2);
    CHECK(A2.at(0, 0).is_zero());
    CHECK(A2.at(0, 1).str() == "1");
    CHECK((A2.at(1, 0) - DiffPoly::jet(L2.w_field(2))).is_zero());
    CHECK(A2.at(1, 1).is_zero());

    Oper L3(3, OperType::sl, SignConvention::minus);
    MatrixPoly A3 = oper_matrix(L3);
    CHECK(A3.at(0, 1).str() == "1");
    CHECK(A3.at(1, 2).str() == "1");
    CHECK((A3.at(2, 0) - DiffPoly::jet(L3.w_field(3))).is_zero());
    CHECK((A3.at(2, 1) - DiffPoly::jet(L3.w_field(2))).is_zero());
    CHECK(A3.at(2, 2).is_zero());
    CHECK(A3.trace().is_zero());

    // Vanishing coefficients leave the nilpotent single-block shape.
    std::map<JetKey, DiffPoly> kill;
    kill[JetKey{L3.w_field(2), 0, 0}] = DiffPoly();
    kill[JetKey{L3.w_field(3), 0, 0}] = DiffPoly();
    MatrixPoly Jn = mat_substitute(A3, kill);
    CHECK_FALSE((Jn * Jn).is_zero());
    CHECK((Jn * Jn * Jn).is_zero());
}

TEST_CASE("the rank-three lift reproduces the closed-form traceless matrix") {
    Oper L(3, OperType::sl, SignConvention::minus);
    const DiffPoly T = DiffPoly::jet(L.w_field(2));
    const DiffPoly W = DiffPoly::jet(L.w_field(3));
    const DiffPoly e1 = fjet("le1", -1);
    const DiffPoly e2 = fjet("le2", -2);
    auto Th = [&](const DiffPoly& p) { return d_z_pow(p, 2).mul_kappa(2) - T * p; };

    OperLift lift = solve_oper_lift(L, {e2, e1});
    const MatrixPoly& X = lift.X;
    CHECK(X.is_traceless());

    CHECK((X.at(0, 0) - (Th(e2).scaled(Rat(2, 3)) - d_z(e1).mul_kappa(1))).is_zero());
    CHECK((X.at(0, 1) - (e1 - d_z(e2).mul_kappa(1))).is_zero());
    CHECK((X.at(0, 2) - e2).is_zero());
    CHECK((X.at(1, 0) - (d_z(Th(e2)).mul_kappa(1).scaled(Rat(2, 3)) -
                         d_z_pow(e1, 2).mul_kappa(2) + W * e2))
              .is_zero());
    CHECK((X.at(1, 1) - Th(e2).scaled(Rat(-1, 3))).is_zero());
    CHECK((X.at(1, 2) - e1).is_zero());
    CHECK((X.at(2, 0) - (d_z_pow(Th(e2), 2).mul_kappa(2).scaled(Rat(2, 3)) -
                         d_z_pow(e1, 3).mul_kappa(3) + d_z(W * e2).mul_kappa(1) + W * e1))
              .is_zero());
    CHECK((X.at(2, 1) - (d_z(Th(e2)).mul_kappa(1).scaled(Rat(1, 3)) -
                         d_z_pow(e1, 2).mul_kappa(2) + W * e2 + T * e1))
              .is_zero());
    CHECK((X.at(2, 2) - (Th(e2).scaled(Rat(-1, 3)) + d_z(e1).mul_kappa(1))).is_zero());

    // The residual is supported on the bottom row minus its corner.
    MatrixPoly E = lift_equation_residual(L, X);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 3; ++j) CHECK(E.at(i, j).is_zero());
    CHECK(E.at(2, 2).is_zero());
    CHECK((E.at(2, 1) - lift.variations.at(2)).is_zero());
    CHECK((E.at(2, 0) - lift.variations.at(3)).is_zero());

    // A vanishing prescription lifts to the zero matrix.
    OperLift zl = solve_oper_lift(L, {DiffPoly(), DiffPoly()});
    CHECK(zl.X.is_zero());
    CHECK(zl.variations.at(2).is_zero());
    CHECK(zl.variations.at(3).is_zero());

    CHECK_THROWS_AS((void)solve_oper_lift(L, {e1}), std::invalid_argument);
}

TEST_CASE("lift-generated coefficient variations match the reference algebra") {
    Oper L(3, OperType::sl, SignConvention::minus);
    const DiffPoly T = DiffPoly::jet(L.w_field(2));
    const DiffPoly W = DiffPoly::jet(L.w_field(3));
    const DiffPoly e = fjet("lv", -1);

    auto check_row = [](const std::string& id, const DiffPoly& raw, const DiffPoly& ref) {
        const ConformanceRow& row = conformance_row(id);
        CHECK_MESSAGE((raw - ref.scaled(row.c).mul_kappa(row.m)).is_zero(), "row ", id);
    };

    OperLift l1 = solve_oper_lift(L, {DiffPoly(), e});
    OperLift l2 = solve_oper_lift(L, {e, DiffPoly()});
    check_row("n3.lift.T.1", l1.variations.at(2), ref::w3_anchor_T_1(T, e));
    check_row("n3.lift.W.1", l1.variations.at(3), ref::w3_anchor_W_1(T, W, e));
    check_row("n3.lift.T.2", l2.variations.at(2), ref::w3_anchor_T_2(T, W, e));
    check_row("n3.lift.W.2", l2.variations.at(3), ref::w3_anchor_W_2(T, W, e));

    Oper L2(2, OperType::sl, SignConvention::minus);
    const DiffPoly T2 = DiffPoly::jet(L2.w_field(2));
    OperLift l = solve_oper_lift(L2, {e});
    check_row("n2.lift.T", l.variations.at(2), ref::vir_anchor_T(T2, e));
}

TEST_CASE("matrix and symbol routes compute the same section bracket") {
    Oper L(3, OperType::sl, SignConvention::minus);
    const DiffPoly T = DiffPoly::jet(L.w_field(2));
    const DiffPoly a1 = fjet("ba1", -1), b1 = fjet("bb1", -1);
    const DiffPoly a2 = fjet("ba2", -2), b2 = fjet("bb2", -2);

    struct Case {
        const char* row1;
        const char* row2;
        const char* mrow1;
        const char* mrow2;
        std::vector<DiffPoly> c1, c2;
        ref::SectionPairN3 want;
        PsiSymbol s1, s2;
    };
    std::vector<Case> cases;
    cases.push_back({"n3.bracket.11.1", nullptr, "n3.matrix.bracket.11.1", nullptr,
                     {DiffPoly(), a1},
                     {DiffPoly(), b1},
                     ref::w3_bracket_11(a1, b1),
                     embed_n3(L, a1, 1),
                     embed_n3(L, b1, 1)});
    cases.push_back({"n3.bracket.12.1", "n3.bracket.12.2", "n3.matrix.bracket.12.1",
                     "n3.matrix.bracket.12.2",
                     {DiffPoly(), a1},
                     {b2, DiffPoly()},
                     ref::w3_bracket_12(a1, b2),
                     embed_n3(L, a1, 1),
                     embed_n3(L, b2, 2)});
    cases.push_back({"n3.bracket.22.1", "n3.bracket.22.2", "n3.matrix.bracket.22.1",
                     "n3.matrix.bracket.22.2",
                     {a2, DiffPoly()},
                     {b2, DiffPoly()},
                     ref::w3_bracket_22(T, a2, b2),
                     embed_n3(L, a2, 2),
                     embed_n3(L, b2, 2)});

    for (const auto& c : cases) {
        ref::SectionPairN3 got = matrix_bracket_oracle(L, c.c1, c.c2);

        // Matrix route against the closed-form bracket (exact, no rescaling).
        const ConformanceRow& m1 = conformance_row(c.mrow1);
        CHECK((got.first_order - c.want.first_order.scaled(m1.c).mul_kappa(m1.m)).is_zero());
        if (c.mrow2 != nullptr) {
            const ConformanceRow& m2 = conformance_row(c.mrow2);
            CHECK((got.second_order - c.want.second_order.scaled(m2.c).mul_kappa(m2.m)).is_zero());
        } else {
            CHECK(got.second_order.is_zero());
        }

        // Symbol route: the bracket components relate to the matrix ones by
        // the recorded kappa weights alone.
        PsiSymbol br = lie_bracket(L, c.s1, c.s2);
        auto [comp1, comp2] = section_components_n3(br);
        const ConformanceRow& s1 = conformance_row(c.row1);
        CHECK((comp1 - got.first_order.scaled(s1.c / m1.c).mul_kappa(s1.m - m1.m)).is_zero());
        if (c.row2 != nullptr) {
            const ConformanceRow& s2 = conformance_row(c.row2);
            const ConformanceRow& m2 = conformance_row(c.mrow2);
            CHECK((comp2 - got.second_order.scaled(s2.c / m2.c).mul_kappa(s2.m - m2.m)).is_zero());
        } else {
            CHECK(comp2.is_zero());
        }
    }
}

TEST_CASE("gauge variations close and leave the curvature covariant") {
    const int n = 2;
    MatrixPoly A = generic_matrix("ga", n);
    MatrixPoly Ab = generic_matrix("gb", n);
    MatrixPoly ep1 = generic_matrix("ge", n);
    MatrixPoly ep2 = generic_matrix("gf", n);

    // Identity parameter acts trivially; flat background moves by the pure
    // derivative term.
    auto [dI, dIb] = gauge_variation(A, Ab, MatrixPoly::identity(n));
    CHECK(dI.is_zero());
    CHECK(dIb.is_zero());
    MatrixPoly zero(n);
    auto [dz0, dzb0] = gauge_variation(zero, zero, ep1);
    CHECK((dz0 - kdz(ep1)).is_zero());
    CHECK((dzb0 - mat_d_zbar(ep1)).is_zero());

    // Commutator of two variations is the variation along the parameter
    // commutator.
    auto [d1A, d1Ab] = gauge_variation(A, Ab, ep1);
    auto [d2A, d2Ab] = gauge_variation(A, Ab, ep2);
    MatrixPoly lhsA = mat_commutator(d1A, ep2) - mat_commutator(d2A, ep1);
    MatrixPoly lhsAb = mat_commutator(d1Ab, ep2) - mat_commutator(d2Ab, ep1);
    auto [dcA, dcAb] = gauge_variation(A, Ab, mat_commutator(ep1, ep2));
    CHECK((lhsA - dcA).is_zero());
    CHECK((lhsAb - dcAb).is_zero());

    // First-order transport of the curvature is the commutator with the
    // parameter.
    MatrixPoly F = curvature(A, Ab);
    MatrixPoly dF = curvature_variation(A, Ab, d1A, d1Ab);
    CHECK((dF - mat_commutator(F, ep1)).is_zero());

    // Degenerate backgrounds.
    CHECK(curvature(zero, zero).is_zero());
    MatrixPoly C1 = MatrixPoly::identity(n).scaled(Rat(3));
    CHECK(curvature(C1, C1).is_zero());
}

TEST_CASE("the companion flatness collapses onto the moment densities") {
    Oper L(3, OperType::sl, SignConvention::minus);
    const DiffPoly T = DiffPoly::jet(L.w_field(2));
    const DiffPoly W = DiffPoly::jet(L.w_field(3));
    const DiffPoly mu = fjet("cmu", -1);
    const DiffPoly rho = fjet("crho", -2);

    // The conjugate gauge matrix in closed form.
    MatrixPoly Ab = abar_matrix(L, mu, rho);
    auto Th = [&](const DiffPoly& p) { return d_z_pow(p, 2).mul_kappa(2) - T * p; };
    CHECK((Ab.at(0, 0) - (Th(rho).scaled(Rat(-2, 3)) + d_z(mu).mul_kappa(1))).is_zero());
    CHECK((Ab.at(0, 1) - (d_z(rho).mul_kappa(1) - mu)).is_zero());
    CHECK((Ab.at(0, 2) + rho).is_zero());
    CHECK((Ab.at(1, 2) + mu).is_zero());
    CHECK(Ab.is_traceless());

    // Vanishing conjugate fields give the vanishing matrix; dropping rho
    // leaves the upper-left block acting as the rank-two pattern.
    CHECK(abar_matrix(L, DiffPoly(), DiffPoly()).is_zero());
    MatrixPoly Abmu = abar_matrix(L, mu, DiffPoly());
    CHECK((Abmu.at(0, 0) - d_z(mu).mul_kappa(1)).is_zero());
    CHECK((Abmu.at(0, 1) + mu).is_zero());
    CHECK(Abmu.at(0, 2).is_zero());

    CurvatureReport rep = verify_w3_curvature(L, mu, rho);
    CHECK(rep.offband_zero);
    CHECK(rep.moment_1_match);
    CHECK(rep.moment_2_match);
    CHECK(rep.onshell_zero);
    CHECK(rep.ok());

    const ConformanceRow& r1 = conformance_row("n3.curvature.moment.1");
    const ConformanceRow& r2 = conformance_row("n3.curvature.moment.2");
    CHECK((rep.F.at(2, 1) - ref::moment_n3_1(T, W, mu, rho).scaled(r1.c).mul_kappa(r1.m))
              .is_zero());
    CHECK((rep.F.at(2, 0) - ref::moment_n3_2(T, W, mu, rho).scaled(r2.c).mul_kappa(r2.m))
              .is_zero());

    // Negative control: the covariant-orientation curvature of the same pair
    // does not collapse to the bottom row.
    MatrixPoly Fcov = curvature(oper_matrix(L), Ab);
    bool off_all_zero = true;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            if (i == 2 && j <= 1) continue;
            if (!Fcov.at(i, j).is_zero()) off_all_zero = false;
        }
    CHECK_FALSE(off_all_zero);
}
