// SPDX-License-Identifier: MIT
//
// Matrix realization of the oper phase space: square matrices of differential
// polynomials, the companion form of an oper, the lift that solves the
// covariant-constancy equation for a traceless matrix with prescribed last
// column, the conjugate gauge matrix, and the curvature whose only nonzero
// entries are the moment (constraint) densities.  The matrix route never
// dresses entries with extra kappa powers, so it serves as an independent
// oracle for the symbol-calculus route.

#pragma once

#include "agd/oper.hpp"
#include "agd/reference.hpp"
#include "agd/variational.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace agd {

// Dense square matrix with DiffPoly entries.  Indices are 0-based; display
// conventions like "entry (3,1)" translate to at(2,0).
class MatrixPoly {
  public:
    MatrixPoly() = default;
    explicit MatrixPoly(int n);

    static MatrixPoly identity(int n);

    int size() const { return n_; }
    DiffPoly& at(int i, int j);
    const DiffPoly& at(int i, int j) const;

    DiffPoly trace() const;
    bool is_zero() const;
    bool is_traceless() const;

    MatrixPoly& operator+=(const MatrixPoly& o);
    MatrixPoly& operator-=(const MatrixPoly& o);
    friend MatrixPoly operator+(MatrixPoly a, const MatrixPoly& b) { return a += b; }
    friend MatrixPoly operator-(MatrixPoly a, const MatrixPoly& b) { return a -= b; }
    friend MatrixPoly operator*(const MatrixPoly& a, const MatrixPoly& b);
    MatrixPoly scaled(const Rat& c) const;

    bool operator==(const MatrixPoly& o) const;

    std::string str() const;

  private:
    int n_ = 0;
    std::vector<DiffPoly> e_;
};

// Entrywise derivatives and the matrix commutator.
MatrixPoly mat_d_z(const MatrixPoly& m);
MatrixPoly mat_d_zbar(const MatrixPoly& m);
MatrixPoly mat_commutator(const MatrixPoly& a, const MatrixPoly& b);

// Entrywise substitution (prolonged over both derivative directions).
MatrixPoly mat_substitute(const MatrixPoly& m, const std::map<JetKey, DiffPoly>& rules);

// Companion matrix of a trace-free oper in the minus sign convention:
// superdiagonal ones, bottom row (W_N, ..., W_2, 0).
MatrixPoly oper_matrix(const Oper& L);

// Left-hand side of the lift equation: kappa d_z X - [A_oper, X].
MatrixPoly lift_equation_residual(const Oper& L, const MatrixPoly& X);

// Traceless solution X of the lift equation with prescribed last column
// (rows 0..N-2; the corner is fixed by tracelessness), supported on the
// companion recursion: every row above the bottom of the residual vanishes
// identically, and the bottom row carries the generated coefficient
// variations, returned as j -> delta W_j.  The residual's corner entry (the
// would-be trace variation) vanishes identically and is asserted.
struct OperLift {
    MatrixPoly X;
    std::map<int, DiffPoly> variations;
};
OperLift solve_oper_lift(const Oper& L, const std::vector<DiffPoly>& last_column);

// Section-bracket components computed through the matrix route: the
// commutator of two lifts, oriented so the induced coefficient action
// represents the bracket, read off its last column (rows 0 and 1 give the
// second-type and first-type components).  Rank three only.
ref::SectionPairN3 matrix_bracket_oracle(const Oper& L, const std::vector<DiffPoly>& col1,
                                         const std::vector<DiffPoly>& col2);

// Curvature of a connection pair: d_zbar A - kappa d_z Abar + [Abar, A].
MatrixPoly curvature(const MatrixPoly& A, const MatrixPoly& Abar);

// Infinitesimal gauge variations of the pair:
//     dA = kappa d_z eps + [A, eps] ,   dAbar = d_zbar eps + [Abar, eps] .
std::pair<MatrixPoly, MatrixPoly> gauge_variation(const MatrixPoly& A, const MatrixPoly& Abar,
                                                  const MatrixPoly& eps);

// The conjugate gauge matrix: minus the oper lift evaluated on the conjugate
// fields (last column (-rho, -mu) at rank three).
MatrixPoly abar_matrix(const Oper& L, const DiffPoly& mu, const DiffPoly& rho);

// Full flatness cross-check at rank three: the companion connection pairs
// with the reflected orientation, for which the combination
// dzbar A + kappa dz Abar + [Abar, A] vanishes away from the bottom row, its
// two surviving entries are exactly the moment densities, and eliminating the
// zbar jets by the constraints kills the whole matrix.
struct CurvatureReport {
    MatrixPoly F;
    bool offband_zero;    // every entry outside (N-1,0), (N-1,1) vanishes
    bool moment_1_match;  // entry (N-1,1) equals the first-type moment density
    bool moment_2_match;  // entry (N-1,0) equals the second-type moment density
    bool onshell_zero;    // the matrix vanishes after constraint substitution
    bool ok() const { return offband_zero && moment_1_match && moment_2_match && onshell_zero; }
};
CurvatureReport verify_w3_curvature(const Oper& L, const DiffPoly& mu, const DiffPoly& rho);

}  // namespace agd
