// SPDX-License-Identifier: MIT
//
// Formal pseudo-differential symbols.
//
// A PsiSymbol is a finite Laurent expansion sum_d c_d(z, zbar) * lam^d with
// DiffPoly coefficients, where lam stands for the z-derivative.  Composition
// follows the symbol calculus
//
//     (X o Y)(lam) = sum_{k >= 0} 1/k! * (d/dlam)^k X * d_z^k Y ,
//
// which is an exact finite sum in every output degree.  Symbols whose
// expansion extends infinitely far down (any composition with a negative-order
// left factor) carry a *floor*: the lowest degree whose coefficient is
// trusted.  Floors propagate through arithmetic; comparing or reading
// coefficients below the floor is refused rather than silently wrong.

#pragma once

#include "agd/variational.hpp"

#include <map>
#include <optional>
#include <utility>

namespace agd {

class PsiSymbol {
public:
    PsiSymbol() = default;

    static PsiSymbol term(DiffPoly c, int degree);
    static PsiSymbol lambda_power(int degree) { return term(DiffPoly::constant(Rat(1)), degree); }
    static PsiSymbol from_function(DiffPoly c) { return term(std::move(c), 0); }

    bool is_zero() const { return coeffs_.empty(); }
    const std::map<int, DiffPoly>& coeffs() const { return coeffs_; }
    std::optional<int> floor() const { return floor_; }
    bool exact() const { return !floor_.has_value(); }

    // Highest stored degree (nullopt for an identically-zero expansion).
    std::optional<int> top_degree() const;

    // Coefficient of lam^d; throws below the floor.
    DiffPoly coeff(int d) const;

    void set_term(int degree, DiffPoly c);

    PsiSymbol operator-() const;
    PsiSymbol& operator+=(const PsiSymbol& o);
    PsiSymbol& operator-=(const PsiSymbol& o);
    friend PsiSymbol operator+(PsiSymbol a, const PsiSymbol& b) { return a += b; }
    friend PsiSymbol operator-(PsiSymbol a, const PsiSymbol& b) { return a -= b; }

    PsiSymbol scaled(const Rat& c) const;
    // Left multiplication by a function of (z, zbar): equals coefficientwise
    // multiplication (the function has no lam-dependence).
    PsiSymbol left_mul(const DiffPoly& f) const;
    PsiSymbol mul_kappa(int power) const;
    PsiSymbol div_kappa(int power) const;

    // Right composition with lam^s.  Because lam^s has constant coefficient
    // this is exactly the Laurent degree shift: X o lam^s = X * lam^s.
    PsiSymbol shifted(int s) const;

    // Drops all degrees below new_floor and records the floor.
    PsiSymbol truncated(int new_floor) const;

    // Projections onto degrees >= 0 and < 0.  plus_part() requires the floor
    // (if any) to be <= 0; minus_part() keeps the floor.
    PsiSymbol plus_part() const;
    PsiSymbol minus_part() const;

    std::string str() const;  // deterministic, e.g. "(k^2) lam^2 + (-T[0,0]) lam^0"

private:
    std::map<int, DiffPoly> coeffs_;   // degree -> nonzero coefficient
    std::optional<int> floor_;         // lowest trusted degree

    void absorb_floor(const std::optional<int>& other);
    void prune();
};

// Symbol composition.  `floor` is the requested truncation floor for the
// result; it is mandatory whenever the expansion is infinite (left factor has
// negative degrees).  Input floors propagate: degrees of the result below
// floor(X) + top(Y) or floor(Y) + top(X) are untrusted.
PsiSymbol compose(const PsiSymbol& X, const PsiSymbol& Y,
                  std::optional<int> floor = std::nullopt);

// Graded commutator of symbols: X o Y - (-1)^{|X||Y|} Y o X.  Parities are
// taken from the coefficients (mixed-parity symbols are rejected).
PsiSymbol commutator(const PsiSymbol& X, const PsiSymbol& Y,
                     std::optional<int> floor = std::nullopt);

// Coefficient of lam^{-1}; requires the floor to reach -1.
DiffPoly res(const PsiSymbol& X);

// The pairing <A, B> = integral of res(A o B).
Functional pair_functional(const PsiSymbol& A, const PsiSymbol& B);

// Equality on the common trusted region (degrees below the weaker floor are
// ignored); exact symbols compare everywhere.
bool equal_trusted(const PsiSymbol& A, const PsiSymbol& B);

// Division with remainder by a monic differential-operator symbol L of order N
// with leading coefficient kappa^N: D = Q o L + R with deg R < N.  D must be
// exact with min degree >= 0; throws when a quotient coefficient fails exact
// division by kappa^N.
std::pair<PsiSymbol, PsiSymbol> reduce_mod_oper(const PsiSymbol& D, const PsiSymbol& L, int N);

}  // namespace agd
