// SPDX-License-Identifier: MIT
//
// Variational calculus on graded differential polynomials: total derivatives,
// graded partial derivatives, Euler operators, exact integration in the
// z-direction, evolutionary derivations, and jet substitution.  Functionals
// are densities modulo total derivatives with equality decided exactly by
// Euler operators.

#pragma once

#include "agd/diffpoly.hpp"

#include <map>
#include <string>

namespace agd {

// Total derivatives; they commute and are even derivations.
DiffPoly d_z(const DiffPoly& p);
DiffPoly d_zbar(const DiffPoly& p);
DiffPoly d_z_pow(const DiffPoly& p, int m);
DiffPoly d_zbar_pow(const DiffPoly& p, int n);

// Left/right graded partial derivative with respect to one jet coordinate.
DiffPoly partial(const DiffPoly& p, const JetKey& v);
DiffPoly partial_right(const DiffPoly& p, const JetKey& v);

// Full Euler operator of field f:  sum over jets (-d_z)^m (-d_zbar)^n d/df[m,n].
DiffPoly euler(const DiffPoly& p, FieldId f);

// z-direction Euler operator of the family f[.,n] at fixed dzbar order n:
// sum over m of (-d_z)^m d/df[m,n].  These detect d_z-exactness.
DiffPoly euler_z_family(const DiffPoly& p, FieldId f, int dzbar);

// True iff p = d_z(q) for some differential polynomial q.
bool is_total_dz(const DiffPoly& p);

// Returns q with d_z(q) = p and zero field-free part; throws std::domain_error
// if p is not a total z-derivative.  Exact graded homotopy construction.
DiffPoly integrate_total_dz(const DiffPoly& p);

// Evolutionary derivation: D(f[m,n]) = d_z^m d_zbar^n (assignment[f]), extended
// as a graded derivation of the declared parity.  Fields absent from the
// assignment are annihilated.  Each assignment's parity must equal
// parity(field) + derivation parity (zero assignments are always accepted).
DiffPoly evolutionary(const std::map<FieldId, DiffPoly>& assignment, Parity derivation_parity,
                      const DiffPoly& p);

// Substitutes rules head -> replacement.  With prolong = true a rule for
// f[m0,n0] also rewrites f[m,n0] for every m > m0 via d_z^(m-m0) of the
// replacement.  Replacement parities must match their heads.  Rules whose
// replacements reintroduce rule heads (directly or mutually) are rejected.
DiffPoly substitute(const DiffPoly& p, const std::map<JetKey, DiffPoly>& rules, bool prolong);

// A functional is a density considered modulo Im d_z + Im d_zbar.  Equality
// holds iff the difference of densities has vanishing Euler derivatives for
// every field and zero field-free part (pure kappa-constants are not total
// derivatives).
class Functional {
public:
    Functional() = default;
    explicit Functional(DiffPoly density) : density_(std::move(density)) {}

    const DiffPoly& density() const { return density_; }

    bool is_zero() const;
    friend bool operator==(const Functional& a, const Functional& b) {
        return Functional(a.density_ - b.density_).is_zero();
    }
    friend bool operator!=(const Functional& a, const Functional& b) { return !(a == b); }

    Functional operator-() const { return Functional(-density_); }
    friend Functional operator+(const Functional& a, const Functional& b) {
        return Functional(a.density_ + b.density_);
    }
    friend Functional operator-(const Functional& a, const Functional& b) {
        return Functional(a.density_ - b.density_);
    }
    Functional scaled(const Rat& c) const { return Functional(density_.scaled(c)); }

private:
    DiffPoly density_;
};

}  // namespace agd
