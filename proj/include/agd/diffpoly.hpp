// SPDX-License-Identifier: MIT
//
// Graded differential polynomials.
//
// A DiffPoly is an exact-rational polynomial in jet coordinates f[m,n] and a
// central even variable k (kappa) restricted to nonnegative powers.  Odd
// (Grassmann) jet factors square to zero and anticommute; the canonical form
// orders the factors of every monomial by (field declaration index, dz, dzbar)
// and absorbs reordering signs into the coefficient.  All maps are ordered, so
// iteration (and hence printing) is deterministic.

#pragma once

#include "agd/fields.hpp"
#include "agd/rational.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace agd {

struct Monomial {
    std::int32_t kpow = 0;                               // exponent of kappa, >= 0
    std::vector<std::pair<JetKey, std::int32_t>> factors;  // canonical: key-sorted, exponents >= 1

    bool is_constant() const { return factors.empty(); }
    int odd_count() const;
    Parity parity() const { return odd_count() % 2 ? Parity::odd : Parity::even; }
    int ghost_number() const;
    int jet_degree() const;  // total factor multiplicity, kappa excluded

    friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

// Product of two canonical monomials.  Returns the canonical monomial and the
// Koszul sign (+1/-1), or nullopt when an odd factor repeats (the product is 0).
std::optional<std::pair<Monomial, int>> mul_monomials(const Monomial& a, const Monomial& b);

class DiffPoly {
public:
    DiffPoly() = default;

    static DiffPoly constant(const Rat& c, int kpow = 0);
    static DiffPoly kappa(int power = 1) { return constant(Rat(1), power); }
    static DiffPoly jet(const JetKey& k);
    static DiffPoly jet(FieldId f, int dz = 0, int dzbar = 0) { return jet(JetKey{f, dz, dzbar}); }

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::map<Monomial, Rat>& terms() const { return terms_; }
    Rat coeff(const Monomial& m) const;

    // Grassmann parity when every term has the same parity; nullopt on a mixed
    // or zero polynomial (zero is reported as even).
    std::optional<Parity> parity() const;
    // Ghost number when homogeneous, nullopt otherwise (zero reports 0).
    std::optional<int> ghost_number() const;

    void add_term(const Monomial& m, const Rat& c);  // canonicalizing accumulate

    DiffPoly operator-() const;
    DiffPoly& operator+=(const DiffPoly& o);
    DiffPoly& operator-=(const DiffPoly& o);
    friend DiffPoly operator+(DiffPoly a, const DiffPoly& b) { return a += b; }
    friend DiffPoly operator-(DiffPoly a, const DiffPoly& b) { return a -= b; }
    friend DiffPoly operator*(const DiffPoly& a, const DiffPoly& b);
    DiffPoly& operator*=(const DiffPoly& o) { return *this = *this * o; }

    DiffPoly scaled(const Rat& c) const;
    DiffPoly mul_kappa(int power) const;     // multiply by kappa^power (power >= 0)
    DiffPoly div_kappa(int power) const;     // exact division; throws unless every term allows it
    int min_kappa() const;                   // minimal kpow over terms (0 for the zero polynomial)
    int max_kappa() const;                   // maximal kpow over terms (0 for the zero polynomial)
    DiffPoly d_kappa() const;                // formal derivative in kappa: k^p -> p*k^(p-1)
    DiffPoly top_kappa_part() const;         // terms carrying the maximal kappa power
    DiffPoly pow(unsigned e) const;

    DiffPoly field_free_part() const;        // terms with no jet factors
    bool depends_on(FieldId f) const;
    bool depends_on(const JetKey& k) const;

    friend bool operator==(const DiffPoly& a, const DiffPoly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const DiffPoly& a, const DiffPoly& b) { return !(a == b); }

    // Deterministic plain-text rendering, e.g. "-2*k^2*T[1,0] + 1/2*W[0,0]^2".
    std::string str() const;

private:
    std::map<Monomial, Rat> terms_;
};

}  // namespace agd
