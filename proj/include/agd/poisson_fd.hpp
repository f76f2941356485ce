// SPDX-License-Identifier: MIT
//
// Finite-dimensional polynomial Poisson structures and their cotangent Lie
// algebroids.  This is the zero-jet specialization of the engine: polynomials
// in coordinates x^1..x^n (no derivatives, no kappa), an antisymmetric
// polynomial bivector pi^{ij}, the anchor eps |-> eps_j pi^{ji} d_i, and the
// Koszul bracket of 1-form sections
//
//     [eps, eps']_k = eps_j (d_k pi^{ji}) eps'_i
//                     + pi^{ji} (eps_j d_i eps'_k - eps'_j d_i eps_k),
//
// which for constant sections reduces to the structure-constant pairing.  The
// verifier checks the four algebroid axioms on seeded random polynomial
// sections; they hold exactly iff the bivector satisfies Jacobi.

#pragma once

#include "agd/variational.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace agd {

struct PolyBivector {
    std::vector<FieldId> coords;              // x^1..x^n
    std::vector<std::vector<DiffPoly>> pi;    // n x n, antisymmetric

    int dim() const { return static_cast<int>(coords.size()); }
};

// Declares coordinates prefix1..prefixN and builds the bivector from the
// strict upper triangle {(i,j,value)} with 1-based indices i < j.
PolyBivector make_bivector(const std::string& prefix, int n,
                           const std::vector<std::tuple<int, int, DiffPoly>>& upper);

// Named example structures: "sl2" (linear, the coadjoint structure with
// brackets {h,e} = 2e, {h,f} = -2f, {e,f} = h), "symplectic4" (constant
// rank-4 symplectic block), "corrupt" (sl2 with a quadratic defect added to
// pi^{23}, which breaks Jacobi).
PolyBivector preset_bivector(const std::string& name);

using CotangentSection = std::vector<DiffPoly>;  // components eps_1..eps_n

// Sum over cyclic (i,j,k) of pi^{il} d_l pi^{jk}; zero for all triples iff pi
// is Poisson.
DiffPoly jacobi_defect(const PolyBivector& pb, int i, int j, int k);
bool is_poisson(const PolyBivector& pb);

// (delta_eps x)^i = eps_j pi^{ji}.
std::vector<DiffPoly> anchor_fd(const PolyBivector& pb, const CotangentSection& eps);

// delta_eps f for a function f.
DiffPoly anchor_apply_fd(const PolyBivector& pb, const CotangentSection& eps, const DiffPoly& f);

// Full Koszul bracket (base-dependent sections supported).
CotangentSection bracket_fd(const PolyBivector& pb, const CotangentSection& a,
                            const CotangentSection& b);

struct AlgebroidReportFd {
    bool antisymmetry = false;        // [a,b] = -[b,a]
    bool leibniz = false;             // [a, f b] = f [a,b] + (delta_a f) b
    bool anchor_homomorphism = false; // [delta_a, delta_b] f = delta_{[a,b]} f
    bool jacobi = false;              // cyclic [[a,b],c] sums to zero

    bool ok() const { return antisymmetry && leibniz && anchor_homomorphism && jacobi; }
};

AlgebroidReportFd verify_algebroid_fd(const PolyBivector& pb, std::uint64_t seed, int rounds);

}  // namespace agd
