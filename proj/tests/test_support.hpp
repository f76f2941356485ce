// SPDX-License-Identifier: MIT
//
// Shared helpers for the test suites: a standard field alphabet and a seeded
// generator of random graded differential polynomials.

#pragma once

#include "agd/diffpoly.hpp"
#include "agd/fields.hpp"
#include "agd/variational.hpp"

#include <random>
#include <vector>

namespace agd::testing {

// Declares (idempotently) a small standard alphabet and returns the ids:
// even fields T, W; odd fields eta, th.
struct Alphabet {
    FieldId T, W, eta, th;
};

inline Alphabet standard_alphabet() {
    auto& tab = FieldTable::instance();
    Alphabet a;
    a.T = tab.declare("T", Parity::even, 0, Rat(2));
    a.W = tab.declare("W", Parity::even, 0, Rat(3));
    a.eta = tab.declare("eta", Parity::odd, 1, Rat(-1));
    a.th = tab.declare("th", Parity::odd, 1, Rat(-2));
    return a;
}

// Random polynomial in the jets of `fields` with dz <= max_dz, dzbar <= max_dzbar,
// up to `terms` monomials of jet degree <= 3 and small integer coefficients.
inline DiffPoly random_poly(std::mt19937_64& rng, const std::vector<FieldId>& fields, int terms,
                            int max_dz, int max_dzbar = 0, int max_kpow = 1) {
    std::uniform_int_distribution<int> coeff(-4, 4);
    std::uniform_int_distribution<int> degree(1, 3);
    std::uniform_int_distribution<std::size_t> fpick(0, fields.size() - 1);
    std::uniform_int_distribution<int> dz(0, max_dz);
    std::uniform_int_distribution<int> dzbar(0, max_dzbar);
    std::uniform_int_distribution<int> kp(0, max_kpow);

    DiffPoly p;
    for (int t = 0; t < terms; ++t) {
        int c = coeff(rng);
        if (c == 0) c = 1;
        DiffPoly mono = DiffPoly::constant(Rat(c), kp(rng));
        int d = degree(rng);
        for (int j = 0; j < d; ++j)
            mono = mono * DiffPoly::jet(fields[fpick(rng)], dz(rng), dzbar(rng));
        p += mono;  // odd squares drop out inside the product already
    }
    return p;
}

}  // namespace agd::testing
