// SPDX-License-Identifier: MIT
//
// Calibration table between the symbol-calculus engine and the closed-form
// reference algebra.  Each engine quantity equals a fixed rational multiple of
// a fixed kappa power times its reference counterpart:
//
//     engine = c * kappa^m * reference ,
//
// exactly as differential polynomials, or modulo total derivatives where the
// quantity is only defined as a density.  The table is frozen: unit tests and
// the acceptance suite recompute both sides and assert the stored (c, m), and
// the command-line tool prints the table verbatim.

#pragma once

#include "agd/rational.hpp"

#include <string>
#include <vector>

namespace agd {

struct ConformanceRow {
    std::string id;         // stable lookup key, e.g. "n3.anchor.T.2"
    std::string engine;     // engine-side quantity
    std::string reference;  // reference-side quantity
    Rat c;                  // rational factor
    int m;                  // kappa power
    bool mod_dz;            // equality holds modulo total derivatives
};

// The full frozen table, in fixed print order.
const std::vector<ConformanceRow>& conformance_table();

// Row lookup by id; throws std::out_of_range for unknown ids.
const ConformanceRow& conformance_row(const std::string& id);

}  // namespace agd
