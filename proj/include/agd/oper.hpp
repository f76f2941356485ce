// SPDX-License-Identifier: MIT
//
// Differential-operator phase-space points ("opers"): monic order-N symbols
//
//     L = kappa^N lam^N -/+ sum_{j} W_j kappa^(N-j) lam^(N-j),   j = 1..N,
//
// with generator fields W_j as coefficients.  The traceless (sl) type omits
// W_1 identically.  The sign convention selects -W_j (the convention used for
// the N=2,3 display formulas, e.g. L = k^3 lam^3 - T k lam - W) or +W_j.

#pragma once

#include "agd/psymbol.hpp"

#include <string>
#include <vector>

namespace agd {

enum class OperType { gl, sl };
enum class SignConvention { minus, plus };

class Oper {
public:
    // Declares (idempotently) the coefficient fields and builds the oper.
    // Default field names: W2 = "T", W3 = "W", higher W_j = "W<j>"; the gl
    // type adds W1 = "W1".  Custom names may be supplied ordered j = jmin..N.
    Oper(int N, OperType type, SignConvention sign,
         const std::vector<std::string>& names = {});

    int order() const { return N_; }
    OperType type() const { return type_; }
    SignConvention sign() const { return sign_; }

    // Field of the coefficient W_j (j = 2..N for sl, 1..N for gl).
    FieldId w_field(int j) const;
    const std::vector<FieldId>& w_fields() const { return w_; }
    int j_min() const { return type_ == OperType::sl ? 2 : 1; }

    // The symbol kappa^N lam^N -/+ sum_j W_j kappa^(N-j) lam^(N-j).
    PsiSymbol symbol() const;

    // Suggested truncation floor for bracket work at this order.
    int default_floor() const { return -(N_ + 3); }

private:
    int N_;
    OperType type_;
    SignConvention sign_;
    std::vector<FieldId> w_;  // ordered j = j_min()..N
};

}  // namespace agd
