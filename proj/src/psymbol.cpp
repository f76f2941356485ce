// SPDX-License-Identifier: MIT

#include "agd/psymbol.hpp"

#include <sstream>
#include <stdexcept>

namespace agd {

PsiSymbol PsiSymbol::term(DiffPoly c, int degree) {
    PsiSymbol s;
    if (!c.is_zero()) s.coeffs_.emplace(degree, std::move(c));
    return s;
}

std::optional<int> PsiSymbol::top_degree() const {
    if (coeffs_.empty()) return std::nullopt;
    return coeffs_.rbegin()->first;
}

DiffPoly PsiSymbol::coeff(int d) const {
    if (floor_ && d < *floor_)
        throw std::domain_error("PsiSymbol::coeff: degree " + std::to_string(d) +
                                " is below the truncation floor " + std::to_string(*floor_));
    auto it = coeffs_.find(d);
    return it == coeffs_.end() ? DiffPoly() : it->second;
}

void PsiSymbol::set_term(int degree, DiffPoly c) {
    if (c.is_zero())
        coeffs_.erase(degree);
    else
        coeffs_[degree] = std::move(c);
}

void PsiSymbol::absorb_floor(const std::optional<int>& other) {
    if (!other) return;
    if (!floor_ || *other > *floor_) floor_ = other;
}

void PsiSymbol::prune() {
    for (auto it = coeffs_.begin(); it != coeffs_.end();) {
        if (it->second.is_zero())
            it = coeffs_.erase(it);
        else
            ++it;
    }
    if (floor_) {
        for (auto it = coeffs_.begin(); it != coeffs_.end();) {
            if (it->first < *floor_)
                it = coeffs_.erase(it);
            else
                break;  // map is degree-sorted
        }
    }
}

PsiSymbol PsiSymbol::operator-() const {
    PsiSymbol out;
    out.floor_ = floor_;
    for (const auto& [d, c] : coeffs_) out.coeffs_.emplace(d, -c);
    return out;
}

PsiSymbol& PsiSymbol::operator+=(const PsiSymbol& o) {
    absorb_floor(o.floor_);
    for (const auto& [d, c] : o.coeffs_) {
        auto [it, inserted] = coeffs_.emplace(d, c);
        if (!inserted) it->second += c;
    }
    prune();
    return *this;
}

PsiSymbol& PsiSymbol::operator-=(const PsiSymbol& o) { return *this += -o; }

PsiSymbol PsiSymbol::scaled(const Rat& c) const {
    PsiSymbol out;
    out.floor_ = floor_;
    if (c.is_zero()) return out;
    for (const auto& [d, k] : coeffs_) out.coeffs_.emplace(d, k.scaled(c));
    return out;
}

PsiSymbol PsiSymbol::left_mul(const DiffPoly& f) const {
    PsiSymbol out;
    out.floor_ = floor_;
    for (const auto& [d, c] : coeffs_) {
        DiffPoly prod = f * c;
        if (!prod.is_zero()) out.coeffs_.emplace(d, std::move(prod));
    }
    return out;
}

PsiSymbol PsiSymbol::mul_kappa(int power) const {
    PsiSymbol out;
    out.floor_ = floor_;
    for (const auto& [d, c] : coeffs_) out.coeffs_.emplace(d, c.mul_kappa(power));
    return out;
}

PsiSymbol PsiSymbol::div_kappa(int power) const {
    PsiSymbol out;
    out.floor_ = floor_;
    for (const auto& [d, c] : coeffs_) out.coeffs_.emplace(d, c.div_kappa(power));
    return out;
}

PsiSymbol PsiSymbol::shifted(int s) const {
    PsiSymbol out;
    if (floor_) out.floor_ = *floor_ + s;
    for (const auto& [d, c] : coeffs_) out.coeffs_.emplace(d + s, c);
    return out;
}

PsiSymbol PsiSymbol::truncated(int new_floor) const {
    PsiSymbol out;
    out.floor_ = floor_ ? std::max(*floor_, new_floor) : new_floor;
    for (const auto& [d, c] : coeffs_)
        if (d >= *out.floor_) out.coeffs_.emplace(d, c);
    return out;
}

PsiSymbol PsiSymbol::plus_part() const {
    if (floor_ && *floor_ > 0)
        throw std::domain_error("PsiSymbol::plus_part: floor above 0, projection untrusted");
    PsiSymbol out;  // exact: nonnegative degrees are always fully known
    for (const auto& [d, c] : coeffs_)
        if (d >= 0) out.coeffs_.emplace(d, c);
    return out;
}

PsiSymbol PsiSymbol::minus_part() const {
    PsiSymbol out;
    out.floor_ = floor_;
    for (const auto& [d, c] : coeffs_)
        if (d < 0) out.coeffs_.emplace(d, c);
    return out;
}

std::string PsiSymbol::str() const {
    std::ostringstream os;
    if (coeffs_.empty()) {
        os << "0";
    } else {
        bool first = true;
        // Print highest degree first.
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
            if (!first) os << " + ";
            os << "(" << it->second.str() << ") lam^" << it->first;
            first = false;
        }
    }
    if (floor_) os << " + O(lam^" << *floor_ - 1 << ")";
    return os.str();
}

PsiSymbol compose(const PsiSymbol& X, const PsiSymbol& Y, std::optional<int> floor) {
    PsiSymbol out;

    // Floor bookkeeping: untrusted input regions poison everything they can
    // reach.  The unknown X-tail (degrees <= floor(X)-1) times the top Y-term
    // reaches degree floor(X)-1+top(Y); similarly with the roles swapped.
    std::optional<int> out_floor = floor;
    auto raise = [&out_floor](int f) {
        if (!out_floor || f > *out_floor) out_floor = f;
    };
    if (X.floor() && Y.top_degree()) raise(*X.floor() + *Y.top_degree());
    if (Y.floor() && X.top_degree()) raise(*Y.floor() + *X.top_degree());

    // The expansion is infinite exactly when some left degree is negative and
    // some right coefficient survives arbitrarily many z-derivatives (i.e. is
    // not field-free).
    bool x_negative = !X.coeffs().empty() && X.coeffs().begin()->first < 0;
    bool y_has_fields = false;
    for (const auto& [e, b] : Y.coeffs())
        if (!(b.field_free_part() == b)) y_has_fields = true;
    if (x_negative && y_has_fields && !out_floor)
        throw std::invalid_argument(
            "compose: expansion is infinite, a truncation floor is required");

    for (const auto& [p, a] : X.coeffs()) {
        for (const auto& [e, b] : Y.coeffs()) {
            // k-th term: C(p, k) * a * d_z^k(b) * lam^(p+e-k).
            Rat binom(1);
            DiffPoly bder = b;
            for (int k = 0;; ++k) {
                if (k > 0) {
                    binom = binom * Rat(p - (k - 1)) / Rat(k);
                    bder = d_z(bder);
                }
                if (binom.is_zero()) break;               // k exceeded a nonnegative p
                if (bder.is_zero()) break;                // coefficient differentiated away
                int deg = p + e - k;
                if (out_floor && deg < *out_floor) break;  // below requested floor
                DiffPoly term = (a * bder).scaled(binom);
                if (!term.is_zero()) {
                    PsiSymbol t = PsiSymbol::term(std::move(term), deg);
                    out += t;
                }
            }
        }
    }

    if (out_floor) out = out.truncated(*out_floor);
    return out;
}

PsiSymbol commutator(const PsiSymbol& X, const PsiSymbol& Y, std::optional<int> floor) {
    auto parity_of = [](const PsiSymbol& s) -> Parity {
        std::optional<Parity> p;
        for (const auto& [d, c] : s.coeffs()) {
            auto cp = c.parity();
            if (!cp) throw std::invalid_argument("commutator: mixed-parity coefficient");
            if (!p)
                p = cp;
            else if (*p != *cp)
                throw std::invalid_argument("commutator: mixed-parity symbol");
        }
        return p.value_or(Parity::even);
    };
    PsiSymbol xy = compose(X, Y, floor);
    PsiSymbol yx = compose(Y, X, floor);
    if (parity_of(X) == Parity::odd && parity_of(Y) == Parity::odd) return xy + yx;
    return xy - yx;
}

DiffPoly res(const PsiSymbol& X) {
    if (X.floor() && *X.floor() > -1)
        throw std::domain_error("res: truncation floor does not reach lam^-1");
    return X.coeff(-1);
}

Functional pair_functional(const PsiSymbol& A, const PsiSymbol& B) {
    return Functional(res(compose(A, B, -1)));
}

bool equal_trusted(const PsiSymbol& A, const PsiSymbol& B) {
    std::optional<int> common;
    if (A.floor()) common = *A.floor();
    if (B.floor() && (!common || *B.floor() > *common)) common = *B.floor();

    auto scan = [&](const PsiSymbol& s, const PsiSymbol& t) {
        for (const auto& [d, c] : s.coeffs()) {
            if (common && d < *common) continue;
            if (!(t.coeff(d) == c)) return false;
        }
        return true;
    };
    return scan(A, B) && scan(B, A);
}

std::pair<PsiSymbol, PsiSymbol> reduce_mod_oper(const PsiSymbol& D, const PsiSymbol& L, int N) {
    if (!D.exact() || !L.exact())
        throw std::invalid_argument("reduce_mod_oper: operands must be exact symbols");
    for (const auto& [d, c] : D.coeffs())
        if (d < 0) throw std::invalid_argument("reduce_mod_oper: dividend has negative degrees");

    PsiSymbol Q;
    PsiSymbol R = D;
    while (true) {
        auto top = R.top_degree();
        if (!top || *top < N) break;
        DiffPoly lead = R.coeff(*top);
        DiffPoly qc = lead.div_kappa(N);  // throws on inexact division
        PsiSymbol qterm = PsiSymbol::term(std::move(qc), *top - N);
        Q += qterm;
        R -= compose(qterm, L);
    }
    return {Q, R};
}

}  // namespace agd
