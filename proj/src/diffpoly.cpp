// SPDX-License-Identifier: MIT

#include "agd/diffpoly.hpp"

#include <sstream>
#include <stdexcept>

namespace agd {

int Monomial::odd_count() const {
    int n = 0;
    for (const auto& [key, exp] : factors)
        if (is_odd(key)) n += exp;  // canonical form keeps odd exponents at 1
    return n;
}

int Monomial::ghost_number() const {
    int g = 0;
    const FieldTable& tab = FieldTable::instance();
    for (const auto& [key, exp] : factors) g += tab.ghost(key.field) * exp;
    return g;
}

int Monomial::jet_degree() const {
    int d = 0;
    for (const auto& [key, exp] : factors) d += exp;
    return d;
}

std::optional<std::pair<Monomial, int>> mul_monomials(const Monomial& a, const Monomial& b) {
    Monomial out;
    out.kpow = a.kpow + b.kpow;
    out.factors.reserve(a.factors.size() + b.factors.size());

    // Merge the two canonical factor lists.  When a b-factor is placed before a
    // remaining odd a-factors, it crosses all of them; if the b-factor is odd,
    // each crossing of an odd a-factor flips the sign.
    std::size_t i = 0, j = 0;
    int sign = 1;
    // odd_tail[i] = number of odd factors in a.factors[i..] (counting multiplicity).
    std::vector<int> odd_tail(a.factors.size() + 1, 0);
    for (std::size_t t = a.factors.size(); t-- > 0;)
        odd_tail[t] = odd_tail[t + 1] + (is_odd(a.factors[t].first) ? a.factors[t].second : 0);

    while (i < a.factors.size() || j < b.factors.size()) {
        bool take_a;
        if (i == a.factors.size()) take_a = false;
        else if (j == b.factors.size()) take_a = true;
        else if (a.factors[i].first < b.factors[j].first) take_a = true;
        else if (b.factors[j].first < a.factors[i].first) take_a = false;
        else {
            // Same jet coordinate: combine exponents.
            const JetKey key = a.factors[i].first;
            if (is_odd(key)) return std::nullopt;  // odd factor squared
            out.factors.emplace_back(key, a.factors[i].second + b.factors[j].second);
            ++i;
            ++j;
            continue;
        }
        if (take_a) {
            out.factors.push_back(a.factors[i]);
            ++i;
        } else {
            if (is_odd(b.factors[j].first) && (odd_tail[i] % 2)) sign = -sign;
            out.factors.push_back(b.factors[j]);
            ++j;
        }
    }
    return std::make_pair(std::move(out), sign);
}

DiffPoly DiffPoly::constant(const Rat& c, int kpow) {
    DiffPoly p;
    if (kpow < 0) throw std::invalid_argument("DiffPoly: negative kappa power");
    if (!c.is_zero()) p.terms_.emplace(Monomial{kpow, {}}, c);
    return p;
}

DiffPoly DiffPoly::jet(const JetKey& k) {
    if (k.dz < 0 || k.dzbar < 0) throw std::invalid_argument("DiffPoly::jet: negative jet order");
    DiffPoly p;
    Monomial m;
    m.factors.emplace_back(k, 1);
    p.terms_.emplace(std::move(m), Rat(1));
    return p;
}

Rat DiffPoly::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rat(0) : it->second;
}

std::optional<Parity> DiffPoly::parity() const {
    Parity p = Parity::even;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Parity mp = m.parity();
        if (first) {
            p = mp;
            first = false;
        } else if (mp != p) {
            return std::nullopt;
        }
    }
    return p;
}

std::optional<int> DiffPoly::ghost_number() const {
    int g = 0;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        int mg = m.ghost_number();
        if (first) {
            g = mg;
            first = false;
        } else if (mg != g) {
            return std::nullopt;
        }
    }
    return g;
}

void DiffPoly::add_term(const Monomial& m, const Rat& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

DiffPoly DiffPoly::operator-() const {
    DiffPoly out;
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
    return out;
}

DiffPoly& DiffPoly::operator+=(const DiffPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

DiffPoly& DiffPoly::operator-=(const DiffPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

DiffPoly operator*(const DiffPoly& a, const DiffPoly& b) {
    DiffPoly out;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) {
            auto prod = mul_monomials(ma, mb);
            if (!prod) continue;
            Rat c = ca * cb;
            if (prod->second < 0) c = -c;
            out.add_term(prod->first, c);
        }
    return out;
}

DiffPoly DiffPoly::scaled(const Rat& c) const {
    DiffPoly out;
    if (c.is_zero()) return out;
    for (const auto& [m, k] : terms_) out.terms_.emplace(m, k * c);
    return out;
}

DiffPoly DiffPoly::mul_kappa(int power) const {
    if (power < 0) throw std::invalid_argument("DiffPoly::mul_kappa: negative power");
    DiffPoly out;
    for (const auto& [m, c] : terms_) {
        Monomial mm = m;
        mm.kpow += power;
        out.terms_.emplace(std::move(mm), c);
    }
    return out;
}

DiffPoly DiffPoly::div_kappa(int power) const {
    if (power < 0) throw std::invalid_argument("DiffPoly::div_kappa: negative power");
    DiffPoly out;
    for (const auto& [m, c] : terms_) {
        if (m.kpow < power)
            throw std::domain_error("DiffPoly::div_kappa: inexact division by kappa^" +
                                    std::to_string(power));
        Monomial mm = m;
        mm.kpow -= power;
        out.terms_.emplace(std::move(mm), c);
    }
    return out;
}

int DiffPoly::min_kappa() const {
    int best = 0;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (first || m.kpow < best) best = m.kpow;
        first = false;
    }
    return best;
}

int DiffPoly::max_kappa() const {
    int best = 0;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (first || m.kpow > best) best = m.kpow;
        first = false;
    }
    return best;
}

DiffPoly DiffPoly::d_kappa() const {
    DiffPoly out;
    for (const auto& [m, c] : terms_) {
        if (m.kpow == 0) continue;
        Monomial mm = m;
        mm.kpow -= 1;
        out.add_term(mm, c * Rat(m.kpow));
    }
    return out;
}

DiffPoly DiffPoly::top_kappa_part() const {
    const int top = max_kappa();
    DiffPoly out;
    for (const auto& [m, c] : terms_)
        if (m.kpow == top) out.terms_.emplace(m, c);
    return out;
}

DiffPoly DiffPoly::pow(unsigned e) const {
    DiffPoly out = constant(Rat(1));
    for (unsigned i = 0; i < e; ++i) out = out * *this;
    return out;
}

DiffPoly DiffPoly::field_free_part() const {
    DiffPoly out;
    for (const auto& [m, c] : terms_)
        if (m.is_constant()) out.terms_.emplace(m, c);
    return out;
}

bool DiffPoly::depends_on(FieldId f) const {
    for (const auto& [m, c] : terms_)
        for (const auto& [key, exp] : m.factors)
            if (key.field == f) return true;
    return false;
}

bool DiffPoly::depends_on(const JetKey& k) const {
    for (const auto& [m, c] : terms_)
        for (const auto& [key, exp] : m.factors)
            if (key == k) return true;
    return false;
}

std::string DiffPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Rat mag = c.sign() < 0 ? -c : c;
        if (first) {
            if (c.sign() < 0) os << "-";
            first = false;
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        bool need_star = false;
        if (!mag.is_one() || (m.kpow == 0 && m.factors.empty())) {
            os << mag.str();
            need_star = true;
        }
        if (m.kpow > 0) {
            if (need_star) os << "*";
            os << "k";
            if (m.kpow > 1) os << "^" << m.kpow;
            need_star = true;
        }
        for (const auto& [key, exp] : m.factors) {
            if (need_star) os << "*";
            os << jet_name(key);
            if (exp > 1) os << "^" << exp;
            need_star = true;
        }
    }
    return os.str();
}

}  // namespace agd
