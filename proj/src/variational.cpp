// SPDX-License-Identifier: MIT

#include "agd/variational.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace agd {

namespace {

// Graded Leibniz expansion: for each term and each factor position, replace
// that factor by `image(key)` (a DiffPoly), keeping prefix and suffix in ring
// order.  `deriv_parity` is the parity of the derivation; crossing the prefix
// with an odd derivation contributes the Koszul sign.
template <typename ImageFn>
DiffPoly derive_leibniz(const DiffPoly& p, Parity deriv_parity, ImageFn&& image) {
    DiffPoly out;
    for (const auto& [mono, coeff] : p.terms()) {
        int prefix_odd = 0;
        for (std::size_t i = 0; i < mono.factors.size(); ++i) {
            const auto& [key, exp] = mono.factors[i];
            DiffPoly img = image(key);
            if (!img.is_zero()) {
                // prefix * D(key) * key^(exp-1) * suffix, with the Koszul sign
                // for carrying an odd derivation across the prefix; ring
                // multiplication canonicalizes the factor order of D(key).
                DiffPoly piece = DiffPoly::constant(Rat(exp));
                Monomial prefix_m, suffix_m;
                for (std::size_t t = 0; t < i; ++t) prefix_m.factors.push_back(mono.factors[t]);
                prefix_m.kpow = mono.kpow;
                if (exp > 1) suffix_m.factors.emplace_back(key, exp - 1);
                for (std::size_t t = i + 1; t < mono.factors.size(); ++t)
                    suffix_m.factors.push_back(mono.factors[t]);
                DiffPoly prefix_p, suffix_p;
                prefix_p.add_term(prefix_m, Rat(1));
                suffix_p.add_term(suffix_m, Rat(1));
                piece = piece * prefix_p * img * suffix_p;
                if (deriv_parity == Parity::odd && (prefix_odd % 2)) piece = -piece;
                piece = piece.scaled(coeff);
                out += piece;
            }
            if (is_odd(key)) prefix_odd += exp;
        }
    }
    return out;
}

DiffPoly total_derivative(const DiffPoly& p, bool zbar) {
    return derive_leibniz(p, Parity::even, [zbar](const JetKey& k) {
        JetKey up = k;
        if (zbar) ++up.dzbar; else ++up.dz;
        return DiffPoly::jet(up);
    });
}

// All jet coordinates appearing in p.
std::set<JetKey> jets_of(const DiffPoly& p) {
    std::set<JetKey> keys;
    for (const auto& [m, c] : p.terms())
        for (const auto& [key, exp] : m.factors) keys.insert(key);
    return keys;
}

}  // namespace

DiffPoly d_z(const DiffPoly& p) { return total_derivative(p, false); }
DiffPoly d_zbar(const DiffPoly& p) { return total_derivative(p, true); }

DiffPoly d_z_pow(const DiffPoly& p, int m) {
    DiffPoly out = p;
    for (int i = 0; i < m; ++i) out = d_z(out);
    return out;
}

DiffPoly d_zbar_pow(const DiffPoly& p, int n) {
    DiffPoly out = p;
    for (int i = 0; i < n; ++i) out = d_zbar(out);
    return out;
}

DiffPoly partial(const DiffPoly& p, const JetKey& v) {
    const bool v_odd = is_odd(v);
    DiffPoly out;
    for (const auto& [mono, coeff] : p.terms()) {
        int prefix_odd = 0;
        for (std::size_t i = 0; i < mono.factors.size(); ++i) {
            const auto& [key, exp] = mono.factors[i];
            if (key == v) {
                Monomial rest;
                rest.kpow = mono.kpow;
                for (std::size_t t = 0; t < mono.factors.size(); ++t) {
                    if (t == i) {
                        if (exp > 1) rest.factors.emplace_back(key, exp - 1);
                        continue;
                    }
                    rest.factors.push_back(mono.factors[t]);
                }
                Rat c = coeff * Rat(exp);
                if (v_odd && (prefix_odd % 2)) c = -c;
                out.add_term(rest, c);
                break;  // canonical form: v occurs in one factor slot only
            }
            if (is_odd(key)) prefix_odd += exp;
        }
    }
    return out;
}

DiffPoly partial_right(const DiffPoly& p, const JetKey& v) {
    const bool v_odd = is_odd(v);
    DiffPoly out;
    for (const auto& [mono, coeff] : p.terms()) {
        int seen_odd = 0;
        // Count odd factors after the v-slot by scanning from the right.
        for (std::size_t ri = mono.factors.size(); ri-- > 0;) {
            const auto& [key, exp] = mono.factors[ri];
            if (key == v) {
                Monomial rest;
                rest.kpow = mono.kpow;
                for (std::size_t t = 0; t < mono.factors.size(); ++t) {
                    if (t == ri) {
                        if (exp > 1) rest.factors.emplace_back(key, exp - 1);
                        continue;
                    }
                    rest.factors.push_back(mono.factors[t]);
                }
                Rat c = coeff * Rat(exp);
                if (v_odd && (seen_odd % 2)) c = -c;
                out.add_term(rest, c);
                break;
            }
            if (is_odd(key)) seen_odd += exp;
        }
    }
    return out;
}

DiffPoly euler(const DiffPoly& p, FieldId f) {
    DiffPoly out;
    for (const JetKey& key : jets_of(p)) {
        if (key.field != f) continue;
        DiffPoly term = partial(p, key);
        term = d_z_pow(term, key.dz);
        term = d_zbar_pow(term, key.dzbar);
        if ((key.dz + key.dzbar) % 2) term = -term;
        out += term;
    }
    return out;
}

DiffPoly euler_z_family(const DiffPoly& p, FieldId f, int dzbar) {
    DiffPoly out;
    for (const JetKey& key : jets_of(p)) {
        if (key.field != f || key.dzbar != dzbar) continue;
        DiffPoly term = d_z_pow(partial(p, key), key.dz);
        if (key.dz % 2) term = -term;
        out += term;
    }
    return out;
}

bool is_total_dz(const DiffPoly& p) {
    if (!p.field_free_part().is_zero()) return false;
    std::set<std::pair<FieldId, int>> families;
    for (const JetKey& key : jets_of(p)) families.emplace(key.field, key.dzbar);
    for (const auto& [f, n] : families)
        if (!euler_z_family(p, f, n).is_zero()) return false;
    return true;
}

DiffPoly integrate_total_dz(const DiffPoly& p) {
    if (!is_total_dz(p))
        throw std::domain_error("integrate_total_dz: input is not a total z-derivative");

    // Graded one-variable homotopy operator.  With higher z-Euler operators
    //   E_g^(i)(p) = sum_{m >= i} C(m,i) (-d_z)^(m-i) dp/dg[m]   (left partials)
    // over families g = (field, dzbar), the differential polynomial
    //   G = sum_g sum_{i >= 1} d_z^(i-1) ( g[0] * E_g^(i)(p) )
    // satisfies d_z(q) = p for q = (scale integral of G): each monomial of G of
    // total jet degree d is weighted by 1/d.
    std::set<std::pair<FieldId, int>> families;
    for (const JetKey& key : jets_of(p)) families.emplace(key.field, key.dzbar);

    auto binom = [](int m, int i) {
        Rat b(1);
        for (int t = 0; t < i; ++t) b = b * Rat(m - t) / Rat(t + 1);
        return b;
    };

    DiffPoly G;
    for (const auto& [f, n] : families) {
        int max_m = 0;
        for (const JetKey& key : jets_of(p))
            if (key.field == f && key.dzbar == n) max_m = std::max(max_m, key.dz);
        for (int i = 1; i <= max_m; ++i) {
            DiffPoly Ei;
            for (const JetKey& key : jets_of(p)) {
                if (key.field != f || key.dzbar != n || key.dz < i) continue;
                DiffPoly term = d_z_pow(partial(p, key), key.dz - i);
                if ((key.dz - i) % 2) term = -term;
                Ei += term.scaled(binom(key.dz, i));
            }
            if (Ei.is_zero()) continue;
            DiffPoly piece = DiffPoly::jet(f, 0, n) * Ei;
            G += d_z_pow(piece, i - 1);
        }
    }

    DiffPoly q;
    for (const auto& [mono, coeff] : G.terms()) {
        int d = mono.jet_degree();
        if (d == 0) continue;  // cannot occur for valid input; defensive
        q.add_term(mono, coeff / Rat(d));
    }

    if (!(d_z(q) == p))
        throw std::logic_error("integrate_total_dz: homotopy verification failed");
    return q;
}

DiffPoly evolutionary(const std::map<FieldId, DiffPoly>& assignment, Parity derivation_parity,
                      const DiffPoly& p) {
    for (const auto& [f, value] : assignment) {
        auto vp = value.parity();
        if (value.is_zero()) continue;
        if (!vp) throw std::invalid_argument("evolutionary: assignment of mixed parity");
        Parity expected =
            (FieldTable::instance().parity(f) == Parity::odd) != (derivation_parity == Parity::odd)
                ? Parity::odd
                : Parity::even;
        if (*vp != expected)
            throw std::invalid_argument("evolutionary: assignment parity mismatch for field '" +
                                        FieldTable::instance().name(f) + "'");
    }
    return derive_leibniz(p, derivation_parity, [&assignment](const JetKey& k) {
        auto it = assignment.find(k.field);
        if (it == assignment.end()) return DiffPoly();
        return d_zbar_pow(d_z_pow(it->second, k.dz), k.dzbar);
    });
}

DiffPoly substitute(const DiffPoly& p, const std::map<JetKey, DiffPoly>& rules, bool prolong) {
    for (const auto& [head, rhs] : rules) {
        auto rp = rhs.parity();
        if (rhs.is_zero()) continue;
        if (!rp || *rp != (is_odd(head) ? Parity::odd : Parity::even))
            throw std::invalid_argument("substitute: replacement parity mismatch for " +
                                        jet_name(head));
    }

    auto match = [&rules, prolong](const JetKey& k) -> std::optional<DiffPoly> {
        auto it = rules.find(k);
        if (it != rules.end()) return it->second;
        if (prolong) {
            // Look for a head f[m0, n] with m0 < k.dz.
            for (const auto& [head, rhs] : rules)
                if (head.field == k.field && head.dzbar == k.dzbar && head.dz < k.dz)
                    return d_z_pow(rhs, k.dz - head.dz);
        }
        return std::nullopt;
    };

    auto apply_once = [&match](const DiffPoly& q, bool& changed) {
        DiffPoly out;
        for (const auto& [mono, coeff] : q.terms()) {
            DiffPoly term = DiffPoly::constant(coeff, mono.kpow);
            for (const auto& [key, exp] : mono.factors) {
                auto rep = match(key);
                DiffPoly factor;
                if (rep) {
                    changed = true;
                    factor = rep->pow(static_cast<unsigned>(exp));
                } else {
                    factor = DiffPoly::jet(key).pow(static_cast<unsigned>(exp));
                }
                term = term * factor;
            }
            out += term;
        }
        return out;
    };

    DiffPoly cur = p;
    const std::size_t max_passes = rules.size() + 2;
    for (std::size_t pass = 0; pass < max_passes; ++pass) {
        bool changed = false;
        cur = apply_once(cur, changed);
        if (!changed) return cur;
    }
    throw std::invalid_argument("substitute: cyclic rule set");
}

bool Functional::is_zero() const {
    if (!density_.field_free_part().is_zero()) return false;
    std::set<FieldId> fields;
    for (const auto& [m, c] : density_.terms())
        for (const auto& [key, exp] : m.factors) fields.insert(key.field);
    for (FieldId f : fields)
        if (!euler(density_, f).is_zero()) return false;
    return true;
}

}  // namespace agd
