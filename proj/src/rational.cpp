// SPDX-License-Identifier: MIT

#include "agd/rational.hpp"

#include <ostream>

namespace agd {

Rat Rat::parse(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("Rat::parse: empty string");
    mpq_class q;
    if (q.set_str(text, 10) != 0)
        throw std::invalid_argument("Rat::parse: bad rational literal '" + text + "'");
    if (q.get_den() == 0) throw std::domain_error("Rat::parse: zero denominator in '" + text + "'");
    q.canonicalize();
    return Rat(q);
}

std::string Rat::str() const { return v_.get_str(); }

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.v_; }

}  // namespace agd
