// SPDX-License-Identifier: MIT
//
// Field symbols and jet coordinates.
//
// A field symbol is a declared generator of the differential ring: it carries a
// name, a Grassmann parity (even or odd), an optional ghost number, and a
// conformal weight used for display/bookkeeping.  A jet key f[m,n] addresses
// the m-fold z-derivative and n-fold zbar-derivative of field f.
//
// Declaration order is semantically relevant: the canonical monomial order
// sorts jet factors by (declaration index, dz, dzbar), and for odd factors the
// sort determines the Koszul sign normalization.  The registry is a process
// singleton; the CLI and the tests declare their alphabets up front.

#pragma once

#include "agd/rational.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace agd {

enum class Parity : std::uint8_t { even = 0, odd = 1 };

using FieldId = std::int32_t;

struct FieldInfo {
    std::string name;
    Parity parity = Parity::even;
    int ghost = 0;     // ghost number (0 for matter fields)
    Rat weight = 0;    // conformal weight, bookkeeping only
};

class FieldTable {
public:
    static FieldTable& instance();

    // Declares a field and returns its id.  Re-declaring an existing name with
    // identical attributes is a no-op returning the existing id; conflicting
    // attributes raise.
    FieldId declare(const std::string& name, Parity parity = Parity::even, int ghost = 0,
                    const Rat& weight = Rat(0));

    bool contains(const std::string& name) const { return index_.count(name) != 0; }
    FieldId id_of(const std::string& name) const;
    const FieldInfo& info(FieldId id) const;
    Parity parity(FieldId id) const { return info(id).parity; }
    int ghost(FieldId id) const { return info(id).ghost; }
    const std::string& name(FieldId id) const { return info(id).name; }
    std::size_t size() const { return fields_.size(); }

    // Forgets all declarations.  Test-suite isolation only: live DiffPoly
    // values from before a clear() must not be used afterwards.
    void clear();

private:
    FieldTable() = default;
    std::vector<FieldInfo> fields_;
    std::map<std::string, FieldId> index_;
};

// Jet coordinate f[m,n]: dz-fold z-derivatives, dzbar-fold zbar-derivatives.
struct JetKey {
    FieldId field = 0;
    std::int32_t dz = 0;
    std::int32_t dzbar = 0;

    friend auto operator<=>(const JetKey&, const JetKey&) = default;
};

inline bool is_odd(const JetKey& k) {
    return FieldTable::instance().parity(k.field) == Parity::odd;
}

std::string jet_name(const JetKey& k);  // "T[2,0]" style

}  // namespace agd
