// SPDX-License-Identifier: MIT

#include "agd/fields.hpp"

#include <stdexcept>

namespace agd {

FieldTable& FieldTable::instance() {
    static FieldTable table;
    return table;
}

FieldId FieldTable::declare(const std::string& name, Parity parity, int ghost, const Rat& weight) {
    if (name.empty()) throw std::invalid_argument("FieldTable::declare: empty name");
    auto it = index_.find(name);
    if (it != index_.end()) {
        const FieldInfo& have = fields_[static_cast<std::size_t>(it->second)];
        if (have.parity != parity || have.ghost != ghost || !(have.weight == weight))
            throw std::invalid_argument("FieldTable::declare: conflicting re-declaration of '" +
                                        name + "'");
        return it->second;
    }
    FieldId id = static_cast<FieldId>(fields_.size());
    fields_.push_back(FieldInfo{name, parity, ghost, weight});
    index_.emplace(name, id);
    return id;
}

FieldId FieldTable::id_of(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end())
        throw std::out_of_range("FieldTable: unknown field '" + name + "'");
    return it->second;
}

const FieldInfo& FieldTable::info(FieldId id) const {
    if (id < 0 || static_cast<std::size_t>(id) >= fields_.size())
        throw std::out_of_range("FieldTable: bad field id");
    return fields_[static_cast<std::size_t>(id)];
}

void FieldTable::clear() {
    fields_.clear();
    index_.clear();
}

std::string jet_name(const JetKey& k) {
    return FieldTable::instance().name(k.field) + "[" + std::to_string(k.dz) + "," +
           std::to_string(k.dzbar) + "]";
}

}  // namespace agd
