#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace walg {

/// Ordered set of symbol names over which all exact scalars live.
/// The coupling constant "g" is always present at index 0.
class SymbolTable {
public:
    enum class Role { coupling, module_param, weight_coord, point };

    static std::shared_ptr<const SymbolTable>
    make(const std::vector<std::pair<std::string, Role>>& extra = {})
    {
        auto t = std::shared_ptr<SymbolTable>(new SymbolTable);
        t->names_.emplace_back("g");
        t->roles_.push_back(Role::coupling);
        for (const auto& [name, role] : extra) {
            if (t->index_of(name) >= 0)
                throw std::invalid_argument("SymbolTable: duplicate symbol " + name);
            t->names_.push_back(name);
            t->roles_.push_back(role);
        }
        return t;
    }

    int size() const { return static_cast<int>(names_.size()); }
    const std::string& name(int i) const { return names_.at(i); }
    Role role(int i) const { return roles_.at(i); }

    int index_of(const std::string& s) const
    {
        for (int i = 0; i < size(); ++i)
            if (names_[i] == s) return i;
        return -1;
    }

    int index_of_checked(const std::string& s) const
    {
        int i = index_of(s);
        if (i < 0) throw std::invalid_argument("SymbolTable: unknown symbol " + s);
        return i;
    }

    bool same_as(const SymbolTable& other) const { return names_ == other.names_; }

private:
    SymbolTable() = default;
    std::vector<std::string> names_;
    std::vector<Role> roles_;
};

using SymTab = std::shared_ptr<const SymbolTable>;

} // namespace walg
