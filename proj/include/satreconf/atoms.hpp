#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "satreconf/errors.hpp"

namespace satreconf {

/// Registry mapping atom names to dense ids. One table per system is the
/// single source of propositional variable numbering: atom id i corresponds
/// to solver variable i + 1.
class AtomTable {
public:
    int add(const std::string& name) {
        auto it = index_.find(name);
        if (it != index_.end())
            throw AuthoringError("atom already declared: " + name);
        int id = static_cast<int>(names_.size());
        names_.push_back(name);
        index_.emplace(name, id);
        return id;
    }

    [[nodiscard]] int id(const std::string& name) const {
        auto it = index_.find(name);
        if (it == index_.end())
            throw EncodingError("undeclared atom: " + name);
        return it->second;
    }

    [[nodiscard]] std::optional<int> lookup(const std::string& name) const {
        auto it = index_.find(name);
        if (it == index_.end())
            return std::nullopt;
        return it->second;
    }

    [[nodiscard]] const std::string& name(int id) const { return names_.at(static_cast<size_t>(id)); }
    [[nodiscard]] int size() const { return static_cast<int>(names_.size()); }
    [[nodiscard]] const std::vector<std::string>& names() const { return names_; }

    /// Solver variable for an atom id (variables are 1-based).
    [[nodiscard]] static int var_of(int atom_id) { return atom_id + 1; }

private:
    std::vector<std::string> names_;
    std::unordered_map<std::string, int> index_;
};

} // namespace satreconf
