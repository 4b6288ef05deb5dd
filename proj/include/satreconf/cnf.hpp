#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "satreconf/errors.hpp"

namespace satreconf {

/// Clause database in DIMACS literal convention: literal +v / -v for
/// variable v >= 1. Tautological clauses are dropped on insertion and
/// duplicate literals removed, so no stored clause contains both v and -v.
struct CnfFormula {
    int num_vars = 0;
    std::vector<std::vector<int>> clauses;

    /// Allocate a fresh variable and return it.
    int new_var() { return ++num_vars; }

    void ensure_var(int v) {
        if (v > num_vars)
            num_vars = v;
    }

    /// Insert a clause; sorts and deduplicates literals, silently drops
    /// tautologies. Literals must reference declared variables.
    void add_clause(std::vector<int> lits);

    [[nodiscard]] std::string to_dimacs() const;
    static CnfFormula from_dimacs(std::istream& in);
    static CnfFormula from_dimacs_string(const std::string& text);
};

/// Total truth assignment for a formula's variable range (1-based).
struct Model {
    std::vector<bool> value; // index 0 unused

    [[nodiscard]] bool operator[](int var) const { return value.at(static_cast<size_t>(var)); }
    [[nodiscard]] bool satisfies(const CnfFormula& f) const;
};

} // namespace satreconf
