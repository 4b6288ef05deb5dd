#pragma once

#include <memory>
#include <set>
#include <string>
#include <vector>

#include "satreconf/atoms.hpp"

namespace satreconf {

enum class NodeKind { Atom, Not, And, Or, Implies };

struct Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

/// Immutable propositional formula tree over atoms from an AtomTable.
/// An empty conjunction is true, an empty disjunction is false.
struct Formula {
    NodeKind kind;
    int atom = -1;                  // valid when kind == Atom
    std::vector<FormulaPtr> kids;   // Not: 1 child, Implies: 2, And/Or: any
};

FormulaPtr f_atom(int atom_id);
FormulaPtr f_not(FormulaPtr f);
FormulaPtr f_and(std::vector<FormulaPtr> fs);
FormulaPtr f_or(std::vector<FormulaPtr> fs);
FormulaPtr f_implies(FormulaPtr lhs, FormulaPtr rhs);
FormulaPtr f_true();
FormulaPtr f_false();

/// Evaluate under a total assignment indexed by atom id.
bool eval(const FormulaPtr& f, const std::vector<bool>& by_atom);

/// Atom ids occurring in the formula.
std::set<int> collect_atoms(const FormulaPtr& f);

/// Render with infix operators: ! & | -> and parentheses. Atom names are
/// taken from the table; names like low(x1) are single tokens.
std::string to_string(const FormulaPtr& f, const AtomTable& atoms);

/// Parse the grammar produced by to_string. Precedence ! > & > | > ->,
/// implication is right-associative. Unknown atoms raise EncodingError.
FormulaPtr parse_formula(const std::string& text, const AtomTable& atoms);

} // namespace satreconf
