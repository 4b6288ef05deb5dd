#pragma once

#include "satreconf/cnf.hpp"
#include "satreconf/formula.hpp"

namespace satreconf {

/// Equisatisfiable CNF conversion with fresh definition variables. Variables
/// 1..num_atom_vars are reserved for atom ids 0..num_atom_vars-1; auxiliary
/// variables are allocated above. The projection of any model onto the
/// reserved variables satisfies the source formula, and every satisfying
/// assignment of the source extends to a model.
struct CnfBuild {
    CnfFormula cnf;
    int root_lit = 0; // asserted as a unit clause
};

/// Convert f into cnf, appending to an existing formula so several trees can
/// share one variable space. Atoms outside [0, num_atom_vars) raise
/// EncodingError.
int tseitin_add(const FormulaPtr& f, CnfFormula& cnf, int num_atom_vars);

CnfBuild to_cnf(const FormulaPtr& f, int num_atom_vars);

} // namespace satreconf
