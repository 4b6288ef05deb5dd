#pragma once

#include <vector>

#include "satreconf/cnf.hpp"

namespace satreconf {

/// Flip literal for one observed input: true in a model exactly when the
/// model's value for the input differs from the observation. XOR with a
/// known constant reduces to the decision variable or its negation.
inline int flip_literal(int input_var, bool observed) {
    return observed ? -input_var : input_var;
}

std::vector<int> encode_flip_literals(const std::vector<int>& input_vars,
                                      const std::vector<bool>& observed);

/// Sequential counter over the given literals. Output variable at_least[j-1]
/// is forced true whenever at least j of the literals are true, for
/// j = 1..n. Any assignment of the literals extends to a model of the
/// counter clauses, so conjunction preserves projected models.
struct CounterOutputs {
    std::vector<int> at_least;
};

CounterOutputs encode_counter(const std::vector<int>& lits, CnfFormula& cnf);

/// At-most-k over the literals via the sequential counter; k = 0 emits unit
/// negations and k >= n emits nothing.
void encode_at_most_k(const std::vector<int>& lits, int k, CnfFormula& cnf);

} // namespace satreconf
