#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "satreconf/system_model.hpp"

namespace satreconf {

/// One reconfiguration instance: the system model, the discretized state
/// observation and the observed input assignment, all over one vocabulary.
struct ReconfProblem {
    const SystemModel* sm = nullptr;
    QualitativeObservation observation;
    BinaryAssignment observed_inputs;
};

enum class ReconfOutcome { Success, NoReconfigurationExists };

struct ReconfResult {
    ReconfOutcome outcome = ReconfOutcome::NoReconfigurationExists;
    BinaryAssignment new_inputs;     // meaningful on Success
    std::vector<std::string> flips;  // input ids where new_inputs differs
    int bound_used = 0;              // cardinality bound at which SAT was found
};

struct ReconfOptions {
    uint64_t seed = 0;
    /// When set, the per-bound CNF instances are written here as
    /// <stem>_bound<k>.cnf for external cross-checking.
    std::optional<std::filesystem::path> dimacs_dir;
    std::string dimacs_stem = "reconf";
};

/// Full CNF for one cardinality bound (instantiated model, flip literals,
/// at-most-k); used for DIMACS export and external validation.
CnfFormula reconf_cnf(const ReconfProblem& p, int bound);

/// Ascending-bound search for a new input assignment: the cardinality bound
/// on flips starts at 1 and rises by one until the instantiated model is
/// satisfiable or the bound reaches |B|. On Success the returned assignment
/// is valid for the observation and flips as few inputs as possible; ties
/// between equally small flip sets are broken deterministically, preferring
/// component exchanges (they reset states into the valid interval, which
/// toggling alone cannot guarantee). NoReconfigurationExists means no input
/// assignment at all satisfies the instantiated model.
ReconfResult sat_reconf(const ReconfProblem& p, const ReconfOptions& opts = {});

/// Test oracle: true iff exhaustive enumeration finds no valid assignment
/// with fewer flips than the result uses. Requires |B| <= 20.
bool minimality_oracle(const ReconfProblem& p, const ReconfResult& r);

/// Enumeration check used by the oracle and tests: does any assignment with
/// exactly `flips` flips satisfy the instantiated model?
bool any_valid_with_flips(const ReconfProblem& p, int flips);

} // namespace satreconf
