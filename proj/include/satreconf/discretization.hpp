#pragma once

#include <string>
#include <vector>

#include "satreconf/atoms.hpp"
#include "satreconf/hybrid_model.hpp"
#include "satreconf/interval_spec.hpp"

namespace satreconf {

enum class Qual { Low, Ok, High };

const char* qual_name(Qual q);

/// Predicate atom name for a (state, qualitative value) pair, e.g. low(x1).
std::string predicate_name(const std::string& state_id, Qual q);

/// Truth assignment over the low/ok/high predicates: exactly one per state.
struct QualitativeObservation {
    std::vector<std::string> state_ids;
    std::vector<Qual> quals;

    [[nodiscard]] Qual get(const std::string& id) const {
        for (size_t i = 0; i < state_ids.size(); ++i)
            if (state_ids[i] == id)
                return quals[i];
        throw ConfigError("no qualitative value for state: " + id);
    }
    bool operator==(const QualitativeObservation&) const = default;
};

/// Interval discretization: x < lb maps to low, lb <= x <= ub to ok (bounds
/// inclusive), x > ub to high. Pure function of the observation.
QualitativeObservation discretize(const StateVector& observation,
                                  const std::vector<IntervalSpec>& specs);

/// True iff every state's ok predicate holds; the harness recovery criterion.
bool is_all_ok(const QualitativeObservation& q);

/// Deterministic predicate atom list: per spec in order, low then ok then
/// high. Stable across runs for identical specs.
std::vector<std::string> predicate_atoms(const std::vector<IntervalSpec>& specs);

} // namespace satreconf
