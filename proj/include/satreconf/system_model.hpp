#pragma once

#include <memory>
#include <string>
#include <vector>

#include "satreconf/discretization.hpp"
#include "satreconf/formula.hpp"
#include "satreconf/tank_systems.hpp"

namespace satreconf {

/// Shared atom numbering for one system: predicate atoms low/ok/high per
/// state first, then input atoms (automaton inputs, then exchange flags).
/// Every module that touches propositional variables goes through this
/// table, so variable numbering cannot drift between them.
struct Vocabulary {
    AtomTable atoms;
    std::vector<std::string> state_ids;
    std::vector<std::string> input_ids; // B^H then B^EXT
    int first_input_atom = 0;
    int num_automaton_inputs = 0;

    static std::shared_ptr<const Vocabulary> for_system(const TankSystem& sys);

    [[nodiscard]] int pred_atom(const std::string& state_id, Qual q) const {
        return atoms.id(predicate_name(state_id, q));
    }
    [[nodiscard]] int input_atom(const std::string& input_id) const { return atoms.id(input_id); }
    [[nodiscard]] bool is_pred_atom(int id) const { return id >= 0 && id < first_input_atom; }
    [[nodiscard]] bool is_input_atom(int id) const {
        return id >= first_input_atom && id < atoms.size();
    }
    [[nodiscard]] bool is_exchange_atom(int id) const {
        return id >= first_input_atom + num_automaton_inputs && id < atoms.size();
    }
    /// Decode a predicate atom id into (state index, qual).
    [[nodiscard]] std::pair<int, Qual> decode_pred(int id) const {
        return {id / 3, static_cast<Qual>(id % 3)};
    }
};

/// One implication: a conjunction of qualitative predicates entails a
/// formula over the binary inputs. The note records the physical rationale
/// and is serialized with the model document.
struct ReconfConstraint {
    std::vector<int> guard;  // predicate atom ids
    FormulaPtr consequence;  // over input atoms
    std::string note;
};

/// The reconfiguration system model: a pure conjunction of guarded
/// implications. Immutable in use; all queries are const and thread-safe.
class SystemModel {
public:
    explicit SystemModel(std::shared_ptr<const Vocabulary> vocab) : vocab_(std::move(vocab)) {}

    /// Append a constraint. Guards must use predicate atoms only and
    /// consequences input atoms only; violations raise AuthoringError.
    void add_constraint(ReconfConstraint c);

    [[nodiscard]] const std::vector<ReconfConstraint>& constraints() const { return constraints_; }
    [[nodiscard]] const Vocabulary& vocab() const { return *vocab_; }
    [[nodiscard]] std::shared_ptr<const Vocabulary> vocab_ptr() const { return vocab_; }

    /// Ground the model under an observation: guards are evaluated against
    /// the predicate truth values, and the conjunction of the consequences
    /// of the firing guards is returned. Its models, projected onto input
    /// atoms, are exactly the valid input assignments for this observation.
    [[nodiscard]] FormulaPtr instantiate(const QualitativeObservation& q) const;

    /// Valid iff the instantiated formula is satisfiable with every input
    /// pinned to the configuration's value; with all inputs pinned that is
    /// plain evaluation.
    [[nodiscard]] bool check_validity(const Configuration& config,
                                      const QualitativeObservation& q) const;

private:
    std::shared_ptr<const Vocabulary> vocab_;
    std::vector<ReconfConstraint> constraints_;
};

/// Constraint sets for the shipped plants. Each constraint carries its
/// physical rationale; both sets include one guarded spare-limit constraint
/// per tank pair because each system has a single spare tank.
SystemModel build_two_tank_sm(std::shared_ptr<const Vocabulary> vocab);
SystemModel build_three_tank_sm(std::shared_ptr<const Vocabulary> vocab);

/// Builder for whichever system the vocabulary was made for.
SystemModel build_sm(const std::string& system_name, std::shared_ptr<const Vocabulary> vocab);

} // namespace satreconf
