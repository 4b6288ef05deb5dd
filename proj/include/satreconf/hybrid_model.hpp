#pragma once

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "satreconf/errors.hpp"
#include "satreconf/interval_spec.hpp"

namespace satreconf {

/// Declaration of one continuous state. Levels clamp at zero (a tank cannot
/// hold negative water); temperatures do not.
struct StateDecl {
    std::string id;
    std::string unit; // "cm" or "degC"
    bool clamp_at_zero = false;
};

/// Real-valued observation of every declared state, in declaration order.
struct StateVector {
    std::vector<std::string> ids;
    std::vector<double> values;

    [[nodiscard]] int index_of(const std::string& id) const {
        for (size_t i = 0; i < ids.size(); ++i)
            if (ids[i] == id)
                return static_cast<int>(i);
        throw ModelError("undeclared state: " + id);
    }
    [[nodiscard]] double get(const std::string& id) const {
        return values[static_cast<size_t>(index_of(id))];
    }
    void set(const std::string& id, double v) { values[static_cast<size_t>(index_of(id))] = v; }

    bool operator==(const StateVector&) const = default;
};

/// Truth assignment to all binary inputs B = B^H u B^EXT. The first
/// num_automaton_inputs ids are the automaton inputs, the rest exchange
/// flags; every input appears exactly once.
struct BinaryAssignment {
    std::vector<std::string> ids;
    std::vector<bool> values;
    int num_automaton_inputs = 0;

    [[nodiscard]] int index_of(const std::string& id) const {
        for (size_t i = 0; i < ids.size(); ++i)
            if (ids[i] == id)
                return static_cast<int>(i);
        throw ModelError("undeclared input: " + id);
    }
    [[nodiscard]] bool get(const std::string& id) const {
        return values[static_cast<size_t>(index_of(id))];
    }
    void set(const std::string& id, bool v) { values[static_cast<size_t>(index_of(id))] = v; }
    [[nodiscard]] bool is_exchange_flag(const std::string& id) const {
        return index_of(id) >= num_automaton_inputs;
    }

    bool operator==(const BinaryAssignment&) const = default;
};

/// Paired observation of states and inputs of one system.
struct Configuration {
    StateVector states;
    BinaryAssignment inputs;
};

/// A mode is a truth assignment to the automaton inputs B^H; its id is
/// uniquely determined by that combination.
struct Mode {
    std::vector<bool> values; // aligned with HybridAutomaton::automaton_inputs

    [[nodiscard]] std::string id(const std::vector<std::string>& input_ids) const {
        std::string s;
        for (size_t i = 0; i < values.size(); ++i) {
            if (i)
                s += ',';
            s += input_ids[i] + (values[i] ? "=1" : "=0");
        }
        return s;
    }
    bool operator==(const Mode&) const = default;
};

/// Discrete event toggling one automaton input.
struct Event {
    std::string id;
    std::string target_input; // in B^H
};

/// Map from exchange flag to the states reset when that component is
/// replaced by the spare.
using ComponentStateMap = std::map<std::string, std::vector<std::string>>;

/// Hybrid automaton over binary inputs and continuous states. The flow
/// function returns per-state time derivatives for a mode; modes are input
/// combinations, so every mode is covered by construction. Declarations are
/// immutable after construction and safe to share across threads.
struct HybridAutomaton {
    std::vector<StateDecl> states;
    std::vector<std::string> automaton_inputs; // B^H
    std::vector<std::string> exchange_flags;   // B^EXT
    std::vector<Event> events;                 // one per automaton input
    std::function<std::vector<double>(const Mode&, const StateVector&)> flow;

    [[nodiscard]] int state_index(const std::string& id) const {
        for (size_t i = 0; i < states.size(); ++i)
            if (states[i].id == id)
                return static_cast<int>(i);
        throw ModelError("undeclared state: " + id);
    }
    [[nodiscard]] int input_index(const std::string& id) const {
        for (size_t i = 0; i < automaton_inputs.size(); ++i)
            if (automaton_inputs[i] == id)
                return static_cast<int>(i);
        throw ModelError("undeclared automaton input: " + id);
    }
    [[nodiscard]] const Event& event(const std::string& id) const {
        for (const auto& e : events)
            if (e.id == id)
                return e;
        throw ModelError("undeclared event: " + id);
    }
    [[nodiscard]] const Event& event_for_input(const std::string& input_id) const {
        for (const auto& e : events)
            if (e.target_input == input_id)
                return e;
        throw ModelError("no event toggles input: " + input_id);
    }
    [[nodiscard]] Mode all_off_mode() const {
        return Mode{std::vector<bool>(automaton_inputs.size(), false)};
    }
};

/// Explicit-Euler update x + dt * f_mode(x); level states are clamped at 0.
StateVector step(const HybridAutomaton& a, const Mode& mode, const StateVector& x, double dt);

/// Toggle the event's target input; the state vector passes through
/// unchanged. Applying the same event twice restores the original mode.
std::pair<Mode, StateVector> apply_event(const HybridAutomaton& a, const Event& e,
                                         const Mode& mode, const StateVector& x);

/// Replace the component behind an exchange flag: the mode is unchanged and
/// each state owned by the component is reset to the midpoint of its valid
/// interval. All other states are untouched.
std::pair<Mode, StateVector> apply_exchange(const HybridAutomaton& a,
                                            const std::string& exchange_flag, const Mode& mode,
                                            const StateVector& x,
                                            const std::vector<IntervalSpec>& intervals,
                                            const ComponentStateMap& component_states);

} // namespace satreconf
