#include "satreconf/hybrid_model.hpp"

#include <algorithm>
#include <cmath>

namespace satreconf {

StateVector step(const HybridAutomaton& a, const Mode& mode, const StateVector& x, double dt) {
    if (!(dt > 0.0))
        throw ModelError("step requires dt > 0");
    if (mode.values.size() != a.automaton_inputs.size())
        throw ModelError("mode does not match the automaton's input declaration");
    if (x.ids.size() != a.states.size())
        throw ModelError("state vector does not match the automaton's state declaration");

    std::vector<double> dx = a.flow(mode, x);
    if (dx.size() != x.values.size())
        throw ModelError("flow function returned wrong arity");

    StateVector out = x;
    for (size_t i = 0; i < out.values.size(); ++i) {
        if (!std::isfinite(dx[i]))
            throw NumericError("non-finite derivative for state " + x.ids[i]);
        out.values[i] = x.values[i] + dt * dx[i];
        if (a.states[i].clamp_at_zero && out.values[i] < 0.0)
            out.values[i] = 0.0;
    }
    return out;
}

std::pair<Mode, StateVector> apply_event(const HybridAutomaton& a, const Event& e,
                                         const Mode& mode, const StateVector& x) {
    // validates the event is declared
    a.event(e.id);
    int idx = a.input_index(e.target_input);
    Mode out = mode;
    out.values[static_cast<size_t>(idx)] = !out.values[static_cast<size_t>(idx)];
    return {out, x};
}

std::pair<Mode, StateVector> apply_exchange(const HybridAutomaton& a,
                                            const std::string& exchange_flag, const Mode& mode,
                                            const StateVector& x,
                                            const std::vector<IntervalSpec>& intervals,
                                            const ComponentStateMap& component_states) {
    if (std::find(a.exchange_flags.begin(), a.exchange_flags.end(), exchange_flag) ==
        a.exchange_flags.end())
        throw ModelError("undeclared exchange flag: " + exchange_flag);
    auto it = component_states.find(exchange_flag);
    if (it == component_states.end() || it->second.empty())
        throw ModelError("exchange flag has no mapped states: " + exchange_flag);

    StateVector out = x;
    for (const auto& sid : it->second) {
        const IntervalSpec* spec = nullptr;
        for (const auto& s : intervals)
            if (s.state_id == sid) {
                spec = &s;
                break;
            }
        if (!spec)
            throw ConfigError("no interval spec for state " + sid);
        out.set(sid, spec->midpoint());
    }
    return {mode, out};
}

} // namespace satreconf
