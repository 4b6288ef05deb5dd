#pragma once

#include <string>
#include <vector>

#include "satreconf/hybrid_model.hpp"
#include "satreconf/interval_spec.hpp"

namespace satreconf {

/// Versioned model-parameter record shipped with each builder so scenario
/// outcomes are reproducible.
struct ModelParams {
    int version = 1;
    std::vector<std::pair<std::string, double>> entries;

    [[nodiscard]] double get(const std::string& key) const {
        for (const auto& [k, v] : entries)
            if (k == key)
                return v;
        throw ConfigError("unknown model parameter: " + key);
    }
};

/// A concrete tank plant: automaton, valid intervals, the states each spare
/// exchange resets, and the numeric parameter record.
struct TankSystem {
    std::string name; // "two-tank" or "three-tank"
    HybridAutomaton automaton;
    std::vector<IntervalSpec> intervals;
    ComponentStateMap component_states;
    ModelParams params;
    std::vector<std::string> tanks;

    /// All states at interval midpoints.
    [[nodiscard]] StateVector initial_state() const;

    /// Exchange flag for a tank ("T1" -> "ext_T1").
    [[nodiscard]] std::string exchange_flag_of(const std::string& tank) const;

    /// The tank's level state (the clamped state mapped to its flag).
    [[nodiscard]] std::string level_state_of(const std::string& tank) const;

    /// The tank's temperature state, empty if it has none.
    [[nodiscard]] std::string temp_state_of(const std::string& tank) const;

    /// Inputs in canonical order: automaton inputs then exchange flags.
    [[nodiscard]] std::vector<std::string> input_ids() const;

    [[nodiscard]] BinaryAssignment all_off_inputs() const;
};

/// Two connected tanks with fresh-water feed and supply valves v01, v10,
/// v02, v20, transfer pumps p12, p21, a heater on T1, a cooler on T2 and one
/// spare tank. Levels are held in [30,40] cm, T1 temperature in [65,75] degC
/// and T2 temperature in [10,20] degC.
TankSystem build_two_tank();

/// Three tanks in a feed chain: pumps p1, p2 fill T1 and T3, valves v12a,
/// v23a (mounted at 30 cm) and v12b, v23b (at 0 cm) feed the supply tank T2,
/// which serves a constant draw while the plant operates. One spare tank.
/// Levels are held in [10,20] cm.
TankSystem build_three_tank();

/// Lookup by system name; throws SchemaError for unknown names.
TankSystem build_system(const std::string& name);

} // namespace satreconf
