#include "satreconf/tank_systems.hpp"

#include <algorithm>
#include <cmath>

namespace satreconf {

StateVector TankSystem::initial_state() const {
    StateVector s;
    for (const auto& d : automaton.states) {
        s.ids.push_back(d.id);
        const IntervalSpec* spec = nullptr;
        for (const auto& iv : intervals)
            if (iv.state_id == d.id)
                spec = &iv;
        if (!spec)
            throw ConfigError("no interval spec for state " + d.id);
        s.values.push_back(spec->midpoint());
    }
    return s;
}

std::string TankSystem::exchange_flag_of(const std::string& tank) const {
    std::string flag = "ext_" + tank;
    if (component_states.find(flag) == component_states.end())
        throw ModelError("unknown tank: " + tank);
    return flag;
}

std::string TankSystem::level_state_of(const std::string& tank) const {
    for (const auto& sid : component_states.at(exchange_flag_of(tank))) {
        if (automaton.states[static_cast<size_t>(automaton.state_index(sid))].clamp_at_zero)
            return sid;
    }
    throw ModelError("tank has no level state: " + tank);
}

std::string TankSystem::temp_state_of(const std::string& tank) const {
    for (const auto& sid : component_states.at(exchange_flag_of(tank))) {
        if (!automaton.states[static_cast<size_t>(automaton.state_index(sid))].clamp_at_zero)
            return sid;
    }
    return {};
}

std::vector<std::string> TankSystem::input_ids() const {
    std::vector<std::string> ids = automaton.automaton_inputs;
    ids.insert(ids.end(), automaton.exchange_flags.begin(), automaton.exchange_flags.end());
    return ids;
}

BinaryAssignment TankSystem::all_off_inputs() const {
    BinaryAssignment b;
    b.ids = input_ids();
    b.values.assign(b.ids.size(), false);
    b.num_automaton_inputs = static_cast<int>(automaton.automaton_inputs.size());
    return b;
}

namespace {

std::vector<Event> toggle_events(const std::vector<std::string>& inputs) {
    std::vector<Event> evs;
    evs.reserve(inputs.size());
    for (const auto& in : inputs)
        evs.push_back(Event{"toggle_" + in, in});
    return evs;
}

} // namespace

TankSystem build_two_tank() {
    TankSystem sys;
    sys.name = "two-tank";
    sys.tanks = {"T1", "T2"};
    sys.params.version = 1;
    sys.params.entries = {
        {"feed_rate_cm_per_s", 0.5},     // v01 / v02, pressurized fresh-water feed
        {"outlet_coeff_per_s", 0.012},   // v10 / v20, flow = k * level
        {"pump_rate_cm_per_s", 0.25},    // p12 / p21 transfer
        {"feed_temp_degC", 25.0},
        {"heater_setpoint_degC", 70.0},  // thermostat on T1
        {"heater_power_degC_per_s", 1.0},
        {"cooler_setpoint_degC", 15.0},  // thermostat on T2
        {"cooler_power_degC_per_s", 0.3},
        {"tank_area_m2", 1.0},
    };

    sys.automaton.states = {
        {"x1_level", "cm", true},
        {"x1_temp", "degC", false},
        {"x2_level", "cm", true},
        {"x2_temp", "degC", false},
    };
    sys.automaton.automaton_inputs = {"v01", "v10", "v02", "v20", "p12", "p21"};
    sys.automaton.exchange_flags = {"ext_T1", "ext_T2"};
    sys.automaton.events = toggle_events(sys.automaton.automaton_inputs);

    sys.intervals = {
        IntervalSpec("x1_level", 30.0, 40.0, "cm"),
        IntervalSpec("x1_temp", 65.0, 75.0, "degC"),
        IntervalSpec("x2_level", 30.0, 40.0, "cm"),
        IntervalSpec("x2_temp", 10.0, 20.0, "degC"),
    };
    sys.component_states = {
        {"ext_T1", {"x1_level", "x1_temp"}},
        {"ext_T2", {"x2_level", "x2_temp"}},
    };

    const double feed = sys.params.get("feed_rate_cm_per_s");
    const double k_out = sys.params.get("outlet_coeff_per_s");
    const double pump = sys.params.get("pump_rate_cm_per_s");
    const double feed_t = sys.params.get("feed_temp_degC");
    const double heat_set = sys.params.get("heater_setpoint_degC");
    const double heat_pow = sys.params.get("heater_power_degC_per_s");
    const double cool_set = sys.params.get("cooler_setpoint_degC");
    const double cool_pow = sys.params.get("cooler_power_degC_per_s");

    sys.automaton.flow = [=](const Mode& m, const StateVector& s) {
        const double L1 = s.values[0], T1 = s.values[1];
        const double L2 = s.values[2], T2 = s.values[3];
        const bool v01 = m.values[0], v10 = m.values[1];
        const bool v02 = m.values[2], v20 = m.values[3];
        const bool p12 = m.values[4], p21 = m.values[5];

        const double in1 = v01 ? feed : 0.0;
        const double out1 = v10 ? k_out * std::max(L1, 0.0) : 0.0;
        const double in2 = v02 ? feed : 0.0;
        const double out2 = v20 ? k_out * std::max(L2, 0.0) : 0.0;
        const double t12 = (p12 && L1 > 0.0) ? pump : 0.0;
        const double t21 = (p21 && L2 > 0.0) ? pump : 0.0;

        const double dL1 = in1 - out1 - t12 + t21;
        const double dL2 = in2 - out2 + t12 - t21;

        // ideal mixing of inflow streams; the outflow leaves at tank temperature
        const double m1 = std::max(L1, 1.0);
        const double m2 = std::max(L2, 1.0);
        double dT1 = (in1 * (feed_t - T1) + t21 * (T2 - T1)) / m1;
        double dT2 = (in2 * (feed_t - T2) + t12 * (T1 - T2)) / m2;
        if (T1 < heat_set)
            dT1 += heat_pow; // thermostat heater on T1
        if (T2 > cool_set)
            dT2 -= cool_pow; // thermostat cooler on T2

        return std::vector<double>{dL1, dT1, dL2, dT2};
    };
    return sys;
}

TankSystem build_three_tank() {
    TankSystem sys;
    sys.name = "three-tank";
    sys.tanks = {"T1", "T2", "T3"};
    sys.params.version = 1;
    sys.params.entries = {
        {"pump_rate_cm_per_s", 0.8},    // p1 -> T1, p2 -> T3
        {"lower_valve_coeff_per_s", 0.045},
        {"upper_valve_coeff_per_s", 0.045},
        {"upper_valve_height_cm", 30.0},
        {"supply_draw_cm_per_s", 0.55}, // drawn from T2 while the plant operates
        {"tank_area_m2", 1.0},
    };

    sys.automaton.states = {
        {"x1", "cm", true},
        {"x2", "cm", true},
        {"x3", "cm", true},
    };
    sys.automaton.automaton_inputs = {"p1", "p2", "v12a", "v12b", "v23a", "v23b"};
    sys.automaton.exchange_flags = {"ext_T1", "ext_T2", "ext_T3"};
    sys.automaton.events = toggle_events(sys.automaton.automaton_inputs);

    sys.intervals = {
        IntervalSpec("x1", 10.0, 20.0, "cm"),
        IntervalSpec("x2", 10.0, 20.0, "cm"),
        IntervalSpec("x3", 10.0, 20.0, "cm"),
    };
    sys.component_states = {
        {"ext_T1", {"x1"}},
        {"ext_T2", {"x2"}},
        {"ext_T3", {"x3"}},
    };

    const double pump = sys.params.get("pump_rate_cm_per_s");
    const double k_low = sys.params.get("lower_valve_coeff_per_s");
    const double k_up = sys.params.get("upper_valve_coeff_per_s");
    const double h_up = sys.params.get("upper_valve_height_cm");
    const double draw = sys.params.get("supply_draw_cm_per_s");

    sys.automaton.flow = [=](const Mode& m, const StateVector& s) {
        const double x1 = s.values[0], x2 = s.values[1], x3 = s.values[2];
        const bool p1 = m.values[0], p2 = m.values[1];
        const bool v12a = m.values[2], v12b = m.values[3];
        const bool v23a = m.values[4], v23b = m.values[5];

        const double f12b = v12b ? k_low * std::max(x1, 0.0) : 0.0;
        const double f12a = v12a ? k_up * std::max(x1 - h_up, 0.0) : 0.0;
        const double f23b = v23b ? k_low * std::max(x3, 0.0) : 0.0;
        const double f23a = v23a ? k_up * std::max(x3 - h_up, 0.0) : 0.0;

        // the downstream draw from T2 runs only while some actuator is
        // engaged; an idle plant is isolated
        bool operating = false;
        for (bool b : m.values)
            operating = operating || b;
        const double demand = (operating && x2 > 0.0) ? draw : 0.0;

        const double dx1 = (p1 ? pump : 0.0) - f12b - f12a;
        const double dx2 = f12b + f12a + f23b + f23a - demand;
        const double dx3 = (p2 ? pump : 0.0) - f23b - f23a;
        return std::vector<double>{dx1, dx2, dx3};
    };
    return sys;
}

TankSystem build_system(const std::string& name) {
    if (name == "two-tank")
        return build_two_tank();
    if (name == "three-tank")
        return build_three_tank();
    throw SchemaError("unknown system: " + name + " (expected two-tank or three-tank)");
}

} // namespace satreconf
