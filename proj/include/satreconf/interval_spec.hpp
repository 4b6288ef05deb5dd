#pragma once

#include <string>

#include "satreconf/errors.hpp"

namespace satreconf {

/// Valid-range bounds for one state, in the state's own unit.
struct IntervalSpec {
    std::string state_id;
    double lb = 0.0;
    double ub = 0.0;
    std::string unit;

    IntervalSpec() = default;
    IntervalSpec(std::string id, double lo, double hi, std::string u = {})
        : state_id(std::move(id)), lb(lo), ub(hi), unit(std::move(u)) {
        if (!(lb < ub))
            throw ConfigError("interval spec requires lb < ub for " + state_id);
    }

    [[nodiscard]] double midpoint() const { return 0.5 * (lb + ub); }
};

} // namespace satreconf
