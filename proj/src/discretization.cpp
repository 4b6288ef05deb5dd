#include "satreconf/discretization.hpp"

#include <cmath>

namespace satreconf {

const char* qual_name(Qual q) {
    switch (q) {
    case Qual::Low:
        return "low";
    case Qual::Ok:
        return "ok";
    case Qual::High:
        return "high";
    }
    return "?";
}

std::string predicate_name(const std::string& state_id, Qual q) {
    return std::string(qual_name(q)) + "(" + state_id + ")";
}

QualitativeObservation discretize(const StateVector& observation,
                                  const std::vector<IntervalSpec>& specs) {
    QualitativeObservation q;
    q.state_ids = observation.ids;
    q.quals.reserve(observation.ids.size());
    for (size_t i = 0; i < observation.ids.size(); ++i) {
        double x = observation.values[i];
        if (!std::isfinite(x))
            throw NumericError("non-finite observation for state " + observation.ids[i]);
        const IntervalSpec* spec = nullptr;
        for (const auto& s : specs)
            if (s.state_id == observation.ids[i]) {
                spec = &s;
                break;
            }
        if (!spec)
            throw ConfigError("missing interval spec for state " + observation.ids[i]);
        if (x < spec->lb)
            q.quals.push_back(Qual::Low);
        else if (x > spec->ub)
            q.quals.push_back(Qual::High);
        else
            q.quals.push_back(Qual::Ok);
    }
    return q;
}

bool is_all_ok(const QualitativeObservation& q) {
    for (Qual v : q.quals)
        if (v != Qual::Ok)
            return false;
    return true;
}

std::vector<std::string> predicate_atoms(const std::vector<IntervalSpec>& specs) {
    std::vector<std::string> out;
    out.reserve(specs.size() * 3);
    for (const auto& s : specs) {
        out.push_back(predicate_name(s.state_id, Qual::Low));
        out.push_back(predicate_name(s.state_id, Qual::Ok));
        out.push_back(predicate_name(s.state_id, Qual::High));
    }
    return out;
}

} // namespace satreconf
