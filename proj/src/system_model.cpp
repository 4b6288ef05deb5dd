#include "satreconf/system_model.hpp"

#include <algorithm>

namespace satreconf {

std::shared_ptr<const Vocabulary> Vocabulary::for_system(const TankSystem& sys) {
    auto v = std::make_shared<Vocabulary>();
    for (const auto& name : predicate_atoms(sys.intervals))
        v->atoms.add(name);
    v->first_input_atom = v->atoms.size();
    for (const auto& iv : sys.intervals)
        v->state_ids.push_back(iv.state_id);
    v->input_ids = sys.input_ids();
    v->num_automaton_inputs = static_cast<int>(sys.automaton.automaton_inputs.size());
    for (const auto& in : v->input_ids)
        v->atoms.add(in);
    return v;
}

void SystemModel::add_constraint(ReconfConstraint c) {
    if (c.guard.empty())
        throw AuthoringError("constraint guard must name at least one predicate");
    for (int g : c.guard)
        if (!vocab_->is_pred_atom(g))
            throw AuthoringError("constraint guard must use predicate atoms only");
    for (int a : collect_atoms(c.consequence))
        if (!vocab_->is_input_atom(a))
            throw AuthoringError("constraint consequence must use input atoms only");
    constraints_.push_back(std::move(c));
}

FormulaPtr SystemModel::instantiate(const QualitativeObservation& q) const {
    // guard truth values are known, so each implication reduces to either
    // true or its consequence; the conjunction of surviving consequences has
    // the same models over the inputs as SM with the predicate unit facts
    std::vector<FormulaPtr> fired;
    for (const auto& c : constraints_) {
        bool holds = true;
        for (int g : c.guard) {
            auto [state_idx, qual] = vocab_->decode_pred(g);
            const std::string& sid = vocab_->state_ids[static_cast<size_t>(state_idx)];
            if (q.get(sid) != qual) {
                holds = false;
                break;
            }
        }
        if (holds)
            fired.push_back(c.consequence);
    }
    return f_and(std::move(fired));
}

bool SystemModel::check_validity(const Configuration& config,
                                 const QualitativeObservation& q) const {
    FormulaPtr ground = instantiate(q);
    std::vector<bool> by_atom(static_cast<size_t>(vocab_->atoms.size()), false);
    for (size_t i = 0; i < config.inputs.ids.size(); ++i)
        by_atom[static_cast<size_t>(vocab_->input_atom(config.inputs.ids[i]))] =
            config.inputs.values[i];
    return eval(ground, by_atom);
}

namespace {

struct Builder {
    SystemModel sm;
    const Vocabulary& v;

    explicit Builder(std::shared_ptr<const Vocabulary> vocab) : sm(vocab), v(*vocab) {}

    FormulaPtr in(const std::string& id) { return f_atom(v.input_atom(id)); }

    void rule(const std::vector<std::pair<std::string, Qual>>& guard, const FormulaPtr& rhs,
              std::string note) {
        ReconfConstraint c;
        for (const auto& [sid, q] : guard)
            c.guard.push_back(v.pred_atom(sid, q));
        c.consequence = rhs;
        c.note = std::move(note);
        sm.add_constraint(std::move(c));
    }

    /// One spare tank per system: when states of two different tanks are
    /// both outside their intervals, at most one of the two exchanges can
    /// be performed.
    void spare_limit(const std::vector<std::pair<std::string, std::string>>& tank_states,
                     const std::string& flag_a, const std::string& flag_b) {
        FormulaPtr not_both = f_not(f_and({in(flag_a), in(flag_b)}));
        for (const auto& [sa, sb] : tank_states) {
            for (Qual qa : {Qual::Low, Qual::High}) {
                for (Qual qb : {Qual::Low, Qual::High}) {
                    rule({{sa, qa}, {sb, qb}}, not_both,
                         "single spare tank: cannot exchange both " + flag_a.substr(4) + " and " +
                             flag_b.substr(4));
                }
            }
        }
    }
};

} // namespace

SystemModel build_two_tank_sm(std::shared_ptr<const Vocabulary> vocab) {
    Builder b(std::move(vocab));

    b.rule({{"x1_level", Qual::Low}}, f_and({b.in("ext_T1"), f_not(b.in("p12"))}),
           "T1 starved: swap in the filled spare; never pump out of a low tank");
    b.rule({{"x1_level", Qual::High}},
           f_and({f_or({b.in("p12"), b.in("ext_T1")}), f_not(b.in("p21"))}),
           "T1 overfull: divert surplus to T2 or swap the tank; no counter-fill");
    b.rule({{"x2_level", Qual::Low}}, f_and({b.in("ext_T2"), f_not(b.in("p21"))}),
           "T2 starved: swap in the filled spare; never pump out of a low tank");
    b.rule({{"x2_level", Qual::High}},
           f_and({f_or({b.in("p21"), b.in("ext_T2")}), f_not(b.in("p12"))}),
           "T2 overfull: divert surplus to T1 or swap the tank; no counter-fill");
    b.rule({{"x1_temp", Qual::Low}}, f_and({b.in("ext_T1"), f_not(b.in("p21"))}),
           "hot supply too cold: replace T1 (heater may be down); no cold ingress from T2");
    b.rule({{"x1_temp", Qual::High}}, b.in("ext_T1"), "hot supply overheated: replace T1");
    b.rule({{"x2_temp", Qual::Low}}, f_or({b.in("p12"), b.in("ext_T2")}),
           "cold supply too cold: warm transfer from T1 or replace T2");
    b.rule({{"x2_temp", Qual::High}}, f_and({b.in("ext_T2"), f_not(b.in("p12"))}),
           "cold supply overheated: replace T2 (cooler may be down); no warm ingress from T1");

    b.spare_limit({{"x1_level", "x2_level"},
                   {"x1_level", "x2_temp"},
                   {"x1_temp", "x2_level"},
                   {"x1_temp", "x2_temp"}},
                  "ext_T1", "ext_T2");
    return std::move(b.sm);
}

SystemModel build_three_tank_sm(std::shared_ptr<const Vocabulary> vocab) {
    Builder b(std::move(vocab));

    b.rule({{"x1", Qual::Low}}, f_or({f_not(b.in("v12b")), b.in("ext_T1")}),
           "T1 loses water through its drain path: close v12b or exchange T1");
    b.rule({{"x1", Qual::High}}, b.in("ext_T1"),
           "T1 overfull: no drain reaches the band from above; replace the tank");
    b.rule({{"x2", Qual::Low}}, f_and({b.in("ext_T2"), b.in("v12b")}),
           "supply tank starved: swap in the filled spare and keep its feed open");
    b.rule({{"x2", Qual::High}}, b.in("ext_T2"),
           "supply tank overfull: its draw is fixed, so replace the tank");
    b.rule({{"x3", Qual::Low}}, f_or({b.in("p2"), b.in("ext_T3")}),
           "T3 low: refill via its pump or replace the tank");
    b.rule({{"x3", Qual::High}}, b.in("ext_T3"),
           "T3 overfull: nothing drains it inside the band; replace the tank");

    b.spare_limit({{"x1", "x2"}}, "ext_T1", "ext_T2");
    b.spare_limit({{"x1", "x3"}}, "ext_T1", "ext_T3");
    b.spare_limit({{"x2", "x3"}}, "ext_T2", "ext_T3");
    return std::move(b.sm);
}

SystemModel build_sm(const std::string& system_name, std::shared_ptr<const Vocabulary> vocab) {
    if (system_name == "two-tank")
        return build_two_tank_sm(std::move(vocab));
    if (system_name == "three-tank")
        return build_three_tank_sm(std::move(vocab));
    throw SchemaError("unknown system: " + system_name);
}

} // namespace satreconf
