#include "satreconf/reconf.hpp"

#include <algorithm>
#include <fstream>

#include "satreconf/cardinality.hpp"
#include "satreconf/solver.hpp"
#include "satreconf/tseitin.hpp"

namespace satreconf {

namespace {

struct InstanceVars {
    std::vector<int> input_vars;   // solver var per input, canonical order
    std::vector<bool> observed;    // aligned observed values
    std::vector<int> flip_lits;
};

InstanceVars instance_vars(const ReconfProblem& p) {
    const Vocabulary& v = p.sm->vocab();
    InstanceVars iv;
    for (const auto& id : v.input_ids) {
        iv.input_vars.push_back(AtomTable::var_of(v.input_atom(id)));
        iv.observed.push_back(p.observed_inputs.get(id));
    }
    iv.flip_lits = encode_flip_literals(iv.input_vars, iv.observed);
    return iv;
}

bool eval_inputs(const FormulaPtr& ground, const Vocabulary& v, const std::vector<bool>& inputs) {
    std::vector<bool> by_atom(static_cast<size_t>(v.atoms.size()), false);
    for (size_t i = 0; i < inputs.size(); ++i)
        by_atom[static_cast<size_t>(v.first_input_atom) + i] = inputs[i];
    return eval(ground, by_atom);
}

// All index subsets of size k, in the deterministic preference order:
// more exchange flags first, then lexicographic.
std::vector<std::vector<int>> flip_sets(int n, int k, int first_exchange) {
    std::vector<std::vector<int>> sets;
    std::vector<int> comb(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i)
        comb[static_cast<size_t>(i)] = i;
    if (k == 0) {
        sets.push_back({});
        return sets;
    }
    for (;;) {
        sets.push_back(comb);
        int i = k - 1;
        while (i >= 0 && comb[static_cast<size_t>(i)] == n - k + i)
            --i;
        if (i < 0)
            break;
        ++comb[static_cast<size_t>(i)];
        for (int j = i + 1; j < k; ++j)
            comb[static_cast<size_t>(j)] = comb[static_cast<size_t>(j) - 1] + 1;
    }
    std::stable_sort(sets.begin(), sets.end(),
                     [&](const std::vector<int>& a, const std::vector<int>& b) {
                         auto exch = [&](const std::vector<int>& s) {
                             int c = 0;
                             for (int i : s)
                                 c += i >= first_exchange ? 1 : 0;
                             return c;
                         };
                         int ea = exch(a), eb = exch(b);
                         if (ea != eb)
                             return ea > eb;
                         return a < b;
                     });
    return sets;
}

} // namespace

CnfFormula reconf_cnf(const ReconfProblem& p, int bound) {
    const Vocabulary& v = p.sm->vocab();
    FormulaPtr ground = p.sm->instantiate(p.observation);
    CnfFormula cnf;
    tseitin_add(ground, cnf, v.atoms.size());
    InstanceVars iv = instance_vars(p);
    encode_at_most_k(iv.flip_lits, bound, cnf);
    return cnf;
}

ReconfResult sat_reconf(const ReconfProblem& p, const ReconfOptions& opts) {
    const Vocabulary& v = p.sm->vocab();
    FormulaPtr ground = p.sm->instantiate(p.observation);
    InstanceVars iv = instance_vars(p);
    const int num_inputs = static_cast<int>(iv.input_vars.size());

    CnfFormula cnf;
    tseitin_add(ground, cnf, v.atoms.size());
    CounterOutputs counter = encode_counter(iv.flip_lits, cnf);
    Solver solver(cnf, opts.seed);

    int found_bound = -1;
    for (int bound = 1; bound <= num_inputs; ++bound) {
        if (opts.dimacs_dir) {
            std::filesystem::create_directories(*opts.dimacs_dir);
            std::ofstream out(*opts.dimacs_dir /
                              (opts.dimacs_stem + "_bound" + std::to_string(bound) + ".cnf"));
            out << reconf_cnf(p, bound).to_dimacs();
        }
        std::vector<int> assumptions;
        if (bound < num_inputs)
            assumptions.push_back(-counter.at_least[static_cast<size_t>(bound)]);
        if (solver.solve(assumptions) == Solver::Result::Sat) {
            found_bound = bound;
            break;
        }
    }

    ReconfResult res;
    if (found_bound < 0) {
        res.outcome = ReconfOutcome::NoReconfigurationExists;
        res.bound_used = num_inputs;
        return res;
    }

    // The bound certifies the minimum flip count; pick the assignment at
    // that count deterministically, trying smaller counts first because the
    // first satisfiable bound still admits them.
    for (int k = 0; k <= found_bound; ++k) {
        for (const auto& set : flip_sets(num_inputs, k, p.observed_inputs.num_automaton_inputs)) {
            std::vector<bool> candidate = iv.observed;
            for (int idx : set)
                candidate[static_cast<size_t>(idx)] = !candidate[static_cast<size_t>(idx)];
            if (!eval_inputs(ground, v, candidate))
                continue;
            res.outcome = ReconfOutcome::Success;
            res.new_inputs = p.observed_inputs;
            res.new_inputs.values = candidate;
            for (int idx : set)
                res.flips.push_back(p.observed_inputs.ids[static_cast<size_t>(idx)]);
            res.bound_used = found_bound;
            return res;
        }
    }
    throw SolverContractError("solver reported SAT but no valid assignment was found");
}

bool any_valid_with_flips(const ReconfProblem& p, int flips) {
    const Vocabulary& v = p.sm->vocab();
    const int n = static_cast<int>(v.input_ids.size());
    if (n > 20)
        throw OracleScopeError("enumeration oracle limited to 20 inputs");
    FormulaPtr ground = p.sm->instantiate(p.observation);
    InstanceVars iv = instance_vars(p);
    for (const auto& set : flip_sets(n, flips, p.observed_inputs.num_automaton_inputs)) {
        std::vector<bool> candidate = iv.observed;
        for (int idx : set)
            candidate[static_cast<size_t>(idx)] = !candidate[static_cast<size_t>(idx)];
        if (eval_inputs(ground, v, candidate))
            return true;
    }
    return false;
}

bool minimality_oracle(const ReconfProblem& p, const ReconfResult& r) {
    if (r.outcome != ReconfOutcome::Success)
        throw SolverContractError("minimality oracle requires a Success result");
    for (int k = 0; k < static_cast<int>(r.flips.size()); ++k)
        if (any_valid_with_flips(p, k))
            return false;
    return true;
}

} // namespace satreconf
