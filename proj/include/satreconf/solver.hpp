#pragma once

#include <cstdint>
#include <vector>

#include "satreconf/cnf.hpp"

namespace satreconf {

/// Conflict-driven clause learning solver: two-watched-literal propagation,
/// first-UIP learning with non-chronological backjumping, phase saving and
/// additive variable activities. Restarts are off; instances here are small
/// and determinism matters more than raw speed. A solver instance owns
/// mutable state and is single-threaded; independent instances may run in
/// parallel.
class Solver {
public:
    enum class Result { Sat, Unsat };

    /// The seed selects the heuristic tie-breaking stream. The current
    /// heuristics are fully deterministic, so the seed only tags the run.
    explicit Solver(const CnfFormula& f, uint64_t seed = 0);

    /// Decide satisfiability under the given assumption literals.
    /// Callable repeatedly; learned clauses persist between calls.
    Result solve(const std::vector<int>& assumptions = {});

    /// Model of the last Sat result. Verified clause-by-clause internally
    /// before solve() returns.
    [[nodiscard]] const Model& model() const { return model_; }

    [[nodiscard]] uint64_t conflicts() const { return conflicts_; }
    [[nodiscard]] uint64_t decisions() const { return decisions_; }

private:
    // literal encoding for watch lists: 2v for +v, 2v+1 for -v
    static size_t widx(int lit) {
        int v = lit > 0 ? lit : -lit;
        return static_cast<size_t>(2 * v + (lit < 0 ? 1 : 0));
    }

    [[nodiscard]] int value_of(int lit) const {
        int v = lit > 0 ? lit : -lit;
        int8_t a = value_[static_cast<size_t>(v)];
        return lit > 0 ? a : static_cast<int8_t>(-a);
    }

    [[nodiscard]] int decision_level() const { return static_cast<int>(trail_lim_.size()); }

    void enqueue(int lit, int reason_clause);
    int propagate(); // returns conflicting clause index or -1
    void analyze(int confl, std::vector<int>& learnt, int& bt_level);
    void cancel_until(int level);
    void new_decision_level() { trail_lim_.push_back(static_cast<int>(trail_.size())); }
    int pick_branch_var();
    void bump(int var);
    void decay();
    int attach_clause(std::vector<int> lits); // >= 2 literals

    CnfFormula input_;
    bool ok_ = true;

    std::vector<std::vector<int>> clauses_; // problem + learned, >= 2 lits each
    std::vector<std::vector<int>> watches_;
    std::vector<int8_t> value_;   // 0 undef, 1 true, -1 false (indexed by var)
    std::vector<int> level_;
    std::vector<int> reason_;     // clause index or -1
    std::vector<bool> polarity_;  // saved phase
    std::vector<double> activity_;
    std::vector<int8_t> seen_;
    std::vector<int> trail_;
    std::vector<int> trail_lim_;
    size_t qhead_ = 0;
    double var_inc_ = 1.0;

    Model model_;
    uint64_t conflicts_ = 0;
    uint64_t decisions_ = 0;
    uint64_t seed_ = 0;
};

/// Complete satisfiability decision.
Solver::Result sat(const CnfFormula& f);

/// Satisfying assignment; throws SolverContractError if f is unsatisfiable.
Model assign(const CnfFormula& f);

} // namespace satreconf
