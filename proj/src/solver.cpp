#include "satreconf/solver.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

namespace satreconf {

Solver::Solver(const CnfFormula& f, uint64_t seed) : input_(f), seed_(seed) {
    size_t n = static_cast<size_t>(f.num_vars);
    value_.assign(n + 1, 0);
    level_.assign(n + 1, 0);
    reason_.assign(n + 1, -1);
    polarity_.assign(n + 1, false);
    activity_.assign(n + 1, 0.0);
    seen_.assign(n + 1, 0);
    watches_.assign(2 * n + 2, {});

    for (const auto& c : f.clauses) {
        if (!ok_)
            break;
        if (c.empty()) {
            ok_ = false;
        } else if (c.size() == 1) {
            if (value_of(c[0]) == -1)
                ok_ = false;
            else if (value_of(c[0]) == 0)
                enqueue(c[0], -1);
        } else {
            attach_clause(c);
        }
    }
}

int Solver::attach_clause(std::vector<int> lits) {
    int ci = static_cast<int>(clauses_.size());
    watches_[widx(lits[0])].push_back(ci);
    watches_[widx(lits[1])].push_back(ci);
    clauses_.push_back(std::move(lits));
    return ci;
}

void Solver::enqueue(int lit, int reason_clause) {
    int v = std::abs(lit);
    value_[static_cast<size_t>(v)] = lit > 0 ? 1 : -1;
    level_[static_cast<size_t>(v)] = decision_level();
    reason_[static_cast<size_t>(v)] = reason_clause;
    trail_.push_back(lit);
}

int Solver::propagate() {
    while (qhead_ < trail_.size()) {
        int p = trail_[qhead_++];
        int false_lit = -p;
        auto& ws = watches_[widx(false_lit)];
        size_t i = 0, j = 0;
        while (i < ws.size()) {
            int ci = ws[i];
            auto& c = clauses_[static_cast<size_t>(ci)];
            if (c[0] == false_lit)
                std::swap(c[0], c[1]);
            if (value_of(c[0]) == 1) { // clause already satisfied
                ws[j++] = ws[i++];
                continue;
            }
            bool moved = false;
            for (size_t k = 2; k < c.size(); ++k) {
                if (value_of(c[k]) != -1) {
                    std::swap(c[1], c[k]);
                    watches_[widx(c[1])].push_back(ci);
                    moved = true;
                    break;
                }
            }
            if (moved) {
                ++i; // watch moved elsewhere, drop from this list
                continue;
            }
            ws[j++] = ws[i++];
            if (value_of(c[0]) == -1) { // conflict
                while (i < ws.size())
                    ws[j++] = ws[i++];
                ws.resize(j);
                qhead_ = trail_.size();
                return ci;
            }
            enqueue(c[0], ci);
        }
        ws.resize(j);
    }
    return -1;
}

void Solver::bump(int var) {
    activity_[static_cast<size_t>(var)] += var_inc_;
    if (activity_[static_cast<size_t>(var)] > 1e100) {
        for (auto& a : activity_)
            a *= 1e-100;
        var_inc_ *= 1e-100;
    }
}

void Solver::decay() { var_inc_ /= 0.95; }

void Solver::analyze(int confl, std::vector<int>& learnt, int& bt_level) {
    learnt.clear();
    learnt.push_back(0); // reserved for the asserting literal
    int path = 0;
    int p = 0;
    int index = static_cast<int>(trail_.size()) - 1;
    std::vector<int> to_clear;

    do {
        const auto& c = clauses_[static_cast<size_t>(confl)];
        for (int q : c) {
            if (q == p)
                continue;
            int v = std::abs(q);
            if (!seen_[static_cast<size_t>(v)] && level_[static_cast<size_t>(v)] > 0) {
                seen_[static_cast<size_t>(v)] = 1;
                to_clear.push_back(v);
                bump(v);
                if (level_[static_cast<size_t>(v)] >= decision_level())
                    ++path;
                else
                    learnt.push_back(q);
            }
        }
        while (!seen_[static_cast<size_t>(std::abs(trail_[static_cast<size_t>(index)]))])
            --index;
        p = trail_[static_cast<size_t>(index)];
        --index;
        confl = reason_[static_cast<size_t>(std::abs(p))];
        seen_[static_cast<size_t>(std::abs(p))] = 0;
        --path;
    } while (path > 0);
    learnt[0] = -p;

    if (learnt.size() == 1) {
        bt_level = 0;
    } else {
        // move the literal with the highest level to position 1
        size_t max_i = 1;
        for (size_t k = 2; k < learnt.size(); ++k) {
            if (level_[static_cast<size_t>(std::abs(learnt[k]))] >
                level_[static_cast<size_t>(std::abs(learnt[max_i]))])
                max_i = k;
        }
        std::swap(learnt[1], learnt[max_i]);
        bt_level = level_[static_cast<size_t>(std::abs(learnt[1]))];
    }
    for (int v : to_clear)
        seen_[static_cast<size_t>(v)] = 0;
}

void Solver::cancel_until(int level) {
    if (decision_level() <= level)
        return;
    int bound = trail_lim_[static_cast<size_t>(level)];
    for (int i = static_cast<int>(trail_.size()) - 1; i >= bound; --i) {
        int v = std::abs(trail_[static_cast<size_t>(i)]);
        polarity_[static_cast<size_t>(v)] = value_[static_cast<size_t>(v)] == 1;
        value_[static_cast<size_t>(v)] = 0;
        reason_[static_cast<size_t>(v)] = -1;
    }
    trail_.resize(static_cast<size_t>(bound));
    trail_lim_.resize(static_cast<size_t>(level));
    qhead_ = trail_.size();
}

int Solver::pick_branch_var() {
    int best = 0;
    double best_act = -1.0;
    for (int v = 1; v <= input_.num_vars; ++v) {
        if (value_[static_cast<size_t>(v)] == 0 && activity_[static_cast<size_t>(v)] > best_act) {
            best = v;
            best_act = activity_[static_cast<size_t>(v)];
        }
    }
    return best;
}

Solver::Result Solver::solve(const std::vector<int>& assumptions) {
    if (!ok_)
        return Result::Unsat;
    cancel_until(0);

    for (;;) {
        int confl = propagate();
        if (confl != -1) {
            ++conflicts_;
            if (decision_level() == 0) {
                ok_ = false;
                return Result::Unsat;
            }
            std::vector<int> learnt;
            int bt = 0;
            analyze(confl, learnt, bt);
            cancel_until(bt);
            if (learnt.size() == 1) {
                enqueue(learnt[0], -1);
            } else {
                int ci = attach_clause(learnt);
                enqueue(learnt[0], ci);
            }
            decay();
            continue;
        }

        // establish pending assumptions before heuristic decisions
        int next = 0;
        bool assumption_failed = false;
        for (int a : assumptions) {
            int val = value_of(a);
            if (val == -1) {
                assumption_failed = true;
                break;
            }
            if (val == 0) {
                next = a;
                break;
            }
        }
        if (assumption_failed) {
            cancel_until(0);
            return Result::Unsat;
        }
        if (next == 0) {
            int v = pick_branch_var();
            if (v == 0) {
                model_.value.assign(static_cast<size_t>(input_.num_vars) + 1, false);
                for (int u = 1; u <= input_.num_vars; ++u)
                    model_.value[static_cast<size_t>(u)] = value_[static_cast<size_t>(u)] == 1;
                cancel_until(0);
                if (!model_.satisfies(input_))
                    throw SolverContractError("internal model check failed");
                return Result::Sat;
            }
            next = polarity_[static_cast<size_t>(v)] ? v : -v;
        }
        ++decisions_;
        new_decision_level();
        enqueue(next, -1);
    }
}

Solver::Result sat(const CnfFormula& f) {
    Solver s(f);
    return s.solve();
}

Model assign(const CnfFormula& f) {
    Solver s(f);
    if (s.solve() != Solver::Result::Sat)
        throw SolverContractError("assign() called on an unsatisfiable formula");
    return s.model();
}

} // namespace satreconf
