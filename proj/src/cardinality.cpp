#include "satreconf/cardinality.hpp"

#include <algorithm>

namespace satreconf {

std::vector<int> encode_flip_literals(const std::vector<int>& input_vars,
                                      const std::vector<bool>& observed) {
    if (input_vars.size() != observed.size())
        throw EncodingError("one decision variable per observed input is required");
    std::vector<int> flips;
    flips.reserve(input_vars.size());
    for (size_t i = 0; i < input_vars.size(); ++i)
        flips.push_back(flip_literal(input_vars[i], observed[i]));
    return flips;
}

namespace {

// Register rows s[i][j]: forced true when at least j of the first i
// literals are true. Rows are built up to count jmax.
std::vector<std::vector<int>> counter_rows(const std::vector<int>& lits, CnfFormula& cnf,
                                           int jmax) {
    int n = static_cast<int>(lits.size());
    std::vector<std::vector<int>> s(static_cast<size_t>(n) + 1);
    for (int i = 1; i <= n; ++i) {
        int ub = std::min(i, jmax);
        s[static_cast<size_t>(i)].assign(static_cast<size_t>(ub) + 1, 0);
        for (int j = 1; j <= ub; ++j)
            s[static_cast<size_t>(i)][static_cast<size_t>(j)] = cnf.new_var();
        int x = lits[static_cast<size_t>(i) - 1];
        cnf.add_clause({-x, s[static_cast<size_t>(i)][1]});
        if (i == 1)
            continue;
        int prev_ub = std::min(i - 1, jmax);
        if (prev_ub >= 1)
            cnf.add_clause({-s[static_cast<size_t>(i) - 1][1], s[static_cast<size_t>(i)][1]});
        for (int j = 2; j <= ub; ++j) {
            if (j - 1 <= prev_ub)
                cnf.add_clause({-x, -s[static_cast<size_t>(i) - 1][static_cast<size_t>(j) - 1],
                                s[static_cast<size_t>(i)][static_cast<size_t>(j)]});
            if (j <= prev_ub)
                cnf.add_clause({-s[static_cast<size_t>(i) - 1][static_cast<size_t>(j)],
                                s[static_cast<size_t>(i)][static_cast<size_t>(j)]});
        }
    }
    return s;
}

} // namespace

CounterOutputs encode_counter(const std::vector<int>& lits, CnfFormula& cnf) {
    CounterOutputs out;
    int n = static_cast<int>(lits.size());
    if (n == 0)
        return out;
    auto s = counter_rows(lits, cnf, n);
    for (int j = 1; j <= n; ++j)
        out.at_least.push_back(s[static_cast<size_t>(n)][static_cast<size_t>(j)]);
    return out;
}

void encode_at_most_k(const std::vector<int>& lits, int k, CnfFormula& cnf) {
    int n = static_cast<int>(lits.size());
    if (k < 0)
        throw EncodingError("negative cardinality bound");
    if (k >= n)
        return; // vacuous bound
    if (k == 0) {
        for (int l : lits)
            cnf.add_clause({-l});
        return;
    }
    auto s = counter_rows(lits, cnf, k + 1);
    cnf.add_clause({-s[static_cast<size_t>(n)][static_cast<size_t>(k) + 1]});
}

} // namespace satreconf
