#include "satreconf/tseitin.hpp"

namespace satreconf {

namespace {

// Returns a literal equivalent to f, emitting definition clauses.
int encode(const FormulaPtr& f, CnfFormula& cnf, int num_atom_vars, int& const_true) {
    auto true_lit = [&]() {
        if (const_true == 0) {
            const_true = cnf.new_var();
            cnf.add_clause({const_true});
        }
        return const_true;
    };

    switch (f->kind) {
    case NodeKind::Atom: {
        if (f->atom < 0 || f->atom >= num_atom_vars)
            throw EncodingError("atom id out of declared range: " + std::to_string(f->atom));
        return f->atom + 1;
    }
    case NodeKind::Not:
        return -encode(f->kids[0], cnf, num_atom_vars, const_true);
    case NodeKind::And: {
        if (f->kids.empty())
            return true_lit();
        std::vector<int> lits;
        lits.reserve(f->kids.size());
        for (const auto& k : f->kids)
            lits.push_back(encode(k, cnf, num_atom_vars, const_true));
        if (lits.size() == 1)
            return lits[0];
        int d = cnf.new_var();
        std::vector<int> back{d};
        for (int l : lits) {
            cnf.add_clause({-d, l});
            back.push_back(-l);
        }
        cnf.add_clause(back);
        return d;
    }
    case NodeKind::Or: {
        if (f->kids.empty())
            return -true_lit();
        std::vector<int> lits;
        lits.reserve(f->kids.size());
        for (const auto& k : f->kids)
            lits.push_back(encode(k, cnf, num_atom_vars, const_true));
        if (lits.size() == 1)
            return lits[0];
        int d = cnf.new_var();
        std::vector<int> fwd{-d};
        for (int l : lits) {
            cnf.add_clause({d, -l});
            fwd.push_back(l);
        }
        cnf.add_clause(fwd);
        return d;
    }
    case NodeKind::Implies: {
        int a = encode(f->kids[0], cnf, num_atom_vars, const_true);
        int b = encode(f->kids[1], cnf, num_atom_vars, const_true);
        int d = cnf.new_var();
        cnf.add_clause({-d, -a, b});
        cnf.add_clause({d, a});
        cnf.add_clause({d, -b});
        return d;
    }
    }
    throw EncodingError("unreachable formula node");
}

} // namespace

int tseitin_add(const FormulaPtr& f, CnfFormula& cnf, int num_atom_vars) {
    cnf.ensure_var(num_atom_vars);
    int const_true = 0;
    int root = encode(f, cnf, num_atom_vars, const_true);
    cnf.add_clause({root});
    return root;
}

CnfBuild to_cnf(const FormulaPtr& f, int num_atom_vars) {
    CnfBuild b;
    b.root_lit = tseitin_add(f, b.cnf, num_atom_vars);
    return b;
}

} // namespace satreconf
