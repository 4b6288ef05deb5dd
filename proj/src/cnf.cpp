#include "satreconf/cnf.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <istream>
#include <sstream>

namespace satreconf {

void CnfFormula::add_clause(std::vector<int> lits) {
    std::sort(lits.begin(), lits.end(), [](int a, int b) {
        int va = std::abs(a), vb = std::abs(b);
        return va != vb ? va < vb : a < b;
    });
    lits.erase(std::unique(lits.begin(), lits.end()), lits.end());
    for (size_t i = 0; i + 1 < lits.size(); ++i) {
        if (lits[i] == -lits[i + 1])
            return; // tautology
    }
    for (int l : lits) {
        if (l == 0)
            throw EncodingError("literal 0 is not allowed in a clause");
        if (std::abs(l) > num_vars)
            throw EncodingError("literal references undeclared variable " + std::to_string(l));
    }
    clauses.push_back(std::move(lits));
}

std::string CnfFormula::to_dimacs() const {
    std::ostringstream out;
    out << "p cnf " << num_vars << ' ' << clauses.size() << '\n';
    for (const auto& c : clauses) {
        for (int l : c)
            out << l << ' ';
        out << "0\n";
    }
    return out.str();
}

CnfFormula CnfFormula::from_dimacs(std::istream& in) {
    CnfFormula f;
    std::string line;
    bool header_seen = false;
    size_t declared_clauses = 0;
    std::vector<int> current;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == 'c')
            continue;
        if (line[0] == 'p') {
            std::istringstream hs(line);
            std::string p, cnf;
            int nv = 0;
            long nc = 0;
            hs >> p >> cnf >> nv >> nc;
            if (cnf != "cnf" || !hs || nv < 0 || nc < 0)
                throw SchemaError("malformed DIMACS header: " + line);
            f.num_vars = nv;
            declared_clauses = static_cast<size_t>(nc);
            header_seen = true;
            continue;
        }
        if (!header_seen)
            throw SchemaError("DIMACS clause before header");
        std::istringstream ls(line);
        int lit;
        while (ls >> lit) {
            if (lit == 0) {
                f.add_clause(current);
                current.clear();
            } else {
                current.push_back(lit);
            }
        }
    }
    if (!header_seen)
        throw SchemaError("missing DIMACS header");
    if (!current.empty())
        throw SchemaError("unterminated DIMACS clause");
    // tautology removal may legitimately reduce the count below the header
    if (f.clauses.size() > declared_clauses)
        throw SchemaError("more clauses than the DIMACS header declares");
    return f;
}

CnfFormula CnfFormula::from_dimacs_string(const std::string& text) {
    std::istringstream in(text);
    return from_dimacs(in);
}

bool Model::satisfies(const CnfFormula& f) const {
    if (value.size() < static_cast<size_t>(f.num_vars) + 1)
        return false;
    for (const auto& c : f.clauses) {
        bool sat = false;
        for (int l : c) {
            bool v = value[static_cast<size_t>(std::abs(l))];
            if ((l > 0) == v) {
                sat = true;
                break;
            }
        }
        if (!sat)
            return false;
    }
    return true;
}

} // namespace satreconf
