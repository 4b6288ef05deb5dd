#include "satreconf/formula.hpp"

#include <cctype>

namespace satreconf {

FormulaPtr f_atom(int atom_id) {
    auto f = std::make_shared<Formula>();
    f->kind = NodeKind::Atom;
    f->atom = atom_id;
    return f;
}

FormulaPtr f_not(FormulaPtr f) {
    auto n = std::make_shared<Formula>();
    n->kind = NodeKind::Not;
    n->kids.push_back(std::move(f));
    return n;
}

FormulaPtr f_and(std::vector<FormulaPtr> fs) {
    auto n = std::make_shared<Formula>();
    n->kind = NodeKind::And;
    n->kids = std::move(fs);
    return n;
}

FormulaPtr f_or(std::vector<FormulaPtr> fs) {
    auto n = std::make_shared<Formula>();
    n->kind = NodeKind::Or;
    n->kids = std::move(fs);
    return n;
}

FormulaPtr f_implies(FormulaPtr lhs, FormulaPtr rhs) {
    auto n = std::make_shared<Formula>();
    n->kind = NodeKind::Implies;
    n->kids.push_back(std::move(lhs));
    n->kids.push_back(std::move(rhs));
    return n;
}

FormulaPtr f_true() { return f_and({}); }
FormulaPtr f_false() { return f_or({}); }

bool eval(const FormulaPtr& f, const std::vector<bool>& by_atom) {
    switch (f->kind) {
    case NodeKind::Atom:
        return by_atom.at(static_cast<size_t>(f->atom));
    case NodeKind::Not:
        return !eval(f->kids[0], by_atom);
    case NodeKind::And:
        for (const auto& k : f->kids)
            if (!eval(k, by_atom))
                return false;
        return true;
    case NodeKind::Or:
        for (const auto& k : f->kids)
            if (eval(k, by_atom))
                return true;
        return false;
    case NodeKind::Implies:
        return !eval(f->kids[0], by_atom) || eval(f->kids[1], by_atom);
    }
    return false;
}

static void collect(const FormulaPtr& f, std::set<int>& out) {
    if (f->kind == NodeKind::Atom) {
        out.insert(f->atom);
        return;
    }
    for (const auto& k : f->kids)
        collect(k, out);
}

std::set<int> collect_atoms(const FormulaPtr& f) {
    std::set<int> out;
    collect(f, out);
    return out;
}

namespace {

// Precedence levels for printing: atom/not = 3, and = 2, or = 1, implies = 0.
int precedence(NodeKind k) {
    switch (k) {
    case NodeKind::Atom:
    case NodeKind::Not:
        return 3;
    case NodeKind::And:
        return 2;
    case NodeKind::Or:
        return 1;
    case NodeKind::Implies:
        return 0;
    }
    return 0;
}

void print(const FormulaPtr& f, const AtomTable& atoms, int parent_prec, std::string& out) {
    int prec = precedence(f->kind);
    bool need_parens = prec < parent_prec;
    if (need_parens)
        out += '(';
    switch (f->kind) {
    case NodeKind::Atom:
        out += atoms.name(f->atom);
        break;
    case NodeKind::Not:
        out += '!';
        print(f->kids[0], atoms, 3, out);
        break;
    case NodeKind::And:
        if (f->kids.empty()) {
            out += "true";
            break;
        }
        for (size_t i = 0; i < f->kids.size(); ++i) {
            if (i)
                out += " & ";
            print(f->kids[i], atoms, prec, out);
        }
        break;
    case NodeKind::Or:
        if (f->kids.empty()) {
            out += "false";
            break;
        }
        for (size_t i = 0; i < f->kids.size(); ++i) {
            if (i)
                out += " | ";
            print(f->kids[i], atoms, prec, out);
        }
        break;
    case NodeKind::Implies:
        print(f->kids[0], atoms, prec + 1, out);
        out += " -> ";
        print(f->kids[1], atoms, prec, out);
        break;
    }
    if (need_parens)
        out += ')';
}

struct Token {
    enum Kind { AtomName, LNot, LAnd, LOr, Arrow, LParen, RParen, True, False, End } kind;
    std::string text;
};

class Lexer {
public:
    explicit Lexer(const std::string& s) : s_(s) {}

    Token next() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
        if (pos_ >= s_.size())
            return {Token::End, ""};
        char c = s_[pos_];
        if (c == '!') { ++pos_; return {Token::LNot, "!"}; }
        if (c == '&') { ++pos_; return {Token::LAnd, "&"}; }
        if (c == '|') { ++pos_; return {Token::LOr, "|"}; }
        if (c == '(') { ++pos_; return {Token::LParen, "("}; }
        if (c == ')') { ++pos_; return {Token::RParen, ")"}; }
        if (c == '-' && pos_ + 1 < s_.size() && s_[pos_ + 1] == '>') { pos_ += 2; return {Token::Arrow, "->"}; }
        if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') {
            size_t start = pos_;
            while (pos_ < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
                ++pos_;
            std::string word = s_.substr(start, pos_ - start);
            // predicate atoms carry their argument: low(x1)
            if (pos_ < s_.size() && s_[pos_] == '(') {
                size_t close = s_.find(')', pos_);
                if (close == std::string::npos)
                    throw SchemaError("unterminated atom name in formula: " + s_);
                word += s_.substr(pos_, close - pos_ + 1);
                pos_ = close + 1;
            }
            if (word == "true")
                return {Token::True, word};
            if (word == "false")
                return {Token::False, word};
            return {Token::AtomName, word};
        }
        throw SchemaError(std::string("unexpected character in formula: ") + c);
    }

private:
    const std::string& s_;
    size_t pos_ = 0;
};

class Parser {
public:
    Parser(const std::string& text, const AtomTable& atoms) : lex_(text), atoms_(atoms) { advance(); }

    FormulaPtr parse() {
        FormulaPtr f = parse_implies();
        if (tok_.kind != Token::End)
            throw SchemaError("trailing input in formula near '" + tok_.text + "'");
        return f;
    }

private:
    void advance() { tok_ = lex_.next(); }

    FormulaPtr parse_implies() {
        FormulaPtr lhs = parse_or();
        if (tok_.kind == Token::Arrow) {
            advance();
            return f_implies(std::move(lhs), parse_implies());
        }
        return lhs;
    }

    FormulaPtr parse_or() {
        std::vector<FormulaPtr> parts{parse_and()};
        while (tok_.kind == Token::LOr) {
            advance();
            parts.push_back(parse_and());
        }
        return parts.size() == 1 ? parts[0] : f_or(std::move(parts));
    }

    FormulaPtr parse_and() {
        std::vector<FormulaPtr> parts{parse_unary()};
        while (tok_.kind == Token::LAnd) {
            advance();
            parts.push_back(parse_unary());
        }
        return parts.size() == 1 ? parts[0] : f_and(std::move(parts));
    }

    FormulaPtr parse_unary() {
        if (tok_.kind == Token::LNot) {
            advance();
            return f_not(parse_unary());
        }
        if (tok_.kind == Token::LParen) {
            advance();
            FormulaPtr f = parse_implies();
            if (tok_.kind != Token::RParen)
                throw SchemaError("missing ')' in formula");
            advance();
            return f;
        }
        if (tok_.kind == Token::True) {
            advance();
            return f_true();
        }
        if (tok_.kind == Token::False) {
            advance();
            return f_false();
        }
        if (tok_.kind == Token::AtomName) {
            int id = atoms_.id(tok_.text);
            advance();
            return f_atom(id);
        }
        throw SchemaError("expected atom or '(' in formula near '" + tok_.text + "'");
    }

    Lexer lex_;
    const AtomTable& atoms_;
    Token tok_;
};

} // namespace

std::string to_string(const FormulaPtr& f, const AtomTable& atoms) {
    std::string out;
    print(f, atoms, 0, out);
    return out;
}

FormulaPtr parse_formula(const std::string& text, const AtomTable& atoms) {
    return Parser(text, atoms).parse();
}

} // namespace satreconf
