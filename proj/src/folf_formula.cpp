#include "syscons/folf_formula.hpp"

#include <algorithm>
#include <cctype>

namespace syscons::folf {

int RelSignature::arity_of(const std::string& name) const {
    for (const auto& s : symbols)
        if (s.name == name) return s.arity;
    return -1;
}

RelSignature make_signature(std::vector<RelSymbol> symbols) {
    std::sort(symbols.begin(), symbols.end(),
              [](const RelSymbol& a, const RelSymbol& b) { return a.name < b.name; });
    for (std::size_t i = 1; i < symbols.size(); ++i)
        require(symbols[i].name != symbols[i - 1].name, "relation symbol '" + symbols[i].name + "' listed twice");
    for (const auto& s : symbols)
        require(s.arity >= 1, "relation symbol '" + s.name + "' must have arity >= 1");
    return RelSignature{std::move(symbols)};
}

namespace {

FormulaPtr node(Formula::Kind kind, std::string name, std::vector<int> vars, FormulaPtr l, FormulaPtr r) {
    auto f = std::make_shared<Formula>();
    f->kind = kind;
    f->name = std::move(name);
    f->vars = std::move(vars);
    f->lhs = std::move(l);
    f->rhs = std::move(r);
    return f;
}

} // namespace

FormulaPtr make_rel(std::string symbol, std::vector<int> vars) {
    return node(Formula::Kind::Rel, std::move(symbol), std::move(vars), nullptr, nullptr);
}
FormulaPtr make_eq(int l, int r) { return node(Formula::Kind::Eq, "", {l, r}, nullptr, nullptr); }
FormulaPtr make_not(FormulaPtr f) { return node(Formula::Kind::Not, "", {}, std::move(f), nullptr); }
FormulaPtr make_and(FormulaPtr l, FormulaPtr r) { return node(Formula::Kind::And, "", {}, std::move(l), std::move(r)); }
FormulaPtr make_or(FormulaPtr l, FormulaPtr r) { return node(Formula::Kind::Or, "", {}, std::move(l), std::move(r)); }
FormulaPtr make_implies(FormulaPtr l, FormulaPtr r) {
    return node(Formula::Kind::Implies, "", {}, std::move(l), std::move(r));
}
FormulaPtr make_forall(std::string hint, FormulaPtr body) {
    return node(Formula::Kind::Forall, std::move(hint), {}, std::move(body), nullptr);
}
FormulaPtr make_exists(std::string hint, FormulaPtr body) {
    return node(Formula::Kind::Exists, std::move(hint), {}, std::move(body), nullptr);
}

std::strong_ordering compare(const Formula& a, const Formula& b) {
    if (a.kind != b.kind) return a.kind <=> b.kind;
    if (a.kind == Formula::Kind::Rel) {
        if (auto c = a.name <=> b.name; c != 0) return c;
    }
    if (auto c = a.vars <=> b.vars; c != 0) return c;
    const bool al = a.lhs != nullptr, bl = b.lhs != nullptr;
    if (al != bl) return al <=> bl;
    if (al)
        if (auto c = compare(*a.lhs, *b.lhs); c != 0) return c;
    const bool ar = a.rhs != nullptr, br = b.rhs != nullptr;
    if (ar != br) return ar <=> br;
    if (ar)
        if (auto c = compare(*a.rhs, *b.rhs); c != 0) return c;
    return std::strong_ordering::equal;
}

// ---------------------------------------------------------------------------
// printing

namespace {

// precedence levels: implies/quantifier 1, or 2, and 3, unary 4
int level_of(const Formula& f) {
    switch (f.kind) {
        case Formula::Kind::Implies:
        case Formula::Kind::Forall:
        case Formula::Kind::Exists: return 1;
        case Formula::Kind::Or: return 2;
        case Formula::Kind::And: return 3;
        default: return 4;
    }
}

std::string var_ref(const std::vector<std::string>& binders, int index) {
    require(index >= 0 && index < static_cast<int>(binders.size()), "formula has an unbound variable index");
    return binders[binders.size() - 1 - static_cast<std::size_t>(index)];
}

std::string fresh_binder(const std::vector<std::string>& binders, const std::string& hint) {
    std::string name = hint.empty() ? "v" : hint;
    while (std::find(binders.begin(), binders.end(), name) != binders.end()) name += "_";
    return name;
}

std::string print_at(const Formula& f, int required, std::vector<std::string>& binders) {
    const int level = level_of(f);
    std::string body;
    switch (f.kind) {
        case Formula::Kind::Rel: {
            body = f.name + "(";
            for (std::size_t i = 0; i < f.vars.size(); ++i) {
                if (i) body += ",";
                body += var_ref(binders, f.vars[i]);
            }
            body += ")";
            break;
        }
        case Formula::Kind::Eq:
            body = var_ref(binders, f.vars[0]) + " = " + var_ref(binders, f.vars[1]);
            break;
        case Formula::Kind::Not:
            body = "~" + print_at(*f.lhs, 4, binders);
            break;
        case Formula::Kind::And:
            body = print_at(*f.lhs, 3, binders) + " & " + print_at(*f.rhs, 4, binders);
            break;
        case Formula::Kind::Or:
            body = print_at(*f.lhs, 2, binders) + " | " + print_at(*f.rhs, 3, binders);
            break;
        case Formula::Kind::Implies:
            body = print_at(*f.lhs, 2, binders) + " -> " + print_at(*f.rhs, 1, binders);
            break;
        case Formula::Kind::Forall:
        case Formula::Kind::Exists: {
            const std::string name = fresh_binder(binders, f.name);
            binders.push_back(name);
            body = (f.kind == Formula::Kind::Forall ? "forall " : "exists ") + name + ". " +
                   print_at(*f.lhs, 1, binders);
            binders.pop_back();
            break;
        }
    }
    if (level < required) return "(" + body + ")";
    return body;
}

} // namespace

std::string print_formula(const FormulaPtr& f) {
    std::vector<std::string> binders;
    return print_at(*f, 1, binders);
}

// ---------------------------------------------------------------------------
// parsing

namespace {

struct Parser {
    const std::string& text;
    const RelSignature& sig;
    std::size_t pos = 0;
    std::vector<std::string> binders;

    [[noreturn]] void error(const std::string& msg) const {
        fail("formula parse error at position " + std::to_string(pos) + ": " + msg + " in '" + text + "'");
    }

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    bool eat(const std::string& tok) {
        skip_ws();
        if (text.compare(pos, tok.size(), tok) == 0) {
            pos += tok.size();
            return true;
        }
        return false;
    }

    bool peek(char c) {
        skip_ws();
        return pos < text.size() && text[pos] == c;
    }

    std::string ident() {
        skip_ws();
        std::size_t start = pos;
        if (pos < text.size() &&
            (std::isalpha(static_cast<unsigned char>(text[pos])))) {
            ++pos;
            while (pos < text.size() && (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
                ++pos;
        }
        if (start == pos) error("expected an identifier");
        return text.substr(start, pos - start);
    }

    int var_index(const std::string& name) {
        for (std::size_t i = binders.size(); i > 0; --i)
            if (binders[i - 1] == name) return static_cast<int>(binders.size() - i);
        error("unbound variable '" + name + "'");
    }

    FormulaPtr parse_implies() {
        FormulaPtr lhs = parse_or();
        if (eat("->")) return make_implies(std::move(lhs), parse_implies());
        return lhs;
    }

    FormulaPtr parse_or() {
        FormulaPtr lhs = parse_and();
        while (true) {
            skip_ws();
            // '|' but not '|-' (sequent separator never occurs in formulas)
            if (pos < text.size() && text[pos] == '|') {
                ++pos;
                FormulaPtr rhs = parse_and();
                lhs = make_or(std::move(lhs), std::move(rhs));
            } else {
                return lhs;
            }
        }
    }

    FormulaPtr parse_and() {
        FormulaPtr lhs = parse_unary();
        while (eat("&")) lhs = make_and(std::move(lhs), parse_unary());
        return lhs;
    }

    FormulaPtr parse_unary() {
        if (eat("~")) return make_not(parse_unary());
        if (peek('(')) {
            ++pos;
            FormulaPtr inner = parse_implies();
            if (!eat(")")) error("expected ')'");
            return inner;
        }
        std::size_t before = pos;
        std::string word = ident();
        if (word == "forall" || word == "exists") {
            std::string binder = ident();
            if (!eat(".")) error("expected '.' after quantified variable");
            binders.push_back(binder);
            FormulaPtr body = parse_implies();
            binders.pop_back();
            return word == "forall" ? make_forall(binder, std::move(body))
                                    : make_exists(binder, std::move(body));
        }
        if (peek('(')) { // relation atom
            int arity = sig.arity_of(word);
            if (arity < 0) {
                pos = before;
                error("unknown relation symbol '" + word + "'");
            }
            ++pos;
            std::vector<std::string> arg_names;
            if (!peek(')')) {
                while (true) {
                    arg_names.push_back(ident());
                    if (eat(",")) continue;
                    break;
                }
            }
            if (!eat(")")) error("expected ')'");
            if (static_cast<int>(arg_names.size()) != arity) {
                pos = before;
                error("arity mismatch: '" + word + "' expects " + std::to_string(arity) + " arguments, got " +
                      std::to_string(arg_names.size()));
            }
            std::vector<int> args;
            args.reserve(arg_names.size());
            for (const auto& name : arg_names) args.push_back(var_index(name));
            return make_rel(word, std::move(args));
        }
        if (eat("=")) return make_eq(var_index(word), var_index(ident()));
        error("expected an atom after '" + word + "'");
    }
};

std::optional<std::string> check_at(const Formula& f, const RelSignature& sig, int depth) {
    switch (f.kind) {
        case Formula::Kind::Rel: {
            int arity = sig.arity_of(f.name);
            if (arity < 0) return "unknown relation symbol '" + f.name + "'";
            if (static_cast<int>(f.vars.size()) != arity)
                return "arity mismatch at '" + f.name + "'";
            for (int v : f.vars)
                if (v < 0 || v >= depth) return "unbound variable in relation atom";
            return std::nullopt;
        }
        case Formula::Kind::Eq:
            for (int v : f.vars)
                if (v < 0 || v >= depth) return "unbound variable in equality atom";
            return std::nullopt;
        case Formula::Kind::Not: return check_at(*f.lhs, sig, depth);
        case Formula::Kind::And:
        case Formula::Kind::Or:
        case Formula::Kind::Implies:
            if (auto e = check_at(*f.lhs, sig, depth)) return e;
            return check_at(*f.rhs, sig, depth);
        case Formula::Kind::Forall:
        case Formula::Kind::Exists: return check_at(*f.lhs, sig, depth + 1);
    }
    return "malformed formula node";
}

} // namespace

FormulaPtr parse_formula(const std::string& text, const RelSignature& sig) {
    Parser p{text, sig, 0, {}};
    FormulaPtr f = p.parse_implies();
    p.skip_ws();
    if (p.pos != text.size()) p.error("unexpected trailing input");
    return f;
}

std::optional<std::string> check_sentence(const FormulaPtr& f, const RelSignature& sig) {
    if (!f) return "null formula";
    return check_at(*f, sig, 0);
}

} // namespace syscons::folf
