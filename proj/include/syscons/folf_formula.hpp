#pragma once

#include <compare>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "syscons/error.hpp"

namespace syscons::folf {

struct RelSymbol {
    std::string name;
    int arity = 1;

    friend auto operator<=>(const RelSymbol&, const RelSymbol&) = default;
};

struct RelSignature {
    std::vector<RelSymbol> symbols; // sorted by name, distinct names

    int arity_of(const std::string& name) const; // -1 if absent

    friend auto operator<=>(const RelSignature&, const RelSignature&) = default;
};

RelSignature make_signature(std::vector<RelSymbol> symbols);

// Closed first-order formulas over relation symbols, without function
// symbols or constants.  Variables are de Bruijn indices (0 = innermost
// binder); quantifier nodes keep the surface name as a printing hint that
// is ignored by comparison, so alpha-equivalent formulas compare equal.
struct Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

struct Formula {
    enum class Kind { Rel, Eq, Not, And, Or, Implies, Forall, Exists };

    Kind kind;
    std::string name;      // Rel: symbol name; Forall/Exists: binder hint
    std::vector<int> vars; // Rel: argument indices; Eq: {lhs, rhs}
    FormulaPtr lhs, rhs;   // Not/quantifiers use lhs only
};

FormulaPtr make_rel(std::string symbol, std::vector<int> vars);
FormulaPtr make_eq(int l, int r);
FormulaPtr make_not(FormulaPtr f);
FormulaPtr make_and(FormulaPtr l, FormulaPtr r);
FormulaPtr make_or(FormulaPtr l, FormulaPtr r);
FormulaPtr make_implies(FormulaPtr l, FormulaPtr r);
FormulaPtr make_forall(std::string hint, FormulaPtr body);
FormulaPtr make_exists(std::string hint, FormulaPtr body);

// Structural comparison, binder hints ignored.
std::strong_ordering compare(const Formula& a, const Formula& b);
inline bool equal(const FormulaPtr& a, const FormulaPtr& b) { return compare(*a, *b) == std::strong_ordering::equal; }

// Minimal-parenthesis rendering in the input grammar; parsing the result
// reproduces the formula.
std::string print_formula(const FormulaPtr& f);

// Grammar (ASCII): prefix 'forall v.' / 'exists v.' scoping as far right
// as possible, '->' (right associative) below '|' below '&' below prefix
// '~', atoms R(v1,...,vk) and v1 = v2, parentheses, identifiers
// [A-Za-z][A-Za-z0-9_]*.  Errors carry a character position.
FormulaPtr parse_formula(const std::string& text, const RelSignature& sig);

// Closed and arity-correct over the signature; returns a diagnostic
// instead of throwing so validators can aggregate.
std::optional<std::string> check_sentence(const FormulaPtr& f, const RelSignature& sig);

} // namespace syscons::folf
