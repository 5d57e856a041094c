#pragma once

#include <compare>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "syscons/folf_formula.hpp"
#include "syscons/institution.hpp"
#include "syscons/symbol_map.hpp"

namespace syscons::folf {

// Schema templates generating the finite sentence universe of a signature.
// Binary schemas are instantiated at each binary symbol, unary ones at each
// unary symbol; symbols of higher arity contribute no universe sentences.
enum class Schema {
    Reflexivity,
    Symmetry,
    Transitivity,
    Totality,
    Irreflexivity,
    Antisymmetry,
    UnaryAll,
    UnaryNone,
};

struct SchemaSet {
    std::vector<Schema> schemas; // sorted, distinct

    static SchemaSet default_set();

    friend auto operator<=>(const SchemaSet&, const SchemaSet&) = default;
};

SchemaSet make_schema_set(std::vector<Schema> schemas);
Schema schema_from_name(const std::string& name);
std::string schema_name(Schema s);

// A language value pairs the signature with the schema set so the sentence
// universe is a function of the language alone.
struct FolfLanguage {
    RelSignature signature;
    SchemaSet schemas = SchemaSet::default_set();

    friend auto operator<=>(const FolfLanguage&, const FolfLanguage&) = default;
};

std::vector<std::string> symbol_names(const FolfLanguage& l);

// Sentence wrapper giving formulas regular value semantics.
struct FolfSentence {
    FormulaPtr ast;

    friend bool operator==(const FolfSentence& a, const FolfSentence& b) { return equal(a.ast, b.ast); }
    friend std::strong_ordering operator<=>(const FolfSentence& a, const FolfSentence& b) {
        return compare(*a.ast, *b.ast);
    }
};

// Finite relational structure with carrier {0..carrier-1}.
struct FiniteStructure {
    int carrier = 1;
    std::map<std::string, std::set<std::vector<int>>> tables;

    friend auto operator<=>(const FiniteStructure&, const FiniteStructure&) = default;
};

FiniteStructure make_structure(const RelSignature& sig, int carrier,
                               const std::map<std::string, std::set<std::vector<int>>>& tables);

// Tarskian evaluation with quantifiers ranging over the carrier.
bool evaluate(const FiniteStructure& m, const FolfSentence& s);

using FolfMorphism = BasicMorphism<FolfLanguage>;

FolfSentence translate(const FolfMorphism& m, const FolfSentence& s);
FiniteStructure reduct(const FolfMorphism& m, const FiniteStructure& m2);

// All structures with carrier sizes 1..max_carrier in canonical order:
// carrier ascending, then the combined table bitmask ascending (symbols in
// signature order, tuples in lexicographic order, first symbol in the low
// bits).
inline constexpr int kTableBitCap = 20; // at most 2^20 structures per carrier size
std::vector<FiniteStructure> enumerate_structures(const RelSignature& sig, int max_carrier);

std::vector<FolfSentence> sentence_universe(const RelSignature& sig, const SchemaSet& schemas);

struct FolfInstitution {
    using Language = FolfLanguage;
    using Sentence = FolfSentence;
    using Structure = FiniteStructure;
    using Morphism = FolfMorphism;
    using SystemMorphism = FolfMorphism;

    static std::string name() { return "folf"; }
    static std::vector<Sentence> sentence_universe(const Language& l) {
        return folf::sentence_universe(l.signature, l.schemas);
    }
    static std::vector<Structure> enumerate_structures(const Language& l, int bound) {
        return folf::enumerate_structures(l.signature, bound);
    }
    static bool satisfies(const Structure& m, const Sentence& s) { return evaluate(m, s); }
    static Sentence translate(const Morphism& m, const Sentence& s) { return folf::translate(m, s); }
    static Structure reduct(const Morphism& m, const Structure& m2) { return folf::reduct(m, m2); }
    static Morphism identity(const Language& l) { return identity_morphism(l); }
    static Morphism compose(const Morphism& a, const Morphism& b) { return syscons::compose(a, b); }
    static void validate_morphism(const Morphism& m);
    static std::optional<std::string> check_structure_over(const Language& l, const Structure& m);
    static LanguageColimit<FolfInstitution> language_colimit(const ShapeGraph& shape,
                                                             const std::vector<Language>& langs,
                                                             const std::vector<Morphism>& edges);
    static std::string print_sentence(const Sentence& s) { return print_formula(s.ast); }
    static std::string print_structure(const Structure& m);
    static Sentence parse_sentence(const std::string& text, const Language& l) {
        return FolfSentence{parse_formula(text, l.signature)};
    }

    static Morphism language_part(const SystemMorphism& m) { return m; }
    static SystemMorphism system_identity(const IndexedStructure<FolfInstitution>& m) {
        return identity_morphism(m.language);
    }
    static SystemMorphism system_compose(const SystemMorphism& a, const SystemMorphism& b) {
        return syscons::compose(a, b);
    }
    static bool system_equal(const SystemMorphism& a, const SystemMorphism& b) { return a == b; }
    // A signature morphism is a system morphism when it preserves
    // satisfaction over the source universe.
    static std::optional<std::string> check_system_morphism(const SystemMorphism& m,
                                                            const IndexedStructure<FolfInstitution>& source,
                                                            const IndexedStructure<FolfInstitution>& target);
    // Shared-carrier amalgamation: merged symbols must be interpreted by
    // identical tables.
    static std::pair<IndexedStructure<FolfInstitution>, std::vector<SystemMorphism>>
    semantic_core(const ShapeGraph& shape,
                  const std::vector<IndexedStructure<FolfInstitution>>& nodes,
                  const std::vector<SystemMorphism>& edges);
    static std::vector<SystemMorphism> enumerate_system_morphisms(const IndexedStructure<FolfInstitution>& source,
                                                                  const IndexedStructure<FolfInstitution>& target);
};

} // namespace syscons::folf
