#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "syscons/institution.hpp"
#include "syscons/symbol_map.hpp"

namespace syscons::ifl {

// The logical system IF of information flow: languages are finite type
// sets, sentences are sequents, structures are classifications.

struct IfLanguage {
    std::vector<std::string> types; // sorted, distinct

    friend auto operator<=>(const IfLanguage&, const IfLanguage&) = default;
};

IfLanguage make_language(std::vector<std::string> types);

inline const std::vector<std::string>& symbol_names(const IfLanguage& l) { return l.types; }

struct Sequent {
    std::vector<std::string> antecedent; // sorted, distinct
    std::vector<std::string> succedent;  // sorted, distinct

    friend auto operator<=>(const Sequent&, const Sequent&) = default;
};

Sequent make_sequent(std::vector<std::string> antecedent, std::vector<std::string> succedent);

// instances x types with an incidence relation; rows are bitmasks over the
// sorted type list.
struct Classification {
    std::vector<std::string> instances; // sorted, distinct
    std::vector<std::string> types;     // sorted, distinct
    std::vector<std::uint64_t> rows;    // per instance

    friend auto operator<=>(const Classification&, const Classification&) = default;
};

Classification make_classification(std::vector<std::string> instances,
                                   std::vector<std::string> types,
                                   const std::vector<std::pair<std::string, std::string>>& incidence);

bool incident(const Classification& m, const std::string& instance, const std::string& type);

using IfMorphism = BasicMorphism<IfLanguage>;

// Infomorphism: covariant type map plus contravariant instance map
// (target instances to source instances).
struct Infomorphism {
    IfMorphism type_part;
    SymbolMap instance_map;

    friend bool operator==(const Infomorphism&, const Infomorphism&) = default;
};

// Sequent satisfaction: every instance classified by all of the antecedent
// is classified by at least one member of the succedent.
bool satisfies(const Classification& m, const Sequent& s);

Sequent translate(const IfMorphism& m, const Sequent& s);

// Pullback of incidence: instances unchanged, x |= y iff x |=_2 m(y).
Classification reduct(const IfMorphism& m, const Classification& m2);

// All 4^|types| sequents.  Canonical order: antecedent mask ascending, then
// succedent mask ascending, bit i = i-th type of the sorted type list.
inline constexpr int kUniverseTypeCap = 8;
std::vector<Sequent> sentence_universe(const IfLanguage& lang);

// One classification per set of realized type rows: instance "r<mask>"
// carries exactly the row encoded by <mask>.  Row-set order: row-set mask
// ascending.  Adequate for sequent satisfaction and exact, so enumeration
// ignores any bound.
inline constexpr int kEnumerationTypeCap = 4;
std::vector<Classification> enumerate_canonical_structures(const IfLanguage& lang);

// Entailment-adequate bounded family: the empty classification followed by
// one single-row classification per row, rows ascending by mask.  A
// row-set models a sequent theory exactly when each of its rows does, and
// satisfaction is monotone under row removal, so consequence computed over
// this family agrees with the full row-set enumeration while staying
// linear in 2^|types|.  The family is closed under reducts.
std::vector<Classification> enumerate_adequate_structures(const IfLanguage& lang);

// Violation of the infomorphism biconditional, as a (target instance,
// source type) pair; nullopt when the condition holds.
std::optional<std::pair<std::string, std::string>> infomorphism_violation(const Infomorphism& f,
                                                                          const Classification& source,
                                                                          const Classification& target);

struct ClassificationColimit {
    Classification core;
    IfLanguage core_language;
    std::vector<Infomorphism> injections;
};

// Channel-core construction: core types from the type-set colimit, core
// instances the edge-compatible tuples of node instances.  Every edge must
// satisfy the infomorphism condition.
ClassificationColimit classification_colimit(const ShapeGraph& shape,
                                             const std::vector<Classification>& nodes,
                                             const std::vector<Infomorphism>& edges);

// "a,b |- c"; an empty side is left blank.
std::string print_sequent(const Sequent& s);
Sequent parse_sequent(const std::string& text, const IfLanguage& lang);

std::string print_classification(const Classification& m);

// Institution binding consumed by the generic flow and system machinery.
struct IfInstitution {
    using Language = IfLanguage;
    using Sentence = Sequent;
    using Structure = Classification;
    using Morphism = IfMorphism;
    using SystemMorphism = Infomorphism;

    static std::string name() { return "if"; }
    static std::vector<Sentence> sentence_universe(const Language& l) { return ifl::sentence_universe(l); }
    static std::vector<Structure> enumerate_structures(const Language& l, int /*bound: enumeration is exact*/) {
        return enumerate_adequate_structures(l);
    }
    static bool satisfies(const Structure& m, const Sentence& s) { return ifl::satisfies(m, s); }
    static Sentence translate(const Morphism& m, const Sentence& s) { return ifl::translate(m, s); }
    static Structure reduct(const Morphism& m, const Structure& m2) { return ifl::reduct(m, m2); }
    static Morphism identity(const Language& l) { return identity_morphism(l); }
    static Morphism compose(const Morphism& a, const Morphism& b) { return syscons::compose(a, b); }
    static void validate_morphism(const Morphism& m) { validate_morphism_map(m); }
    static std::optional<std::string> check_structure_over(const Language& l, const Structure& m) {
        if (m.types != l.types) return "classification type set differs from the language";
        return std::nullopt;
    }
    static LanguageColimit<IfInstitution> language_colimit(const ShapeGraph& shape,
                                                           const std::vector<Language>& langs,
                                                           const std::vector<Morphism>& edges);
    static std::string print_sentence(const Sentence& s) { return print_sequent(s); }
    static std::string print_structure(const Structure& m) { return print_classification(m); }
    static Sentence parse_sentence(const std::string& text, const Language& l) { return parse_sequent(text, l); }

    static Morphism language_part(const SystemMorphism& f) { return f.type_part; }
    static SystemMorphism system_identity(const IndexedStructure<IfInstitution>& m);
    static SystemMorphism system_compose(const SystemMorphism& a, const SystemMorphism& b);
    static bool system_equal(const SystemMorphism& a, const SystemMorphism& b) { return a == b; }
    static std::optional<std::string> check_system_morphism(const SystemMorphism& f,
                                                            const IndexedStructure<IfInstitution>& source,
                                                            const IndexedStructure<IfInstitution>& target);
    static std::pair<IndexedStructure<IfInstitution>, std::vector<SystemMorphism>>
    semantic_core(const ShapeGraph& shape,
                  const std::vector<IndexedStructure<IfInstitution>>& nodes,
                  const std::vector<SystemMorphism>& edges);
    // Raw candidate space for mediator searches: every type map crossed
    // with every instance map, validity not required.
    static std::vector<SystemMorphism> enumerate_system_morphisms(const IndexedStructure<IfInstitution>& source,
                                                                  const IndexedStructure<IfInstitution>& target);
};

} // namespace syscons::ifl
