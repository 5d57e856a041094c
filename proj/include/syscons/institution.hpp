#pragma once

#include <concepts>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "syscons/error.hpp"
#include "syscons/set_colimit.hpp"
#include "syscons/shape.hpp"

namespace syscons {

// A structure together with the language indexing it.
template <typename I>
struct IndexedStructure {
    typename I::Language language;
    typename I::Structure structure;

    friend bool operator==(const IndexedStructure&, const IndexedStructure&) = default;
};

template <typename I>
struct LanguageColimit {
    typename I::Language core;
    std::vector<typename I::Morphism> injections;
};

// Contract every concrete logical system satisfies.  Languages, sentences
// and structures are regular value types with a total order (used for
// canonical sentence sets and deterministic output).  Structure
// enumeration is bounded and deterministic; for IF the bound is ignored
// because the row-set enumeration is already exact.
template <typename I>
concept Institution = requires(const typename I::Language& lang,
                               const typename I::Morphism& mor,
                               const typename I::Sentence& sen,
                               const typename I::Structure& stru,
                               const std::vector<typename I::Language>& langs,
                               const std::vector<typename I::Morphism>& mors,
                               const ShapeGraph& shape,
                               int bound) {
    requires std::equality_comparable<typename I::Language>;
    requires std::equality_comparable<typename I::Sentence>;
    requires std::equality_comparable<typename I::Structure>;
    requires std::totally_ordered<typename I::Sentence>;
    { I::name() } -> std::convertible_to<std::string>;
    { I::sentence_universe(lang) } -> std::same_as<std::vector<typename I::Sentence>>;
    { I::enumerate_structures(lang, bound) } -> std::same_as<std::vector<typename I::Structure>>;
    { I::satisfies(stru, sen) } -> std::same_as<bool>;
    { I::translate(mor, sen) } -> std::same_as<typename I::Sentence>;
    { I::reduct(mor, stru) } -> std::same_as<typename I::Structure>;
    { I::identity(lang) } -> std::same_as<typename I::Morphism>;
    { I::compose(mor, mor) } -> std::same_as<typename I::Morphism>;
    { I::validate_morphism(mor) } -> std::same_as<void>;
    { I::check_structure_over(lang, stru) } -> std::same_as<std::optional<std::string>>;
    { I::language_colimit(shape, langs, mors) } -> std::same_as<LanguageColimit<I>>;
    { I::print_sentence(sen) } -> std::same_as<std::string>;
    { I::print_structure(stru) } -> std::same_as<std::string>;
    { I::parse_sentence(std::string{}, lang) } -> std::same_as<typename I::Sentence>;
};

// Extra capability needed to run semantic-level distributed systems: a
// concrete morphism representation between indexed structures (IF uses
// infomorphisms, FOLf reuses signature morphisms) and a channel-core
// construction.
template <typename I>
concept SystemInstitution = Institution<I> &&
    requires(const typename I::SystemMorphism& sm,
             const IndexedStructure<I>& istru,
             const ShapeGraph& shape,
             const std::vector<IndexedStructure<I>>& nodes,
             const std::vector<typename I::SystemMorphism>& edges) {
        { I::language_part(sm) } -> std::same_as<typename I::Morphism>;
        { I::system_identity(istru) } -> std::same_as<typename I::SystemMorphism>;
        { I::system_compose(sm, sm) } -> std::same_as<typename I::SystemMorphism>;
        { I::system_equal(sm, sm) } -> std::same_as<bool>;
        { I::check_system_morphism(sm, istru, istru) } -> std::same_as<std::optional<std::string>>;
        { I::semantic_core(shape, nodes, edges) } -> std::same_as<std::pair<IndexedStructure<I>, std::vector<typename I::SystemMorphism>>>;
        { I::enumerate_system_morphisms(istru, istru) } -> std::same_as<std::vector<typename I::SystemMorphism>>;
    };

// First sentence of the source universe breaking the satisfaction
// biconditional between a claimed reduct and the target structure, if any.
template <Institution I>
std::optional<typename I::Sentence> invariance_counterexample(const typename I::Morphism& mor,
                                                              const typename I::Structure& claimed_reduct,
                                                              const typename I::Structure& target_structure) {
    for (const auto& s : I::sentence_universe(mor.source)) {
        const bool left = I::satisfies(claimed_reduct, s);
        const bool right = I::satisfies(target_structure, I::translate(mor, s));
        if (left != right) return s;
    }
    return std::nullopt;
}

// Invariance of truth under change of notation, checked by exhaustion over
// the source sentence universe.
template <Institution I>
bool check_satisfaction_invariance(const typename I::Morphism& mor, const typename I::Structure& target_structure) {
    I::validate_morphism(mor);
    if (auto err = I::check_structure_over(mor.target, target_structure))
        fail("structure is not over the morphism target: " + *err);
    return !invariance_counterexample<I>(mor, I::reduct(mor, target_structure), target_structure).has_value();
}

} // namespace syscons
