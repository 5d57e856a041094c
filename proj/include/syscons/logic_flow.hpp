#pragma once

#include <string>
#include <vector>

#include "syscons/spec_flow.hpp"

namespace syscons {

// Logics (language + structure + specification), conceptual intent,
// soundness/completeness, natural logic, restriction, and flow of logics
// along structure morphisms.

template <Institution I>
struct Logic {
    typename I::Language language;
    typename I::Structure structure;
    std::vector<typename I::Sentence> theory; // sorted, distinct, within universe

    IndexedStructure<I> indexed_structure() const { return {language, structure}; }
    Specification<I> specification() const { return {language, theory}; }

    friend bool operator==(const Logic&, const Logic&) = default;
};

template <Institution I>
Logic<I> make_logic(typename I::Language lang, typename I::Structure structure,
                    std::vector<typename I::Sentence> theory) {
    if (auto err = I::check_structure_over(lang, structure)) fail(*err);
    auto spec = make_specification<I>(lang, std::move(theory));
    return Logic<I>{std::move(lang), std::move(structure), std::move(spec.sentences)};
}

// Conceptual intent: all universe sentences the structure satisfies.
template <Institution I>
Specification<I> intent(const IndexedStructure<I>& m) {
    if (auto err = I::check_structure_over(m.language, m.structure)) fail(*err);
    std::vector<typename I::Sentence> sats;
    for (const auto& s : I::sentence_universe(m.language))
        if (I::satisfies(m.structure, s)) sats.push_back(s);
    return Specification<I>{m.language, sorted_sentences<I>(std::move(sats))};
}

// Structure order: M1 <= M2 when intent(M1) contains intent(M2).
template <Institution I>
bool structure_leq(const IndexedStructure<I>& m1, const IndexedStructure<I>& m2) {
    require(m1.language == m2.language, "structure order compares structures over one language");
    for (const auto& s : I::sentence_universe(m1.language))
        if (I::satisfies(m2.structure, s) && !I::satisfies(m1.structure, s)) return false;
    return true;
}

// Language morphism with verified indexed-structure endpoints.
template <Institution I>
struct StructureMorphism {
    typename I::Morphism map;
    IndexedStructure<I> source;
    IndexedStructure<I> target;
};

// Satisfaction preservation, asserted against the reduct formulation
// struc(m)(M2) <= M1 (they agree by satisfaction invariance).
template <Institution I>
bool is_structure_morphism(const typename I::Morphism& m, const IndexedStructure<I>& m1,
                           const IndexedStructure<I>& m2) {
    require(m1.language == m.source && m2.language == m.target, "structure morphism endpoint mismatch");
    I::validate_morphism(m);
    bool preserved = true;
    for (const auto& s : I::sentence_universe(m.source))
        if (I::satisfies(m1.structure, s) && !I::satisfies(m2.structure, I::translate(m, s))) {
            preserved = false;
            break;
        }
    const IndexedStructure<I> reduct{m.source, I::reduct(m, m2.structure)};
    const bool via_reduct = structure_leq(reduct, m1);
    require(preserved == via_reduct, "structure morphism formulations disagree");
    return preserved;
}

template <Institution I>
StructureMorphism<I> make_structure_morphism(typename I::Morphism map, IndexedStructure<I> source,
                                             IndexedStructure<I> target) {
    require(is_structure_morphism(map, source, target),
            "language morphism does not preserve satisfaction between the given structures");
    return StructureMorphism<I>{std::move(map), std::move(source), std::move(target)};
}

// Sound: the structure models everything the theory entails (within the
// universe at the bound).  Complete: everything the structure satisfies is
// entailed.
template <Institution I>
bool is_sound(const Logic<I>& l, int bound) {
    const auto closed = consequence(l.specification(), bound);
    for (const auto& s : closed.sentences)
        if (!I::satisfies(l.structure, s)) return false;
    return true;
}

template <Institution I>
bool is_complete(const Logic<I>& l, int bound) {
    const auto closed = consequence(l.specification(), bound).sentences;
    for (const auto& s : I::sentence_universe(l.language))
        if (I::satisfies(l.structure, s) && !std::binary_search(closed.begin(), closed.end(), s)) return false;
    return true;
}

// The natural logic of a structure: its intent as theory; the sound and
// complete logic over that structure.
template <Institution I>
Logic<I> nat_logic(const IndexedStructure<I>& m) {
    return Logic<I>{m.language, m.structure, intent(m).sentences};
}

// Restriction: conceptual join with the natural logic,
// theory = intent(M) /\ T*.
template <Institution I>
Logic<I> res_logic(const Logic<I>& l, int bound) {
    const auto in = intent(l.indexed_structure()).sentences;
    const auto closed = consequence(l.specification(), bound).sentences;
    std::vector<typename I::Sentence> meet;
    std::set_intersection(in.begin(), in.end(), closed.begin(), closed.end(), std::back_inserter(meet));
    return Logic<I>{l.language, l.structure, std::move(meet)};
}

// Logic order in the fiber of a fixed structure.
template <Institution I>
bool logic_leq(const Logic<I>& l1, const Logic<I>& l2, int bound) {
    require(l1.language == l2.language && l1.structure == l2.structure,
            "logic fiber order compares logics over one structure");
    return spec_leq(l1.specification(), l2.specification(), bound);
}

// The larger fiber over a language: structure order and theory order.
template <Institution I>
bool logic_leq_general(const Logic<I>& l1, const Logic<I>& l2, int bound) {
    require(l1.language == l2.language, "logic order compares logics over one language");
    return structure_leq(l1.indexed_structure(), l2.indexed_structure()) &&
           spec_leq(l1.specification(), l2.specification(), bound);
}

template <Institution I>
bool logic_equivalent(const Logic<I>& l1, const Logic<I>& l2, int bound) {
    return logic_leq_general(l1, l2, bound) && logic_leq_general(l2, l1, bound);
}

namespace detail {
template <Institution I>
void require_structure_morphism(const StructureMorphism<I>& sm) {
    require(is_structure_morphism(sm.map, sm.source, sm.target),
            "flow requires a verified structure morphism");
}
} // namespace detail

// Direct flow: keep the target structure, push the theory forward.
template <Institution I>
Logic<I> dir_logic(const StructureMorphism<I>& sm, const Logic<I>& l1) {
    detail::require_structure_morphism(sm);
    require(l1.language == sm.source.language && l1.structure == sm.source.structure,
            "direct logic flow: logic is not over the morphism source");
    auto pushed = dir_flow(sm.map, l1.specification());
    return Logic<I>{sm.target.language, sm.target.structure, std::move(pushed.sentences)};
}

// Inverse flow: keep the source structure, pull back the consequence.
template <Institution I>
Logic<I> inv_logic(const StructureMorphism<I>& sm, const Logic<I>& l2, int bound) {
    detail::require_structure_morphism(sm);
    require(l2.language == sm.target.language && l2.structure == sm.target.structure,
            "inverse logic flow: logic is not over the morphism target");
    auto pulled = inv_flow(sm.map, l2.specification(), bound);
    return Logic<I>{sm.source.language, sm.source.structure, std::move(pulled.sentences)};
}

// Inverse flow of sound logics: join the pulled-back consequence with the
// source intent (intersection of the two closed theories).
template <Institution I>
Logic<I> inv_sound(const StructureMorphism<I>& sm, const Logic<I>& l2, int bound) {
    require(is_sound(l2, bound), "inverse sound flow requires a sound target logic");
    Logic<I> generic = inv_logic(sm, l2, bound);
    const auto closed = consequence(generic.specification(), bound).sentences;
    const auto in = intent(sm.source).sentences;
    std::vector<typename I::Sentence> joined;
    std::set_intersection(closed.begin(), closed.end(), in.begin(), in.end(), std::back_inserter(joined));
    return Logic<I>{sm.source.language, sm.source.structure, std::move(joined)};
}

// Composite logic: a base logic and a sound logic sharing language and
// specification, the base structure satisfying no more than the sound one.
template <Institution I>
struct CompositeLogic {
    Logic<I> base;
    Logic<I> sound_part;
};

template <Institution I>
struct CompositeReport {
    bool ok = true;
    std::string violation;
};

template <Institution I>
CompositeReport<I> validate_composite(const CompositeLogic<I>& c, int bound) {
    if (c.base.language != c.sound_part.language)
        return {false, "base and sound part have different languages"};
    if (c.base.theory != c.sound_part.theory)
        return {false, "base and sound part have different specifications"};
    if (!is_sound(c.sound_part, bound)) return {false, "sound part fails the soundness check"};
    for (const auto& s : I::sentence_universe(c.base.language))
        if (I::satisfies(c.base.structure, s) && !I::satisfies(c.sound_part.structure, s))
            return {false, "base structure satisfies '" + I::print_sentence(s) +
                               "' but the sound structure refutes it"};
    return {true, ""};
}

} // namespace syscons
