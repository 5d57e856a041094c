#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "syscons/institution.hpp"

namespace syscons {

// Specifications over a language, consequence as a closure operator over
// the finite sentence universe, the entailment order, and direct/inverse
// flow along language morphisms.
//
// The fiber order is the specialization order: T1 <= T2 when
// every sentence of T2 is entailed by T1 ("more specialized" is lower).
// Consequence is semantic over the bounded structure enumeration and is
// materialized only within the sentence universe.

template <Institution I>
struct Specification {
    typename I::Language language;
    std::vector<typename I::Sentence> sentences; // sorted, distinct

    friend bool operator==(const Specification&, const Specification&) = default;
};

template <Institution I>
struct EntailmentReport {
    bool holds = false;
    std::optional<typename I::Structure> witness; // first counter-model, present iff !holds
};

template <Institution I>
std::vector<typename I::Sentence> sorted_sentences(std::vector<typename I::Sentence> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

template <Institution I>
Specification<I> make_specification(typename I::Language lang, std::vector<typename I::Sentence> sentences) {
    auto sorted = sorted_sentences<I>(std::move(sentences));
    const auto universe = sorted_sentences<I>(I::sentence_universe(lang));
    for (const auto& s : sorted)
        require(std::binary_search(universe.begin(), universe.end(), s),
                "sentence '" + I::print_sentence(s) + "' is outside the sentence universe of its language");
    return Specification<I>{std::move(lang), std::move(sorted)};
}

template <Institution I>
bool models(const typename I::Structure& m, const Specification<I>& t) {
    for (const auto& s : t.sentences)
        if (!I::satisfies(m, s)) return false;
    return true;
}

template <Institution I>
std::vector<typename I::Structure> models_of(const Specification<I>& t, int bound) {
    std::vector<typename I::Structure> out;
    for (auto& m : I::enumerate_structures(t.language, bound))
        if (models(m, t)) out.push_back(std::move(m));
    return out;
}

// T's consequence: every universe sentence satisfied by all enumerated
// models of T.
template <Institution I>
Specification<I> consequence(const Specification<I>& t, int bound) {
    const auto mods = models_of(t, bound);
    std::vector<typename I::Sentence> closed;
    for (const auto& s : I::sentence_universe(t.language)) {
        bool entailed = true;
        for (const auto& m : mods)
            if (!I::satisfies(m, s)) { entailed = false; break; }
        if (entailed) closed.push_back(s);
    }
    return Specification<I>{t.language, sorted_sentences<I>(std::move(closed))};
}

template <Institution I>
EntailmentReport<I> entails(const Specification<I>& t, const typename I::Sentence& s, int bound) {
    for (auto& m : I::enumerate_structures(t.language, bound)) {
        if (!models(m, t)) continue;
        if (!I::satisfies(m, s)) return EntailmentReport<I>{false, std::move(m)};
    }
    return EntailmentReport<I>{true, std::nullopt};
}

// T1 <= T2: every sentence of T2 is entailed by T1.
template <Institution I>
bool spec_leq(const Specification<I>& t1, const Specification<I>& t2, int bound) {
    require(t1.language == t2.language, "specification order compares specifications over one language");
    const auto mods = models_of(t1, bound);
    for (const auto& s : t2.sentences) {
        for (const auto& m : mods)
            if (!I::satisfies(m, s)) return false;
    }
    return true;
}

template <Institution I>
bool spec_equivalent(const Specification<I>& t1, const Specification<I>& t2, int bound) {
    return spec_leq(t1, t2, bound) && spec_leq(t2, t1, bound);
}

// Meet (greatest lower bound): union of the sentence sets.
template <Institution I>
Specification<I> spec_meet(const std::vector<Specification<I>>& specs) {
    require(!specs.empty(), "meet of an empty family");
    std::vector<typename I::Sentence> all;
    for (const auto& t : specs) {
        require(t.language == specs.front().language, "meet requires a shared language");
        all.insert(all.end(), t.sentences.begin(), t.sentences.end());
    }
    return Specification<I>{specs.front().language, sorted_sentences<I>(std::move(all))};
}

// Join (least upper bound): intersection of the consequences.
template <Institution I>
Specification<I> spec_join(const std::vector<Specification<I>>& specs, int bound) {
    require(!specs.empty(), "join of an empty family");
    std::vector<typename I::Sentence> acc = consequence(specs.front(), bound).sentences;
    for (std::size_t i = 1; i < specs.size(); ++i) {
        require(specs[i].language == specs.front().language, "join requires a shared language");
        const auto ci = consequence(specs[i], bound).sentences;
        std::vector<typename I::Sentence> merged;
        std::set_intersection(acc.begin(), acc.end(), ci.begin(), ci.end(), std::back_inserter(merged));
        acc = std::move(merged);
    }
    return Specification<I>{specs.front().language, std::move(acc)};
}

// Direct flow: the image of the sentence set.
template <Institution I>
Specification<I> dir_flow(const typename I::Morphism& m, const Specification<I>& t1) {
    require(t1.language == m.source, "direct flow: specification is not over the morphism source");
    std::vector<typename I::Sentence> image;
    image.reserve(t1.sentences.size());
    for (const auto& s : t1.sentences) image.push_back(I::translate(m, s));
    return Specification<I>{m.target, sorted_sentences<I>(std::move(image))};
}

// Inverse flow: source-universe sentences whose translation T2 entails.
template <Institution I>
Specification<I> inv_flow(const typename I::Morphism& m, const Specification<I>& t2, int bound) {
    require(t2.language == m.target, "inverse flow: specification is not over the morphism target");
    const auto mods = models_of(t2, bound);
    std::vector<typename I::Sentence> pulled;
    for (const auto& s1 : I::sentence_universe(m.source)) {
        const auto s2 = I::translate(m, s1);
        bool entailed = true;
        for (const auto& mm : mods)
            if (!I::satisfies(mm, s2)) { entailed = false; break; }
        if (entailed) pulled.push_back(s1);
    }
    return Specification<I>{m.source, sorted_sentences<I>(std::move(pulled))};
}

// Entailment preservation along m, computed both as the direct check and
// through the order formulation; the two must agree.
template <Institution I>
bool is_spec_morphism(const typename I::Morphism& m, const Specification<I>& t1, const Specification<I>& t2,
                      int bound) {
    require(t1.language == m.source && t2.language == m.target, "specification morphism endpoint mismatch");
    const auto target_models = models_of(t2, bound);
    bool direct = true;
    for (const auto& s1 : consequence(t1, bound).sentences) {
        const auto s2 = I::translate(m, s1);
        for (const auto& mm : target_models)
            if (!I::satisfies(mm, s2)) { direct = false; break; }
        if (!direct) break;
    }
    const bool via_order = spec_leq(t2, dir_flow(m, t1), bound);
    require(direct == via_order, "specification morphism formulations disagree");
    return direct;
}

} // namespace syscons
