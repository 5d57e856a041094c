#pragma once

#include <utility>
#include <vector>

#include "syscons/logic_flow.hpp"

namespace syscons {

// Shaped diagrams of structures and logics, covering channels, minimal
// covers, fusion and system consequence.  The covering condition is
// checked on generating edges only; functoriality on composites follows.

// --------------------------------------------------------------------------
// semantic level

template <SystemInstitution I>
struct DistributedSystem {
    ShapeGraph shape;
    std::vector<IndexedStructure<I>> nodes;
    std::vector<typename I::SystemMorphism> edges;
};

template <SystemInstitution I>
struct InformationSystem {
    ShapeGraph shape;
    std::vector<Logic<I>> nodes;
    std::vector<typename I::SystemMorphism> edges;
};

template <SystemInstitution I>
struct Channel {
    IndexedStructure<I> core;
    std::vector<typename I::SystemMorphism> components; // one per node, into the core
};

template <SystemInstitution I>
DistributedSystem<I> underlying(const InformationSystem<I>& is) {
    DistributedSystem<I> ds;
    ds.shape = is.shape;
    for (const auto& l : is.nodes) ds.nodes.push_back(l.indexed_structure());
    ds.edges = is.edges;
    return ds;
}

template <SystemInstitution I>
void validate_distributed_system(const DistributedSystem<I>& ds) {
    validate_shape(ds.shape);
    require(ds.nodes.size() == ds.shape.nodes.size(), "node count does not match shape");
    require(ds.edges.size() == ds.shape.edges.size(), "edge count does not match shape");
    for (std::size_t e = 0; e < ds.edges.size(); ++e) {
        const auto& edge = ds.shape.edges[e];
        if (auto err = I::check_system_morphism(ds.edges[e],
                                                ds.nodes[static_cast<std::size_t>(edge.source)],
                                                ds.nodes[static_cast<std::size_t>(edge.target)]))
            fail("edge '" + edge.id + "': " + *err);
    }
}

// Edges of an information system are logic morphisms: structure morphisms
// that also preserve entailment.
template <SystemInstitution I>
void validate_information_system(const InformationSystem<I>& is, int bound) {
    validate_distributed_system(underlying(is));
    for (std::size_t e = 0; e < is.edges.size(); ++e) {
        const auto& edge = is.shape.edges[e];
        const auto& src = is.nodes[static_cast<std::size_t>(edge.source)];
        const auto& dst = is.nodes[static_cast<std::size_t>(edge.target)];
        const auto lang_map = I::language_part(is.edges[e]);
        require(is_structure_morphism<I>(lang_map, src.indexed_structure(), dst.indexed_structure()),
                "edge '" + edge.id + "' is not a structure morphism");
        require(is_spec_morphism<I>(lang_map, src.specification(), dst.specification(), bound),
                "edge '" + edge.id + "' does not preserve entailment");
    }
}

// gamma_i = sigma_e ; gamma_j for every edge, morphisms compared
// extensionally.
template <SystemInstitution I>
bool is_covering(const Channel<I>& ch, const DistributedSystem<I>& ds) {
    require(ch.components.size() == ds.nodes.size(), "channel component count does not match the system");
    for (std::size_t e = 0; e < ds.edges.size(); ++e) {
        const auto& edge = ds.shape.edges[e];
        const auto composed = I::system_compose(ds.edges[e], ch.components[static_cast<std::size_t>(edge.target)]);
        if (!I::system_equal(ch.components[static_cast<std::size_t>(edge.source)], composed)) return false;
    }
    return true;
}

template <SystemInstitution I>
Channel<I> minimal_cover(const DistributedSystem<I>& ds) {
    validate_distributed_system(ds);
    auto [core, injections] = I::semantic_core(ds.shape, ds.nodes, ds.edges);
    Channel<I> ch{std::move(core), std::move(injections)};
    require(is_covering(ch, ds), "minimal cover does not cover its own system");
    return ch;
}

// The unique refinement rho from the minimal cover to another covering
// channel: min.component_i ; rho = other.component_i for every node.
// Uniqueness is established by exhausting the raw assignment space.
template <SystemInstitution I>
typename I::SystemMorphism mediator(const Channel<I>& min, const Channel<I>& other,
                                    const DistributedSystem<I>& ds) {
    require(is_covering(other, ds), "mediator: channel does not cover the system");
    std::vector<typename I::SystemMorphism> found;
    for (const auto& rho : I::enumerate_system_morphisms(min.core, other.core)) {
        bool ok = true;
        for (std::size_t i = 0; i < min.components.size(); ++i)
            if (!I::system_equal(I::system_compose(min.components[i], rho), other.components[i])) {
                ok = false;
                break;
            }
        if (ok) found.push_back(rho);
    }
    require(!found.empty(), "mediator: no consistent assignment (non-covering channel or core defect)");
    require(found.size() == 1, "mediator is not unique (core defect)");
    if (auto err = I::check_system_morphism(found.front(), min.core, other.core))
        fail("mediator is not a valid morphism: " + *err);
    return found.front();
}

// Direct system flow: translate every node theory along the optimal
// channel and take the meet (syntactic union; consequence closes once at
// the core).
template <SystemInstitution I>
Logic<I> fusion(const InformationSystem<I>& is, int /*bound*/) {
    const Channel<I> ch = minimal_cover(underlying(is));
    std::vector<typename I::Sentence> theory;
    for (std::size_t i = 0; i < is.nodes.size(); ++i) {
        const auto pushed = dir_flow(I::language_part(ch.components[i]), is.nodes[i].specification());
        theory.insert(theory.end(), pushed.sentences.begin(), pushed.sentences.end());
    }
    return Logic<I>{ch.core.language, ch.core.structure, sorted_sentences<I>(std::move(theory))};
}

enum class FlowKind { Generic, Sound };

// Inverse system flow: consequence of the fusion at the core, pulled back
// along every channel component.  Sound systems use the sound inverse flow
// (joining with the node intent).
template <SystemInstitution I>
InformationSystem<I> system_consequence(const InformationSystem<I>& is, int bound,
                                        FlowKind kind = FlowKind::Generic) {
    const Channel<I> ch = minimal_cover(underlying(is));
    std::vector<typename I::Sentence> fused;
    for (std::size_t i = 0; i < is.nodes.size(); ++i) {
        const auto pushed = dir_flow(I::language_part(ch.components[i]), is.nodes[i].specification());
        fused.insert(fused.end(), pushed.sentences.begin(), pushed.sentences.end());
    }
    const Specification<I> fusion_spec{ch.core.language, sorted_sentences<I>(std::move(fused))};
    const auto core_models = models_of(fusion_spec, bound);

    InformationSystem<I> out;
    out.shape = is.shape;
    out.edges = is.edges;
    for (std::size_t i = 0; i < is.nodes.size(); ++i) {
        const auto lang_map = I::language_part(ch.components[i]);
        std::vector<typename I::Sentence> pulled;
        for (const auto& s1 : I::sentence_universe(is.nodes[i].language)) {
            const auto s2 = I::translate(lang_map, s1);
            bool entailed = true;
            for (const auto& m : core_models)
                if (!I::satisfies(m, s2)) { entailed = false; break; }
            if (entailed) pulled.push_back(s1);
        }
        auto theory = sorted_sentences<I>(std::move(pulled));
        if (kind == FlowKind::Sound) {
            require(is_sound(is.nodes[i], bound), "sound system consequence requires sound node logics");
            const auto closed = consequence(Specification<I>{is.nodes[i].language, theory}, bound).sentences;
            const auto in = intent(is.nodes[i].indexed_structure()).sentences;
            theory.clear();
            std::set_intersection(closed.begin(), closed.end(), in.begin(), in.end(), std::back_inserter(theory));
        }
        out.nodes.push_back(Logic<I>{is.nodes[i].language, is.nodes[i].structure, std::move(theory)});
    }

    // The result must again be an information system; a failure here is a
    // construction defect, not an input error.
    for (std::size_t e = 0; e < out.edges.size(); ++e) {
        const auto& edge = out.shape.edges[e];
        require(is_spec_morphism<I>(I::language_part(out.edges[e]),
                                    out.nodes[static_cast<std::size_t>(edge.source)].specification(),
                                    out.nodes[static_cast<std::size_t>(edge.target)].specification(), bound),
                "system consequence broke the entailment condition on edge '" + edge.id + "'");
    }
    return out;
}

template <SystemInstitution I>
bool pointwise_leq(const InformationSystem<I>& a, const InformationSystem<I>& b, int bound) {
    require(a.shape == b.shape, "pointwise order compares systems of one shape");
    for (std::size_t i = 0; i < a.nodes.size(); ++i)
        if (!logic_leq_general(a.nodes[i], b.nodes[i], bound)) return false;
    return true;
}

// System entailment: IS1 entails IS2 when the consequence of IS1 is
// pointwise below IS2.
template <SystemInstitution I>
bool system_entails(const InformationSystem<I>& a, const InformationSystem<I>& b, int bound,
                    FlowKind kind = FlowKind::Generic) {
    return pointwise_leq(system_consequence(a, bound, kind), b, bound);
}

template <SystemInstitution I>
InformationSystem<I> restrict_system(const InformationSystem<I>& is, int bound) {
    InformationSystem<I> out;
    out.shape = is.shape;
    out.edges = is.edges;
    for (const auto& l : is.nodes) out.nodes.push_back(res_logic(l, bound));
    return out;
}

template <SystemInstitution I>
InformationSystem<I> include_system(const InformationSystem<I>& is, int bound) {
    for (std::size_t i = 0; i < is.nodes.size(); ++i)
        require(is_sound(is.nodes[i], bound),
                "include_system: node '" + is.shape.nodes[i] + "' is not sound");
    return is;
}

// --------------------------------------------------------------------------
// formal level: specifications at the nodes, language morphisms on the
// edges, cores are languages.

template <Institution I>
struct FormalSystem {
    ShapeGraph shape;
    std::vector<Specification<I>> nodes;
    std::vector<typename I::Morphism> edges;
};

template <Institution I>
struct FormalChannel {
    typename I::Language core;
    std::vector<typename I::Morphism> components;
};

template <Institution I>
void validate_formal_system(const FormalSystem<I>& fs, int bound) {
    validate_shape(fs.shape);
    require(fs.nodes.size() == fs.shape.nodes.size(), "node count does not match shape");
    require(fs.edges.size() == fs.shape.edges.size(), "edge count does not match shape");
    for (std::size_t e = 0; e < fs.edges.size(); ++e) {
        const auto& edge = fs.shape.edges[e];
        const auto& src = fs.nodes[static_cast<std::size_t>(edge.source)];
        const auto& dst = fs.nodes[static_cast<std::size_t>(edge.target)];
        require(fs.edges[e].source == src.language,
                "edge '" + edge.id + "': morphism source differs from the source node language");
        require(fs.edges[e].target == dst.language,
                "edge '" + edge.id + "': morphism target differs from the target node language");
        I::validate_morphism(fs.edges[e]);
        require(is_spec_morphism<I>(fs.edges[e], src, dst, bound),
                "edge '" + edge.id + "' does not preserve entailment");
    }
}

template <Institution I>
FormalChannel<I> formal_minimal_cover(const FormalSystem<I>& fs) {
    validate_shape(fs.shape);
    std::vector<typename I::Language> langs;
    for (const auto& t : fs.nodes) langs.push_back(t.language);
    auto col = I::language_colimit(fs.shape, langs, fs.edges);
    return FormalChannel<I>{std::move(col.core), std::move(col.injections)};
}

template <Institution I>
bool formal_is_covering(const FormalChannel<I>& ch, const FormalSystem<I>& fs) {
    require(ch.components.size() == fs.nodes.size(), "channel component count does not match the system");
    for (std::size_t e = 0; e < fs.edges.size(); ++e) {
        const auto& edge = fs.shape.edges[e];
        if (!(ch.components[static_cast<std::size_t>(edge.source)] ==
              I::compose(fs.edges[e], ch.components[static_cast<std::size_t>(edge.target)])))
            return false;
    }
    return true;
}

template <Institution I>
typename I::Morphism formal_mediator(const FormalChannel<I>& min, const FormalChannel<I>& other,
                                     const FormalSystem<I>& fs) {
    require(formal_is_covering(other, fs), "mediator: channel does not cover the system");
    const auto src = symbol_names(min.core);
    const auto dst = symbol_names(other.core);
    require(src.empty() || !dst.empty(), "mediator: no assignments exist");
    std::vector<SymbolMap> maps{{}};
    for (const auto& name : src) {
        std::vector<SymbolMap> next;
        for (const auto& partial : maps)
            for (const auto& img : dst) {
                SymbolMap m = partial;
                m[name] = img;
                next.push_back(std::move(m));
            }
        maps = std::move(next);
    }
    std::vector<typename I::Morphism> found;
    for (auto& m : maps) {
        typename I::Morphism rho{min.core, other.core, std::move(m)};
        bool ok = true;
        for (std::size_t i = 0; i < min.components.size(); ++i)
            if (!(I::compose(min.components[i], rho) == other.components[i])) { ok = false; break; }
        if (ok) found.push_back(std::move(rho));
    }
    require(!found.empty(), "mediator: no consistent assignment (non-covering channel or core defect)");
    require(found.size() == 1, "mediator is not unique (core defect)");
    I::validate_morphism(found.front());
    return found.front();
}

template <Institution I>
Specification<I> formal_fusion(const FormalSystem<I>& fs) {
    const FormalChannel<I> ch = formal_minimal_cover(fs);
    std::vector<typename I::Sentence> theory;
    for (std::size_t i = 0; i < fs.nodes.size(); ++i) {
        const auto pushed = dir_flow(ch.components[i], fs.nodes[i]);
        theory.insert(theory.end(), pushed.sentences.begin(), pushed.sentences.end());
    }
    return Specification<I>{ch.core, sorted_sentences<I>(std::move(theory))};
}

template <Institution I>
FormalSystem<I> formal_system_consequence(const FormalSystem<I>& fs, int bound) {
    const FormalChannel<I> ch = formal_minimal_cover(fs);
    const Specification<I> fused = formal_fusion(fs);
    const auto core_models = models_of(fused, bound);
    FormalSystem<I> out;
    out.shape = fs.shape;
    out.edges = fs.edges;
    for (std::size_t i = 0; i < fs.nodes.size(); ++i) {
        std::vector<typename I::Sentence> pulled;
        for (const auto& s1 : I::sentence_universe(fs.nodes[i].language)) {
            const auto s2 = I::translate(ch.components[i], s1);
            bool entailed = true;
            for (const auto& m : core_models)
                if (!I::satisfies(m, s2)) { entailed = false; break; }
            if (entailed) pulled.push_back(s1);
        }
        out.nodes.push_back(Specification<I>{fs.nodes[i].language, sorted_sentences<I>(std::move(pulled))});
    }
    return out;
}

template <Institution I>
bool formal_pointwise_leq(const FormalSystem<I>& a, const FormalSystem<I>& b, int bound) {
    require(a.shape == b.shape, "pointwise order compares systems of one shape");
    for (std::size_t i = 0; i < a.nodes.size(); ++i)
        if (!spec_leq(a.nodes[i], b.nodes[i], bound)) return false;
    return true;
}

template <Institution I>
bool formal_system_entails(const FormalSystem<I>& a, const FormalSystem<I>& b, int bound) {
    return formal_pointwise_leq(formal_system_consequence(a, bound), b, bound);
}

} // namespace syscons
