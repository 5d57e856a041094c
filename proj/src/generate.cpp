#include "syscons/generate.hpp"

#include <algorithm>

namespace syscons::ifl {

namespace {

const char* kTypePool[] = {"a", "b", "c", "d", "e", "f"};

std::vector<std::string> subset_of(const std::vector<std::string>& pool, std::uint64_t mask) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < pool.size(); ++i)
        if ((mask >> i) & 1u) out.push_back(pool[i]);
    return out;
}

} // namespace

IfLanguage random_language(Rng& rng, int max_types) {
    const int n = rng.range(1, max_types);
    std::vector<std::string> types;
    for (int i = 0; i < n; ++i) types.push_back(kTypePool[i]);
    return make_language(std::move(types));
}

Sequent random_sequent(const IfLanguage& lang, Rng& rng) {
    const std::uint64_t rows = std::uint64_t{1} << lang.types.size();
    return make_sequent(subset_of(lang.types, rng.below(rows)), subset_of(lang.types, rng.below(rows)));
}

Classification random_classification(const IfLanguage& lang, Rng& rng, int max_instances) {
    const int k = rng.range(0, max_instances);
    std::vector<std::string> instances;
    std::vector<std::pair<std::string, std::string>> incidence;
    for (int i = 0; i < k; ++i) {
        std::string name = "i" + std::to_string(i);
        const std::uint64_t row = rng.below(std::uint64_t{1} << lang.types.size());
        for (std::size_t t = 0; t < lang.types.size(); ++t)
            if ((row >> t) & 1u) incidence.emplace_back(name, lang.types[t]);
        instances.push_back(std::move(name));
    }
    return make_classification(std::move(instances), lang.types, incidence);
}

std::vector<Sequent> random_theory(const IfLanguage& lang, Rng& rng, int max_sentences) {
    std::vector<Sequent> theory;
    const int k = rng.range(0, max_sentences);
    for (int i = 0; i < k; ++i) theory.push_back(random_sequent(lang, rng));
    std::sort(theory.begin(), theory.end());
    theory.erase(std::unique(theory.begin(), theory.end()), theory.end());
    return theory;
}

SymbolMap random_type_map(const IfLanguage& source, const IfLanguage& target, Rng& rng) {
    SymbolMap map;
    for (const auto& t : source.types)
        map[t] = target.types[rng.below(target.types.size())];
    return map;
}

namespace {

int row_index(const Classification& m, std::uint64_t row) {
    for (std::size_t i = 0; i < m.rows.size(); ++i)
        if (m.rows[i] == row) return static_cast<int>(i);
    return -1;
}

std::uint64_t preimage_row(const IfMorphism& type_part, const Classification& dst, std::uint64_t dst_row) {
    std::uint64_t out = 0;
    for (std::size_t y = 0; y < type_part.source.types.size(); ++y) {
        const std::string& image = type_part.map.at(type_part.source.types[y]);
        std::size_t yi = 0;
        while (dst.types[yi] != image) ++yi;
        if ((dst_row >> yi) & 1u) out |= std::uint64_t{1} << y;
    }
    return out;
}

void add_instance(Classification& m, const std::string& name, std::uint64_t row) {
    std::vector<std::pair<std::string, std::string>> incidence;
    for (std::size_t x = 0; x < m.instances.size(); ++x)
        for (std::size_t y = 0; y < m.types.size(); ++y)
            if ((m.rows[x] >> y) & 1u) incidence.emplace_back(m.instances[x], m.types[y]);
    for (std::size_t y = 0; y < m.types.size(); ++y)
        if ((row >> y) & 1u) incidence.emplace_back(name, m.types[y]);
    auto instances = m.instances;
    instances.push_back(name);
    m = make_classification(std::move(instances), m.types, incidence);
}

bool has_nonempty_model(const Specification<IfInstitution>& t, int bound) {
    for (const auto& m : models_of(t, bound))
        if (!m.instances.empty()) return true;
    return false;
}

} // namespace

InformationSystem<IfInstitution> random_information_system(const RandomSystemOptions& opts, Rng& rng) {
    for (int attempt = 0; attempt < 64; ++attempt) {
        const int n = rng.range(1, opts.max_nodes);
        ShapeGraph shape;
        for (int i = 0; i < n; ++i) shape.nodes.push_back("n" + std::to_string(i));
        const int e = rng.range(0, opts.max_edges);
        for (int i = 0; i < e; ++i)
            shape.edges.push_back(ShapeEdge{"e" + std::to_string(i), rng.range(0, n - 1), rng.range(0, n - 1)});

        std::vector<IfLanguage> langs;
        std::vector<Classification> structures;
        for (int i = 0; i < n; ++i) {
            langs.push_back(random_language(rng, opts.max_types));
            structures.push_back(random_classification(langs.back(), rng, opts.max_instances));
        }
        std::vector<SymbolMap> type_maps;
        for (const auto& edge : shape.edges)
            type_maps.push_back(random_type_map(langs[static_cast<std::size_t>(edge.source)],
                                                langs[static_cast<std::size_t>(edge.target)], rng));

        // Instance repair: every target instance needs a source instance
        // carrying exactly the preimage row.  Additions can cascade along
        // other edges; iterate to a fixpoint.
        std::vector<int> fresh(static_cast<std::size_t>(n), 0);
        bool changed = true;
        while (changed) {
            changed = false;
            for (std::size_t ei = 0; ei < shape.edges.size(); ++ei) {
                const auto& edge = shape.edges[ei];
                auto& src = structures[static_cast<std::size_t>(edge.source)];
                const auto& dst = structures[static_cast<std::size_t>(edge.target)];
                const IfMorphism type_part{langs[static_cast<std::size_t>(edge.source)],
                                           langs[static_cast<std::size_t>(edge.target)], type_maps[ei]};
                for (std::size_t x = 0; x < dst.instances.size(); ++x) {
                    const std::uint64_t need = preimage_row(type_part, dst, dst.rows[x]);
                    if (row_index(src, need) < 0) {
                        add_instance(src, "q" + std::to_string(fresh[static_cast<std::size_t>(edge.source)]++), need);
                        changed = true;
                    }
                }
            }
        }

        std::vector<Infomorphism> edges;
        for (std::size_t ei = 0; ei < shape.edges.size(); ++ei) {
            const auto& edge = shape.edges[ei];
            const auto& src = structures[static_cast<std::size_t>(edge.source)];
            const auto& dst = structures[static_cast<std::size_t>(edge.target)];
            Infomorphism f;
            f.type_part = IfMorphism{langs[static_cast<std::size_t>(edge.source)],
                                     langs[static_cast<std::size_t>(edge.target)], type_maps[ei]};
            for (std::size_t x = 0; x < dst.instances.size(); ++x) {
                int idx = row_index(src, preimage_row(f.type_part, dst, dst.rows[x]));
                f.instance_map[dst.instances[x]] = src.instances[static_cast<std::size_t>(idx)];
            }
            edges.push_back(std::move(f));
        }

        std::vector<std::vector<Sequent>> theories;
        for (int i = 0; i < n; ++i) theories.push_back(random_theory(langs[static_cast<std::size_t>(i)], rng, opts.max_theory));
        // Propagate translated theories forward until every edge preserves
        // membership syntactically.
        changed = true;
        while (changed) {
            changed = false;
            for (std::size_t ei = 0; ei < shape.edges.size(); ++ei) {
                const auto& edge = shape.edges[ei];
                auto& dst = theories[static_cast<std::size_t>(edge.target)];
                for (const auto& s : theories[static_cast<std::size_t>(edge.source)]) {
                    Sequent image = translate(edges[ei].type_part, s);
                    if (!std::binary_search(dst.begin(), dst.end(), image)) {
                        dst.insert(std::lower_bound(dst.begin(), dst.end(), image), image);
                        changed = true;
                    }
                }
            }
        }

        InformationSystem<IfInstitution> out;
        out.shape = shape;
        out.edges = edges;
        for (int i = 0; i < n; ++i)
            out.nodes.push_back(Logic<IfInstitution>{langs[static_cast<std::size_t>(i)],
                                                     structures[static_cast<std::size_t>(i)],
                                                     theories[static_cast<std::size_t>(i)]});
        if (opts.require_nonempty_models) {
            bool ok = true;
            for (const auto& l : out.nodes)
                if (!has_nonempty_model(l.specification(), opts.bound)) { ok = false; break; }
            if (!ok) continue;
        }
        return out;
    }
    fail("random_information_system: no admissible system found (constraints too tight)");
}

} // namespace syscons::ifl
