#include "syscons/if_institution.hpp"

#include <algorithm>
#include <set>

namespace syscons::ifl {

namespace {

std::vector<std::string> sorted_unique(std::vector<std::string> v, const char* what) {
    std::sort(v.begin(), v.end());
    for (std::size_t i = 1; i < v.size(); ++i)
        require(v[i] != v[i - 1], std::string(what) + " '" + v[i] + "' listed twice");
    return v;
}

int index_of(const std::vector<std::string>& v, const std::string& s) {
    auto it = std::lower_bound(v.begin(), v.end(), s);
    if (it == v.end() || *it != s) return -1;
    return static_cast<int>(it - v.begin());
}

std::uint64_t type_mask(const Classification& m, const std::vector<std::string>& types) {
    std::uint64_t mask = 0;
    for (const auto& t : types) {
        int i = index_of(m.types, t);
        require(i >= 0, "sequent mentions unknown type '" + t + "'");
        mask |= std::uint64_t{1} << i;
    }
    return mask;
}

std::string join(const std::vector<std::string>& v, const char* sep) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += sep;
        out += v[i];
    }
    return out;
}

std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t");
    return s.substr(a, b - a + 1);
}

std::vector<std::string> split_side(const std::string& side, const std::string& text) {
    std::vector<std::string> out;
    if (trim(side).empty()) return out;
    std::size_t pos = 0;
    while (true) {
        std::size_t comma = side.find(',', pos);
        std::string tok = trim(side.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos));
        require(!tok.empty(), "empty type name in sequent '" + text + "'");
        out.push_back(tok);
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return out;
}

} // namespace

IfLanguage make_language(std::vector<std::string> types) {
    return IfLanguage{sorted_unique(std::move(types), "type")};
}

Sequent make_sequent(std::vector<std::string> antecedent, std::vector<std::string> succedent) {
    auto norm = [](std::vector<std::string> v) {
        std::sort(v.begin(), v.end());
        v.erase(std::unique(v.begin(), v.end()), v.end());
        return v;
    };
    return Sequent{norm(std::move(antecedent)), norm(std::move(succedent))};
}

Classification make_classification(std::vector<std::string> instances,
                                   std::vector<std::string> types,
                                   const std::vector<std::pair<std::string, std::string>>& incidence) {
    Classification m;
    m.instances = sorted_unique(std::move(instances), "instance");
    m.types = sorted_unique(std::move(types), "type");
    require(m.types.size() <= 64, "classification exceeds 64 types");
    m.rows.assign(m.instances.size(), 0);
    for (const auto& [x, y] : incidence) {
        int xi = index_of(m.instances, x);
        require(xi >= 0, "incidence pair references unknown instance '" + x + "'");
        int yi = index_of(m.types, y);
        require(yi >= 0, "incidence pair references unknown type '" + y + "'");
        m.rows[static_cast<std::size_t>(xi)] |= std::uint64_t{1} << yi;
    }
    return m;
}

bool incident(const Classification& m, const std::string& instance, const std::string& type) {
    int xi = index_of(m.instances, instance);
    require(xi >= 0, "unknown instance '" + instance + "'");
    int yi = index_of(m.types, type);
    require(yi >= 0, "unknown type '" + type + "'");
    return (m.rows[static_cast<std::size_t>(xi)] >> yi) & 1u;
}

bool satisfies(const Classification& m, const Sequent& s) {
    const std::uint64_t gamma = type_mask(m, s.antecedent);
    const std::uint64_t delta = type_mask(m, s.succedent);
    for (std::uint64_t row : m.rows)
        if ((row & gamma) == gamma && (row & delta) == 0) return false;
    return true;
}

Sequent translate(const IfMorphism& m, const Sequent& s) {
    auto image = [&](const std::vector<std::string>& side) {
        std::vector<std::string> out;
        out.reserve(side.size());
        for (const auto& t : side) out.push_back(image_of(m.map, t));
        return out;
    };
    return make_sequent(image(s.antecedent), image(s.succedent));
}

Classification reduct(const IfMorphism& m, const Classification& m2) {
    require(m2.types == m.target.types, "reduct: classification is not over the morphism target");
    Classification out;
    out.instances = m2.instances;
    out.types = m.source.types;
    out.rows.assign(out.instances.size(), 0);
    for (std::size_t y = 0; y < out.types.size(); ++y) {
        int target_index = index_of(m2.types, image_of(m.map, out.types[y]));
        require(target_index >= 0, "reduct: morphism image outside target language");
        for (std::size_t x = 0; x < out.instances.size(); ++x)
            if ((m2.rows[x] >> target_index) & 1u) out.rows[x] |= std::uint64_t{1} << y;
    }
    return out;
}

std::vector<Sequent> sentence_universe(const IfLanguage& lang) {
    const int n = static_cast<int>(lang.types.size());
    require(n <= kUniverseTypeCap, "language exceeds the sentence-universe cap of " +
                                       std::to_string(kUniverseTypeCap) + " types");
    auto subset = [&](std::uint64_t mask) {
        std::vector<std::string> out;
        for (int i = 0; i < n; ++i)
            if ((mask >> i) & 1u) out.push_back(lang.types[static_cast<std::size_t>(i)]);
        return out;
    };
    std::vector<Sequent> out;
    const std::uint64_t limit = std::uint64_t{1} << n;
    out.reserve(static_cast<std::size_t>(limit * limit));
    for (std::uint64_t g = 0; g < limit; ++g)
        for (std::uint64_t d = 0; d < limit; ++d) out.push_back(Sequent{subset(g), subset(d)});
    return out;
}

std::vector<Classification> enumerate_canonical_structures(const IfLanguage& lang) {
    const int n = static_cast<int>(lang.types.size());
    require(n <= kEnumerationTypeCap, "language exceeds the structure-enumeration cap of " +
                                          std::to_string(kEnumerationTypeCap) + " types");
    const std::uint64_t row_count = std::uint64_t{1} << n;
    const std::uint64_t set_count = std::uint64_t{1} << row_count;
    auto row_name = [](std::uint64_t row) {
        std::string digits = std::to_string(row);
        return "r" + std::string(2 - std::min<std::size_t>(2, digits.size()), '0') + digits;
    };
    std::vector<Classification> out;
    out.reserve(static_cast<std::size_t>(set_count));
    for (std::uint64_t rows = 0; rows < set_count; ++rows) {
        Classification m;
        m.types = lang.types;
        for (std::uint64_t r = 0; r < row_count; ++r) {
            if (!((rows >> r) & 1u)) continue;
            m.instances.push_back(row_name(r));
            m.rows.push_back(r);
        }
        out.push_back(std::move(m));
    }
    return out;
}

std::vector<Classification> enumerate_adequate_structures(const IfLanguage& lang) {
    const int n = static_cast<int>(lang.types.size());
    require(n <= kUniverseTypeCap, "language exceeds the structure-enumeration cap of " +
                                       std::to_string(kUniverseTypeCap) + " types");
    const std::uint64_t row_count = std::uint64_t{1} << n;
    std::vector<Classification> out;
    out.reserve(static_cast<std::size_t>(row_count) + 1);
    Classification empty;
    empty.types = lang.types;
    out.push_back(std::move(empty));
    for (std::uint64_t r = 0; r < row_count; ++r) {
        Classification m;
        m.types = lang.types;
        m.instances.push_back("r" + std::to_string(r));
        m.rows.push_back(r);
        out.push_back(std::move(m));
    }
    return out;
}

std::optional<std::pair<std::string, std::string>> infomorphism_violation(const Infomorphism& f,
                                                                          const Classification& source,
                                                                          const Classification& target) {
    for (const auto& x2 : target.instances) {
        const std::string x1 = image_of(f.instance_map, x2);
        for (const auto& y1 : source.types) {
            const std::string y2 = image_of(f.type_part.map, y1);
            if (incident(source, x1, y1) != incident(target, x2, y2)) return std::make_pair(x2, y1);
        }
    }
    return std::nullopt;
}

ClassificationColimit classification_colimit(const ShapeGraph& shape,
                                             const std::vector<Classification>& nodes,
                                             const std::vector<Infomorphism>& edges) {
    validate_shape(shape);
    require(nodes.size() == shape.nodes.size(), "node count does not match shape");
    require(edges.size() == shape.edges.size(), "edge count does not match shape");

    for (std::size_t e = 0; e < edges.size(); ++e) {
        const auto& edge = shape.edges[e];
        const auto& f = edges[e];
        const auto& src = nodes[static_cast<std::size_t>(edge.source)];
        const auto& dst = nodes[static_cast<std::size_t>(edge.target)];
        require(f.type_part.source.types == src.types,
                "edge '" + edge.id + "': type map source differs from the source node language");
        require(f.type_part.target.types == dst.types,
                "edge '" + edge.id + "': type map target differs from the target node language");
        validate_morphism_map(f.type_part);
        for (const auto& x2 : dst.instances)
            require(index_of(src.instances, image_of(f.instance_map, x2)) >= 0,
                    "edge '" + edge.id + "': instance map sends '" + x2 + "' outside the source instances");
        if (auto w = infomorphism_violation(f, src, dst))
            fail("edge '" + edge.id + "' fails the infomorphism condition at (instance '" + w->first +
                 "', type '" + w->second + "')");
    }

    // Core types: colimit of the type sets along the type maps.
    FiniteSetDiagram diagram;
    diagram.shape = shape;
    for (const auto& m : nodes) diagram.node_sets.push_back(m.types);
    for (const auto& f : edges) diagram.edge_functions.push_back(f.type_part.map);
    const SetColimit type_colimit = colimit_of_finite_sets(diagram);
    const IfLanguage core_language = make_language(type_colimit.class_names);

    // Core instances: tuples compatible with every edge's instance map.
    std::vector<std::vector<std::size_t>> tuples;
    std::vector<std::size_t> current(nodes.size(), 0);
    auto compatible = [&](const std::vector<std::size_t>& tup) {
        for (std::size_t e = 0; e < edges.size(); ++e) {
            const auto& edge = shape.edges[e];
            const auto& src = nodes[static_cast<std::size_t>(edge.source)];
            const auto& dst = nodes[static_cast<std::size_t>(edge.target)];
            const auto& xj = dst.instances[tup[static_cast<std::size_t>(edge.target)]];
            if (image_of(edges[e].instance_map, xj) != src.instances[tup[static_cast<std::size_t>(edge.source)]])
                return false;
        }
        return true;
    };
    bool any_empty = false;
    for (const auto& m : nodes)
        if (m.instances.empty()) any_empty = true;
    if (!any_empty) {
        while (true) {
            if (compatible(current)) tuples.push_back(current);
            std::size_t k = nodes.size();
            while (k > 0) {
                --k;
                if (++current[k] < nodes[k].instances.size()) break;
                current[k] = 0;
                if (k == 0) { k = nodes.size() + 1; break; }
            }
            if (nodes.empty() || k > nodes.size()) break;
        }
    }

    ClassificationColimit out;
    out.core_language = core_language;
    std::vector<std::pair<std::string, std::string>> incidence;
    std::vector<std::string> tuple_names;
    for (const auto& tup : tuples) {
        std::vector<std::string> parts;
        for (std::size_t n = 0; n < nodes.size(); ++n) parts.push_back(nodes[n].instances[tup[n]]);
        tuple_names.push_back("(" + join(parts, ",") + ")");
    }
    // Incidence of a tuple at a merged type class must not depend on the
    // representative; the infomorphism conditions on the edges guarantee it,
    // and the loop re-checks.
    for (std::size_t t = 0; t < tuples.size(); ++t) {
        for (std::size_t c = 0; c < type_colimit.classes.size(); ++c) {
            bool value = false, first = true;
            for (const auto& [node, type] : type_colimit.classes[c]) {
                bool v = incident(nodes[static_cast<std::size_t>(node)],
                                  nodes[static_cast<std::size_t>(node)].instances[tuples[t][static_cast<std::size_t>(node)]],
                                  type);
                if (first) {
                    value = v;
                    first = false;
                } else {
                    require(v == value, "classification colimit: incidence of tuple '" + tuple_names[t] +
                                            "' at class '" + type_colimit.class_names[c] +
                                            "' depends on the representative");
                }
            }
            if (value) incidence.emplace_back(tuple_names[t], type_colimit.class_names[c]);
        }
    }
    out.core = make_classification(tuple_names, core_language.types, incidence);

    for (std::size_t n = 0; n < nodes.size(); ++n) {
        Infomorphism inj;
        inj.type_part = IfMorphism{IfLanguage{nodes[n].types}, core_language,
                                   type_colimit.injections[n]};
        for (std::size_t t = 0; t < tuples.size(); ++t)
            inj.instance_map[tuple_names[t]] = nodes[n].instances[tuples[t][n]];
        out.injections.push_back(std::move(inj));
    }
    return out;
}

std::string print_sequent(const Sequent& s) {
    std::string lhs = join(s.antecedent, ",");
    std::string rhs = join(s.succedent, ",");
    std::string out;
    if (!lhs.empty()) out += lhs + " ";
    out += "|-";
    if (!rhs.empty()) out += " " + rhs;
    return out;
}

Sequent parse_sequent(const std::string& text, const IfLanguage& lang) {
    std::size_t sep = text.find("|-");
    require(sep != std::string::npos, "sequent '" + text + "' is missing the '|-' separator");
    require(text.find("|-", sep + 2) == std::string::npos, "sequent '" + text + "' has more than one '|-'");
    auto ante = split_side(text.substr(0, sep), text);
    auto succ = split_side(text.substr(sep + 2), text);
    for (const auto& side : {&ante, &succ})
        for (const auto& t : *side)
            require(index_of(lang.types, t) >= 0, "sequent mentions unknown type '" + t + "'");
    return make_sequent(std::move(ante), std::move(succ));
}

std::string print_classification(const Classification& m) {
    std::string out = "{instances=[" + join(m.instances, ",") + "], types=[" + join(m.types, ",") + "], incidence=[";
    bool first = true;
    for (std::size_t x = 0; x < m.instances.size(); ++x)
        for (std::size_t y = 0; y < m.types.size(); ++y)
            if ((m.rows[x] >> y) & 1u) {
                if (!first) out += ",";
                out += "(" + m.instances[x] + "," + m.types[y] + ")";
                first = false;
            }
    return out + "]}";
}

LanguageColimit<IfInstitution> IfInstitution::language_colimit(const ShapeGraph& shape,
                                                               const std::vector<Language>& langs,
                                                               const std::vector<Morphism>& edges) {
    validate_shape(shape);
    require(langs.size() == shape.nodes.size(), "language count does not match shape");
    require(edges.size() == shape.edges.size(), "edge morphism count does not match shape");
    FiniteSetDiagram diagram;
    diagram.shape = shape;
    for (const auto& l : langs) diagram.node_sets.push_back(l.types);
    for (std::size_t e = 0; e < edges.size(); ++e) {
        const auto& edge = shape.edges[e];
        require(edges[e].source == langs[static_cast<std::size_t>(edge.source)],
                "edge '" + edge.id + "': morphism source differs from the source node language");
        require(edges[e].target == langs[static_cast<std::size_t>(edge.target)],
                "edge '" + edge.id + "': morphism target differs from the target node language");
        validate_morphism_map(edges[e]);
        diagram.edge_functions.push_back(edges[e].map);
    }
    const SetColimit colimit = colimit_of_finite_sets(diagram);
    LanguageColimit<IfInstitution> out;
    out.core = make_language(colimit.class_names);
    for (std::size_t n = 0; n < langs.size(); ++n)
        out.injections.push_back(Morphism{langs[n], out.core, colimit.injections[n]});
    return out;
}

IfInstitution::SystemMorphism IfInstitution::system_identity(const IndexedStructure<IfInstitution>& m) {
    Infomorphism f;
    f.type_part = identity_morphism(m.language);
    for (const auto& x : m.structure.instances) f.instance_map[x] = x;
    return f;
}

IfInstitution::SystemMorphism IfInstitution::system_compose(const SystemMorphism& a, const SystemMorphism& b) {
    Infomorphism f;
    f.type_part = syscons::compose(a.type_part, b.type_part);
    for (const auto& [x3, x2] : b.instance_map) f.instance_map[x3] = image_of(a.instance_map, x2);
    return f;
}

std::optional<std::string> IfInstitution::check_system_morphism(const SystemMorphism& f,
                                                                const IndexedStructure<IfInstitution>& source,
                                                                const IndexedStructure<IfInstitution>& target) {
    if (f.type_part.source != source.language) return "type map source differs from the source language";
    if (f.type_part.target != target.language) return "type map target differs from the target language";
    try {
        validate_morphism_map(f.type_part);
        for (const auto& x2 : target.structure.instances) {
            const std::string x1 = image_of(f.instance_map, x2);
            if (index_of(source.structure.instances, x1) < 0)
                return "instance map sends '" + x2 + "' outside the source instances";
        }
        if (auto w = infomorphism_violation(f, source.structure, target.structure))
            return "infomorphism condition fails at (instance '" + w->first + "', type '" + w->second + "')";
    } catch (const Error& e) {
        return std::string(e.what());
    }
    return std::nullopt;
}

std::pair<IndexedStructure<IfInstitution>, std::vector<IfInstitution::SystemMorphism>>
IfInstitution::semantic_core(const ShapeGraph& shape,
                             const std::vector<IndexedStructure<IfInstitution>>& nodes,
                             const std::vector<SystemMorphism>& edges) {
    std::vector<Classification> structures;
    for (const auto& n : nodes) {
        if (auto err = check_structure_over(n.language, n.structure)) fail(*err);
        structures.push_back(n.structure);
    }
    ClassificationColimit col = classification_colimit(shape, structures, edges);
    return {IndexedStructure<IfInstitution>{col.core_language, col.core}, col.injections};
}

std::vector<IfInstitution::SystemMorphism>
IfInstitution::enumerate_system_morphisms(const IndexedStructure<IfInstitution>& source,
                                          const IndexedStructure<IfInstitution>& target) {
    const auto& src_types = source.language.types;
    const auto& dst_types = target.language.types;
    const auto& src_inst = source.structure.instances;
    const auto& dst_inst = target.structure.instances;
    if ((!src_types.empty() && dst_types.empty()) || (!dst_inst.empty() && src_inst.empty())) return {};

    double space = 1.0;
    for (std::size_t i = 0; i < src_types.size(); ++i) space *= static_cast<double>(dst_types.size());
    for (std::size_t i = 0; i < dst_inst.size(); ++i) space *= static_cast<double>(src_inst.size());
    require(space <= static_cast<double>(1 << 22), "system morphism search space too large");

    std::vector<SymbolMap> type_maps{{}};
    for (const auto& y : src_types) {
        std::vector<SymbolMap> next;
        for (const auto& partial : type_maps)
            for (const auto& img : dst_types) {
                SymbolMap m = partial;
                m[y] = img;
                next.push_back(std::move(m));
            }
        type_maps = std::move(next);
    }
    std::vector<SymbolMap> instance_maps{{}};
    for (const auto& x : dst_inst) {
        std::vector<SymbolMap> next;
        for (const auto& partial : instance_maps)
            for (const auto& img : src_inst) {
                SymbolMap m = partial;
                m[x] = img;
                next.push_back(std::move(m));
            }
        instance_maps = std::move(next);
    }

    std::vector<SystemMorphism> out;
    out.reserve(type_maps.size() * instance_maps.size());
    for (const auto& tm : type_maps)
        for (const auto& im : instance_maps)
            out.push_back(Infomorphism{IfMorphism{source.language, target.language, tm}, im});
    return out;
}

} // namespace syscons::ifl
