#include "syscons/folf_institution.hpp"

#include <algorithm>
#include <cmath>

namespace syscons::folf {

SchemaSet SchemaSet::default_set() {
    return make_schema_set({Schema::Reflexivity, Schema::Symmetry, Schema::Transitivity, Schema::Totality,
                            Schema::Irreflexivity, Schema::Antisymmetry, Schema::UnaryAll, Schema::UnaryNone});
}

SchemaSet make_schema_set(std::vector<Schema> schemas) {
    std::sort(schemas.begin(), schemas.end());
    schemas.erase(std::unique(schemas.begin(), schemas.end()), schemas.end());
    return SchemaSet{std::move(schemas)};
}

namespace {

const std::pair<Schema, const char*> kSchemaNames[] = {
    {Schema::Reflexivity, "reflexivity"},   {Schema::Symmetry, "symmetry"},
    {Schema::Transitivity, "transitivity"}, {Schema::Totality, "totality"},
    {Schema::Irreflexivity, "irreflexivity"}, {Schema::Antisymmetry, "antisymmetry"},
    {Schema::UnaryAll, "unary_all"},        {Schema::UnaryNone, "unary_none"},
};

} // namespace

Schema schema_from_name(const std::string& name) {
    for (const auto& [s, n] : kSchemaNames)
        if (name == n) return s;
    fail("unknown schema name '" + name + "'");
}

std::string schema_name(Schema s) {
    for (const auto& [sch, n] : kSchemaNames)
        if (sch == s) return n;
    return "?";
}

std::vector<std::string> symbol_names(const FolfLanguage& l) {
    std::vector<std::string> out;
    for (const auto& s : l.signature.symbols) out.push_back(s.name);
    return out;
}

FiniteStructure make_structure(const RelSignature& sig, int carrier,
                               const std::map<std::string, std::set<std::vector<int>>>& tables) {
    require(carrier >= 1, "carrier size must be positive");
    FiniteStructure m;
    m.carrier = carrier;
    for (const auto& sym : sig.symbols) m.tables[sym.name] = {};
    for (const auto& [name, table] : tables) {
        int arity = sig.arity_of(name);
        require(arity >= 0, "table for unknown relation symbol '" + name + "'");
        for (const auto& tuple : table) {
            require(static_cast<int>(tuple.size()) == arity,
                    "tuple arity mismatch in table of '" + name + "'");
            for (int v : tuple)
                require(v >= 0 && v < carrier, "tuple component out of carrier range in table of '" + name + "'");
        }
        m.tables[name] = table;
    }
    return m;
}

namespace {

bool eval_at(const FiniteStructure& m, const Formula& f, std::vector<int>& env) {
    switch (f.kind) {
        case Formula::Kind::Rel: {
            auto it = m.tables.find(f.name);
            require(it != m.tables.end(), "structure has no table for relation symbol '" + f.name + "'");
            std::vector<int> tuple;
            tuple.reserve(f.vars.size());
            for (int v : f.vars) tuple.push_back(env[env.size() - 1 - static_cast<std::size_t>(v)]);
            return it->second.count(tuple) > 0;
        }
        case Formula::Kind::Eq:
            return env[env.size() - 1 - static_cast<std::size_t>(f.vars[0])] ==
                   env[env.size() - 1 - static_cast<std::size_t>(f.vars[1])];
        case Formula::Kind::Not: return !eval_at(m, *f.lhs, env);
        case Formula::Kind::And: return eval_at(m, *f.lhs, env) && eval_at(m, *f.rhs, env);
        case Formula::Kind::Or: return eval_at(m, *f.lhs, env) || eval_at(m, *f.rhs, env);
        case Formula::Kind::Implies: return !eval_at(m, *f.lhs, env) || eval_at(m, *f.rhs, env);
        case Formula::Kind::Forall:
            for (int v = 0; v < m.carrier; ++v) {
                env.push_back(v);
                bool ok = eval_at(m, *f.lhs, env);
                env.pop_back();
                if (!ok) return false;
            }
            return true;
        case Formula::Kind::Exists:
            for (int v = 0; v < m.carrier; ++v) {
                env.push_back(v);
                bool ok = eval_at(m, *f.lhs, env);
                env.pop_back();
                if (ok) return true;
            }
            return false;
    }
    fail("malformed formula node");
}

FormulaPtr rename_symbols(const Formula& f, const SymbolMap& map) {
    switch (f.kind) {
        case Formula::Kind::Rel: return make_rel(image_of(map, f.name), f.vars);
        case Formula::Kind::Eq: return make_eq(f.vars[0], f.vars[1]);
        case Formula::Kind::Not: return make_not(rename_symbols(*f.lhs, map));
        case Formula::Kind::And: return make_and(rename_symbols(*f.lhs, map), rename_symbols(*f.rhs, map));
        case Formula::Kind::Or: return make_or(rename_symbols(*f.lhs, map), rename_symbols(*f.rhs, map));
        case Formula::Kind::Implies:
            return make_implies(rename_symbols(*f.lhs, map), rename_symbols(*f.rhs, map));
        case Formula::Kind::Forall: return make_forall(f.name, rename_symbols(*f.lhs, map));
        case Formula::Kind::Exists: return make_exists(f.name, rename_symbols(*f.lhs, map));
    }
    fail("malformed formula node");
}

} // namespace

bool evaluate(const FiniteStructure& m, const FolfSentence& s) {
    std::vector<int> env;
    return eval_at(m, *s.ast, env);
}

FolfSentence translate(const FolfMorphism& m, const FolfSentence& s) {
    return FolfSentence{rename_symbols(*s.ast, m.map)};
}

FiniteStructure reduct(const FolfMorphism& m, const FiniteStructure& m2) {
    FiniteStructure out;
    out.carrier = m2.carrier;
    for (const auto& sym : m.source.signature.symbols) {
        auto it = m2.tables.find(image_of(m.map, sym.name));
        require(it != m2.tables.end(), "reduct: target structure has no table for '" + image_of(m.map, sym.name) + "'");
        out.tables[sym.name] = it->second;
    }
    return out;
}

std::vector<FiniteStructure> enumerate_structures(const RelSignature& sig, int max_carrier) {
    require(max_carrier >= 1, "max_carrier must be positive");
    std::vector<FiniteStructure> out;
    for (int n = 1; n <= max_carrier; ++n) {
        // tuples per symbol, lexicographic
        std::vector<std::vector<std::vector<int>>> tuples_per_symbol;
        long long bits = 0;
        for (const auto& sym : sig.symbols) {
            long long count = 1;
            for (int k = 0; k < sym.arity; ++k) count *= n;
            bits += count;
            std::vector<std::vector<int>> tuples;
            std::vector<int> t(static_cast<std::size_t>(sym.arity), 0);
            for (long long i = 0; i < count; ++i) {
                tuples.push_back(t);
                for (std::size_t k = t.size(); k > 0; --k) {
                    if (++t[k - 1] < n) break;
                    t[k - 1] = 0;
                }
            }
            tuples_per_symbol.push_back(std::move(tuples));
        }
        require(bits <= kTableBitCap,
                "structure enumeration cap exceeded at carrier " + std::to_string(n) + ": would require 2^" +
                    std::to_string(bits) + " structures (cap 2^" + std::to_string(kTableBitCap) + ")");
        const std::uint64_t total = std::uint64_t{1} << bits;
        for (std::uint64_t mask = 0; mask < total; ++mask) {
            FiniteStructure m;
            m.carrier = n;
            int bit = 0;
            for (std::size_t s = 0; s < sig.symbols.size(); ++s) {
                auto& table = m.tables[sig.symbols[s].name];
                for (const auto& tuple : tuples_per_symbol[s]) {
                    if ((mask >> bit) & 1u) table.insert(tuple);
                    ++bit;
                }
            }
            out.push_back(std::move(m));
        }
    }
    return out;
}

std::vector<FolfSentence> sentence_universe(const RelSignature& sig, const SchemaSet& schemas) {
    std::vector<FolfSentence> out;
    auto has = [&](Schema s) {
        return std::find(schemas.schemas.begin(), schemas.schemas.end(), s) != schemas.schemas.end();
    };
    for (const auto& sym : sig.symbols) {
        const std::string& r = sym.name;
        if (sym.arity == 1) {
            if (has(Schema::UnaryAll)) out.push_back(FolfSentence{make_forall("x", make_rel(r, {0}))});
            if (has(Schema::UnaryNone)) out.push_back(FolfSentence{make_forall("x", make_not(make_rel(r, {0})))});
            continue;
        }
        if (sym.arity != 2) continue;
        if (has(Schema::Reflexivity)) out.push_back(FolfSentence{make_forall("x", make_rel(r, {0, 0}))});
        if (has(Schema::Symmetry))
            out.push_back(FolfSentence{
                make_forall("x", make_forall("y", make_implies(make_rel(r, {1, 0}), make_rel(r, {0, 1}))))});
        if (has(Schema::Transitivity))
            out.push_back(FolfSentence{make_forall(
                "x", make_forall("y", make_forall("z", make_implies(make_and(make_rel(r, {2, 1}), make_rel(r, {1, 0})),
                                                                    make_rel(r, {2, 0})))))});
        if (has(Schema::Totality))
            out.push_back(FolfSentence{
                make_forall("x", make_forall("y", make_or(make_rel(r, {1, 0}), make_rel(r, {0, 1}))))});
        if (has(Schema::Irreflexivity)) out.push_back(FolfSentence{make_forall("x", make_not(make_rel(r, {0, 0})))});
        if (has(Schema::Antisymmetry))
            out.push_back(FolfSentence{make_forall(
                "x", make_forall("y", make_implies(make_and(make_rel(r, {1, 0}), make_rel(r, {0, 1})),
                                                   make_eq(1, 0))))});
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

void FolfInstitution::validate_morphism(const Morphism& m) {
    validate_morphism_map(m);
    for (const auto& sym : m.source.signature.symbols) {
        int target_arity = m.target.signature.arity_of(image_of(m.map, sym.name));
        require(target_arity == sym.arity, "signature morphism does not preserve arity at '" + sym.name + "'");
    }
}

std::optional<std::string> FolfInstitution::check_structure_over(const Language& l, const Structure& m) {
    for (const auto& sym : l.signature.symbols) {
        auto it = m.tables.find(sym.name);
        if (it == m.tables.end()) return "structure has no table for relation symbol '" + sym.name + "'";
        for (const auto& tuple : it->second) {
            if (static_cast<int>(tuple.size()) != sym.arity) return "tuple arity mismatch in table of '" + sym.name + "'";
            for (int v : tuple)
                if (v < 0 || v >= m.carrier) return "tuple component out of carrier range in table of '" + sym.name + "'";
        }
    }
    if (m.tables.size() != l.signature.symbols.size()) return "structure has a table for a symbol outside the signature";
    return std::nullopt;
}

LanguageColimit<FolfInstitution> FolfInstitution::language_colimit(const ShapeGraph& shape,
                                                                   const std::vector<Language>& langs,
                                                                   const std::vector<Morphism>& edges) {
    validate_shape(shape);
    require(langs.size() == shape.nodes.size(), "language count does not match shape");
    require(edges.size() == shape.edges.size(), "edge morphism count does not match shape");
    FiniteSetDiagram diagram;
    diagram.shape = shape;
    for (const auto& l : langs) diagram.node_sets.push_back(symbol_names(l));
    for (std::size_t e = 0; e < edges.size(); ++e) {
        const auto& edge = shape.edges[e];
        require(edges[e].source == langs[static_cast<std::size_t>(edge.source)],
                "edge '" + edge.id + "': morphism source differs from the source node language");
        require(edges[e].target == langs[static_cast<std::size_t>(edge.target)],
                "edge '" + edge.id + "': morphism target differs from the target node language");
        validate_morphism(edges[e]);
        diagram.edge_functions.push_back(edges[e].map);
    }
    const SetColimit colimit = colimit_of_finite_sets(diagram);

    // Arity of a class: all members must agree.
    std::vector<RelSymbol> core_symbols;
    for (std::size_t c = 0; c < colimit.classes.size(); ++c) {
        int arity = -1;
        for (const auto& [node, name] : colimit.classes[c]) {
            int a = langs[static_cast<std::size_t>(node)].signature.arity_of(name);
            if (arity < 0) arity = a;
            require(arity == a, "arity clash when merging symbol '" + name + "' into class '" +
                                    colimit.class_names[c] + "'");
        }
        core_symbols.push_back(RelSymbol{colimit.class_names[c], arity});
    }

    std::vector<Schema> merged;
    for (const auto& l : langs)
        merged.insert(merged.end(), l.schemas.schemas.begin(), l.schemas.schemas.end());

    LanguageColimit<FolfInstitution> out;
    out.core = FolfLanguage{make_signature(std::move(core_symbols)), make_schema_set(std::move(merged))};
    for (std::size_t n = 0; n < langs.size(); ++n)
        out.injections.push_back(Morphism{langs[n], out.core, colimit.injections[n]});
    return out;
}

std::string FolfInstitution::print_structure(const Structure& m) {
    std::string out = "{carrier=" + std::to_string(m.carrier);
    for (const auto& [name, table] : m.tables) {
        out += ", " + name + "={";
        bool first = true;
        for (const auto& tuple : table) {
            if (!first) out += ",";
            first = false;
            out += "(";
            for (std::size_t i = 0; i < tuple.size(); ++i) {
                if (i) out += ",";
                out += std::to_string(tuple[i]);
            }
            out += ")";
        }
        out += "}";
    }
    return out + "}";
}

std::optional<std::string> FolfInstitution::check_system_morphism(const SystemMorphism& m,
                                                                  const IndexedStructure<FolfInstitution>& source,
                                                                  const IndexedStructure<FolfInstitution>& target) {
    if (m.source != source.language) return "morphism source differs from the source language";
    if (m.target != target.language) return "morphism target differs from the target language";
    try {
        validate_morphism(m);
        for (const auto& s : sentence_universe(source.language))
            if (satisfies(source.structure, s) && !satisfies(target.structure, translate(m, s)))
                return "satisfaction of '" + print_sentence(s) + "' is not preserved";
    } catch (const Error& e) {
        return std::string(e.what());
    }
    return std::nullopt;
}

std::pair<IndexedStructure<FolfInstitution>, std::vector<FolfInstitution::SystemMorphism>>
FolfInstitution::semantic_core(const ShapeGraph& shape,
                               const std::vector<IndexedStructure<FolfInstitution>>& nodes,
                               const std::vector<SystemMorphism>& edges) {
    std::vector<Language> langs;
    for (const auto& n : nodes) {
        if (auto err = check_structure_over(n.language, n.structure)) fail(*err);
        langs.push_back(n.language);
    }
    for (std::size_t i = 1; i < nodes.size(); ++i)
        require(nodes[i].structure.carrier == nodes[0].structure.carrier,
                "semantic core requires a shared carrier; node '" + shape.nodes[i] + "' has carrier " +
                    std::to_string(nodes[i].structure.carrier) + " but node '" + shape.nodes[0] + "' has " +
                    std::to_string(nodes[0].structure.carrier));
    LanguageColimit<FolfInstitution> col = language_colimit(shape, langs, edges);

    FiniteStructure core;
    core.carrier = nodes.empty() ? 1 : nodes[0].structure.carrier;
    std::map<std::string, bool> assigned;
    for (const auto& sym : col.core.signature.symbols) core.tables[sym.name] = {};
    for (std::size_t n = 0; n < nodes.size(); ++n) {
        for (const auto& sym : nodes[n].language.signature.symbols) {
            const std::string cls = image_of(col.injections[n].map, sym.name);
            const auto& table = nodes[n].structure.tables.at(sym.name);
            auto& merged = core.tables[cls];
            if (!assigned[cls]) {
                merged = table;
                assigned[cls] = true;
            } else if (merged != table) {
                std::string diff;
                for (const auto& t : table)
                    if (!merged.count(t)) {
                        diff = "(";
                        for (std::size_t i = 0; i < t.size(); ++i) diff += (i ? "," : "") + std::to_string(t[i]);
                        diff += ")";
                        break;
                    }
                if (diff.empty())
                    for (const auto& t : merged)
                        if (!table.count(t)) {
                            diff = "(";
                            for (std::size_t i = 0; i < t.size(); ++i) diff += (i ? "," : "") + std::to_string(t[i]);
                            diff += ")";
                            break;
                        }
                fail("semantic core: merged symbol '" + cls + "' has disagreeing tables at node '" +
                     shape.nodes[n] + "' (symbol '" + sym.name + "', tuple " + diff + " differs)");
            }
        }
    }
    return {IndexedStructure<FolfInstitution>{col.core, core}, col.injections};
}

std::vector<FolfInstitution::SystemMorphism>
FolfInstitution::enumerate_system_morphisms(const IndexedStructure<FolfInstitution>& source,
                                            const IndexedStructure<FolfInstitution>& target) {
    const auto src = symbol_names(source.language);
    const auto dst = symbol_names(target.language);
    if (!src.empty() && dst.empty()) return {};
    double space = 1.0;
    for (std::size_t i = 0; i < src.size(); ++i) space *= static_cast<double>(dst.size());
    require(space <= static_cast<double>(1 << 22), "system morphism search space too large");
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
    std::vector<SystemMorphism> out;
    for (auto& m : maps) out.push_back(FolfMorphism{source.language, target.language, std::move(m)});
    return out;
}

} // namespace syscons::folf
