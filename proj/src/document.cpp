#include "syscons/document.hpp"

#include <fstream>
#include <map>
#include <sstream>

namespace syscons::cli {

namespace {

using nlohmann::ordered_json;

const ordered_json& member(const ordered_json& obj, const char* key, const std::string& ctx) {
    auto it = obj.find(key);
    require(it != obj.end(), ctx + ": missing key '" + std::string(key) + "'");
    return *it;
}

void check_keys(const ordered_json& obj, std::initializer_list<const char*> allowed, const std::string& ctx) {
    require(obj.is_object(), ctx + ": expected an object");
    for (const auto& [k, v] : obj.items()) {
        (void)v;
        bool ok = false;
        for (const char* a : allowed)
            if (k == a) { ok = true; break; }
        require(ok, ctx + ": unknown key '" + k + "'");
    }
}

std::string expect_string(const ordered_json& v, const std::string& ctx) {
    require(v.is_string(), ctx + ": expected a string");
    return v.get<std::string>();
}

int expect_int(const ordered_json& v, const std::string& ctx) {
    require(v.is_number_integer(), ctx + ": expected an integer");
    return v.get<int>();
}

std::vector<std::string> expect_string_array(const ordered_json& v, const std::string& ctx) {
    require(v.is_array(), ctx + ": expected an array");
    std::vector<std::string> out;
    for (const auto& item : v) out.push_back(expect_string(item, ctx));
    return out;
}

struct CommonParts {
    ordered_json languages;
    ordered_json structures;
    ordered_json morphisms;
    ShapeGraph shape;
    std::vector<std::string> edge_morphism_ids;
    ordered_json nodes;
    int bound = 3;
    ordered_json schemas; // may be null
    ordered_json search;  // may be null
};

CommonParts parse_common(const ordered_json& root) {
    check_keys(root, {"institution", "options", "languages", "structures", "morphisms", "shape", "nodes"},
               "document");
    CommonParts parts;
    if (root.contains("options")) {
        const auto& options = root.at("options");
        check_keys(options, {"bound", "schemas", "search"}, "options");
        if (options.contains("bound")) {
            parts.bound = expect_int(options.at("bound"), "options.bound");
            require(parts.bound >= 1, "options.bound: must be positive");
        }
        if (options.contains("schemas")) parts.schemas = options.at("schemas");
        if (options.contains("search")) parts.search = options.at("search");
    }
    parts.languages = root.contains("languages") ? root.at("languages") : ordered_json::object();
    parts.structures = root.contains("structures") ? root.at("structures") : ordered_json::object();
    parts.morphisms = root.contains("morphisms") ? root.at("morphisms") : ordered_json::object();
    require(parts.languages.is_object(), "languages: expected an object");
    require(parts.structures.is_object(), "structures: expected an object");
    require(parts.morphisms.is_object(), "morphisms: expected an object");

    const auto& shape = member(root, "shape", "document");
    check_keys(shape, {"nodes", "edges"}, "shape");
    parts.shape.nodes = expect_string_array(member(shape, "nodes", "shape"), "shape.nodes");
    if (shape.contains("edges")) {
        require(shape.at("edges").is_array(), "shape.edges: expected an array");
        for (const auto& e : shape.at("edges")) {
            check_keys(e, {"id", "source", "target", "morphism"}, "shape.edges entry");
            ShapeEdge edge;
            edge.id = expect_string(member(e, "id", "shape edge"), "shape edge id");
            const std::string src = expect_string(member(e, "source", "shape edge"), "shape edge source");
            const std::string dst = expect_string(member(e, "target", "shape edge"), "shape edge target");
            edge.source = parts.shape.node_index(src);
            require(edge.source >= 0, "edge '" + edge.id + "': dangling source node '" + src + "'");
            edge.target = parts.shape.node_index(dst);
            require(edge.target >= 0, "edge '" + edge.id + "': dangling target node '" + dst + "'");
            parts.shape.edges.push_back(edge);
            parts.edge_morphism_ids.push_back(
                expect_string(member(e, "morphism", "shape edge"), "shape edge morphism"));
        }
    }
    validate_shape(parts.shape);

    parts.nodes = member(root, "nodes", "document");
    require(parts.nodes.is_object(), "nodes: expected an object");
    for (const auto& [id, node] : parts.nodes.items()) {
        require(parts.shape.node_index(id) >= 0, "nodes: entry '" + id + "' does not appear in the shape");
        require(node.is_object(), "node '" + id + "': expected an object");
        require(!node.contains("system") && !node.contains("nodes") && !node.contains("shape"),
                "node '" + id + "': nested system files are not supported");
        check_keys(node, {"language", "structure", "theory"}, "node '" + id + "'");
    }
    for (const auto& id : parts.shape.nodes)
        require(parts.nodes.contains(id), "shape node '" + id + "' has no entry under 'nodes'");
    return parts;
}

// Level detection: every node carries a structure (semantic) or none does
// (formal).
Level detect_level(const CommonParts& parts) {
    std::size_t with = 0;
    for (const auto& id : parts.shape.nodes)
        if (parts.nodes.at(id).contains("structure")) ++with;
    if (with == 0) return Level::Formal;
    require(with == parts.shape.nodes.size(),
            "nodes: either every node carries a structure (semantic system) or none does (formal system)");
    return Level::Semantic;
}

template <typename Lang>
struct NamedTables {
    std::map<std::string, Lang> languages;

    const Lang& get(const std::string& id, const std::string& ctx) const {
        auto it = languages.find(id);
        require(it != languages.end(), ctx + ": dangling language reference '" + id + "'");
        return it->second;
    }
};

struct MorphismEntry {
    std::string source_id;
    std::string target_id;
    SymbolMap map;
    SymbolMap instance_map;
    bool has_instance_map = false;
};

std::map<std::string, MorphismEntry> parse_morphism_entries(const ordered_json& morphisms) {
    std::map<std::string, MorphismEntry> out;
    for (const auto& [id, m] : morphisms.items()) {
        check_keys(m, {"source", "target", "map", "instance_map"}, "morphism '" + id + "'");
        MorphismEntry entry;
        entry.source_id = expect_string(member(m, "source", "morphism '" + id + "'"), "morphism source");
        entry.target_id = expect_string(member(m, "target", "morphism '" + id + "'"), "morphism target");
        const auto& map = member(m, "map", "morphism '" + id + "'");
        require(map.is_object(), "morphism '" + id + "': map must be an object");
        for (const auto& [k, v] : map.items()) entry.map[k] = expect_string(v, "morphism '" + id + "' map");
        if (m.contains("instance_map")) {
            entry.has_instance_map = true;
            require(m.at("instance_map").is_object(), "morphism '" + id + "': instance_map must be an object");
            for (const auto& [k, v] : m.at("instance_map").items())
                entry.instance_map[k] = expect_string(v, "morphism '" + id + "' instance_map");
        }
        out[id] = std::move(entry);
    }
    return out;
}

LoadedDocument load_if(const CommonParts& parts) {
    using I = ifl::IfInstitution;
    NamedTables<ifl::IfLanguage> langs;
    for (const auto& [id, l] : parts.languages.items()) {
        check_keys(l, {"types"}, "language '" + id + "'");
        langs.languages[id] = ifl::make_language(expect_string_array(member(l, "types", "language '" + id + "'"),
                                                                     "language '" + id + "' types"));
    }
    std::map<std::string, ifl::Classification> structures;
    std::map<std::string, std::string> structure_language;
    for (const auto& [id, s] : parts.structures.items()) {
        check_keys(s, {"language", "instances", "incidence"}, "structure '" + id + "'");
        const std::string lang_id = expect_string(member(s, "language", "structure '" + id + "'"),
                                                  "structure language");
        const auto& lang = langs.get(lang_id, "structure '" + id + "'");
        std::vector<std::string> instances;
        if (s.contains("instances"))
            instances = expect_string_array(s.at("instances"), "structure '" + id + "' instances");
        std::vector<std::pair<std::string, std::string>> incidence;
        if (s.contains("incidence")) {
            require(s.at("incidence").is_array(), "structure '" + id + "': incidence must be an array");
            for (const auto& pair : s.at("incidence")) {
                require(pair.is_array() && pair.size() == 2,
                        "structure '" + id + "': incidence entries are [instance, type] pairs");
                incidence.emplace_back(expect_string(pair[0], "incidence instance"),
                                       expect_string(pair[1], "incidence type"));
            }
        }
        try {
            structures[id] = ifl::make_classification(std::move(instances), lang.types, incidence);
        } catch (const Error& e) {
            fail("structure '" + id + "': " + e.what());
        }
        structure_language[id] = lang_id;
    }

    const auto morphism_entries = parse_morphism_entries(parts.morphisms);
    const Level level = detect_level(parts);

    Document<I> doc;
    doc.level = level;
    doc.bound = parts.bound;

    std::vector<ifl::IfLanguage> node_langs;
    std::vector<std::string> node_lang_ids;
    std::vector<ifl::Classification> node_structs;
    std::vector<std::vector<ifl::Sequent>> node_theories;
    for (const auto& id : parts.shape.nodes) {
        const auto& node = parts.nodes.at(id);
        const std::string lang_id = expect_string(member(node, "language", "node '" + id + "'"),
                                                  "node '" + id + "' language");
        const auto& lang = langs.get(lang_id, "node '" + id + "'");
        node_langs.push_back(lang);
        node_lang_ids.push_back(lang_id);
        if (level == Level::Semantic) {
            const std::string sid = expect_string(node.at("structure"), "node '" + id + "' structure");
            auto it = structures.find(sid);
            require(it != structures.end(), "node '" + id + "': dangling structure reference '" + sid + "'");
            require(structure_language.at(sid) == lang_id,
                    "node '" + id + "': structure '" + sid + "' is over a different language");
            node_structs.push_back(it->second);
        }
        std::vector<ifl::Sequent> theory;
        if (node.contains("theory"))
            for (const auto& s : expect_string_array(node.at("theory"), "node '" + id + "' theory")) {
                try {
                    theory.push_back(ifl::parse_sequent(s, lang));
                } catch (const Error& e) {
                    fail("node '" + id + "': " + e.what());
                }
            }
        node_theories.push_back(std::move(theory));
    }

    auto edge_language_morphism = [&](std::size_t e) {
        const auto& id = parts.edge_morphism_ids[e];
        auto it = morphism_entries.find(id);
        require(it != morphism_entries.end(),
                "edge '" + parts.shape.edges[e].id + "': dangling morphism reference '" + id + "'");
        const auto& entry = it->second;
        const int src = parts.shape.edges[e].source;
        const int dst = parts.shape.edges[e].target;
        require(entry.source_id == node_lang_ids[static_cast<std::size_t>(src)],
                "edge '" + parts.shape.edges[e].id + "': morphism source language '" + entry.source_id +
                    "' differs from the source node language");
        require(entry.target_id == node_lang_ids[static_cast<std::size_t>(dst)],
                "edge '" + parts.shape.edges[e].id + "': morphism target language '" + entry.target_id +
                    "' differs from the target node language");
        return ifl::IfMorphism{node_langs[static_cast<std::size_t>(src)],
                               node_langs[static_cast<std::size_t>(dst)], entry.map};
    };

    if (level == Level::Formal) {
        doc.formal.shape = parts.shape;
        for (std::size_t i = 0; i < parts.shape.nodes.size(); ++i)
            doc.formal.nodes.push_back(make_specification<I>(node_langs[i], node_theories[i]));
        for (std::size_t e = 0; e < parts.shape.edges.size(); ++e)
            doc.formal.edges.push_back(edge_language_morphism(e));
        validate_formal_system(doc.formal, doc.bound);
    } else {
        doc.system.shape = parts.shape;
        for (std::size_t i = 0; i < parts.shape.nodes.size(); ++i)
            doc.system.nodes.push_back(make_logic<I>(node_langs[i], node_structs[i], node_theories[i]));
        for (std::size_t e = 0; e < parts.shape.edges.size(); ++e) {
            const auto& entry = morphism_entries.at(parts.edge_morphism_ids[e]);
            require(entry.has_instance_map,
                    "edge '" + parts.shape.edges[e].id + "': morphism '" + parts.edge_morphism_ids[e] +
                        "' needs an instance_map in a semantic IF system");
            doc.system.edges.push_back(ifl::Infomorphism{edge_language_morphism(e), entry.instance_map});
        }
        validate_information_system(doc.system, doc.bound);
    }
    return LoadedDocument{"if", parts.search, std::move(doc)};
}

LoadedDocument load_folf(const CommonParts& parts) {
    using I = folf::FolfInstitution;
    folf::SchemaSet schemas = folf::SchemaSet::default_set();
    if (!parts.schemas.is_null()) {
        std::vector<folf::Schema> selected;
        for (const auto& name : expect_string_array(parts.schemas, "options.schemas"))
            selected.push_back(folf::schema_from_name(name));
        schemas = folf::make_schema_set(std::move(selected));
    }

    NamedTables<folf::FolfLanguage> langs;
    for (const auto& [id, l] : parts.languages.items()) {
        check_keys(l, {"relations"}, "language '" + id + "'");
        std::vector<folf::RelSymbol> symbols;
        const auto& relations = member(l, "relations", "language '" + id + "'");
        require(relations.is_array(), "language '" + id + "': relations must be an array");
        for (const auto& r : relations) {
            check_keys(r, {"name", "arity"}, "language '" + id + "' relation");
            symbols.push_back(folf::RelSymbol{expect_string(member(r, "name", "relation"), "relation name"),
                                              expect_int(member(r, "arity", "relation"), "relation arity")});
        }
        try {
            langs.languages[id] = folf::FolfLanguage{folf::make_signature(std::move(symbols)), schemas};
        } catch (const Error& e) {
            fail("language '" + id + "': " + e.what());
        }
    }

    std::map<std::string, folf::FiniteStructure> structures;
    std::map<std::string, std::string> structure_language;
    for (const auto& [id, s] : parts.structures.items()) {
        check_keys(s, {"language", "carrier", "tables"}, "structure '" + id + "'");
        const std::string lang_id = expect_string(member(s, "language", "structure '" + id + "'"),
                                                  "structure language");
        const auto& lang = langs.get(lang_id, "structure '" + id + "'");
        const int carrier = expect_int(member(s, "carrier", "structure '" + id + "'"), "structure carrier");
        std::map<std::string, std::set<std::vector<int>>> tables;
        if (s.contains("tables")) {
            require(s.at("tables").is_object(), "structure '" + id + "': tables must be an object");
            for (const auto& [sym, table] : s.at("tables").items()) {
                require(table.is_array(), "structure '" + id + "': table of '" + sym + "' must be an array");
                for (const auto& tuple : table) {
                    require(tuple.is_array(), "structure '" + id + "': tuples must be arrays");
                    std::vector<int> t;
                    for (const auto& v : tuple) t.push_back(expect_int(v, "tuple component"));
                    tables[sym].insert(std::move(t));
                }
            }
        }
        try {
            structures[id] = folf::make_structure(lang.signature, carrier, tables);
        } catch (const Error& e) {
            fail("structure '" + id + "': " + e.what());
        }
        structure_language[id] = lang_id;
    }

    const auto morphism_entries = parse_morphism_entries(parts.morphisms);
    const Level level = detect_level(parts);

    Document<I> doc;
    doc.level = level;
    doc.bound = parts.bound;

    std::vector<folf::FolfLanguage> node_langs;
    std::vector<std::string> node_lang_ids;
    std::vector<folf::FiniteStructure> node_structs;
    std::vector<std::vector<folf::FolfSentence>> node_theories;
    for (const auto& id : parts.shape.nodes) {
        const auto& node = parts.nodes.at(id);
        const std::string lang_id = expect_string(member(node, "language", "node '" + id + "'"),
                                                  "node '" + id + "' language");
        const auto& lang = langs.get(lang_id, "node '" + id + "'");
        node_langs.push_back(lang);
        node_lang_ids.push_back(lang_id);
        if (level == Level::Semantic) {
            const std::string sid = expect_string(node.at("structure"), "node '" + id + "' structure");
            auto it = structures.find(sid);
            require(it != structures.end(), "node '" + id + "': dangling structure reference '" + sid + "'");
            require(structure_language.at(sid) == lang_id,
                    "node '" + id + "': structure '" + sid + "' is over a different language");
            node_structs.push_back(it->second);
        }
        std::vector<folf::FolfSentence> theory;
        if (node.contains("theory"))
            for (const auto& s : expect_string_array(node.at("theory"), "node '" + id + "' theory")) {
                try {
                    theory.push_back(I::parse_sentence(s, lang));
                } catch (const Error& e) {
                    fail("node '" + id + "': " + e.what());
                }
            }
        node_theories.push_back(std::move(theory));
    }

    auto edge_morphism = [&](std::size_t e) {
        const auto& id = parts.edge_morphism_ids[e];
        auto it = morphism_entries.find(id);
        require(it != morphism_entries.end(),
                "edge '" + parts.shape.edges[e].id + "': dangling morphism reference '" + id + "'");
        const auto& entry = it->second;
        const int src = parts.shape.edges[e].source;
        const int dst = parts.shape.edges[e].target;
        require(entry.source_id == node_lang_ids[static_cast<std::size_t>(src)],
                "edge '" + parts.shape.edges[e].id + "': morphism source language '" + entry.source_id +
                    "' differs from the source node language");
        require(entry.target_id == node_lang_ids[static_cast<std::size_t>(dst)],
                "edge '" + parts.shape.edges[e].id + "': morphism target language '" + entry.target_id +
                    "' differs from the target node language");
        return folf::FolfMorphism{node_langs[static_cast<std::size_t>(src)],
                                  node_langs[static_cast<std::size_t>(dst)], entry.map};
    };

    if (level == Level::Formal) {
        doc.formal.shape = parts.shape;
        for (std::size_t i = 0; i < parts.shape.nodes.size(); ++i) {
            try {
                doc.formal.nodes.push_back(make_specification<I>(node_langs[i], node_theories[i]));
            } catch (const Error& e) {
                fail("node '" + parts.shape.nodes[i] + "': " + e.what());
            }
        }
        for (std::size_t e = 0; e < parts.shape.edges.size(); ++e)
            doc.formal.edges.push_back(edge_morphism(e));
        validate_formal_system(doc.formal, doc.bound);
    } else {
        doc.system.shape = parts.shape;
        for (std::size_t i = 0; i < parts.shape.nodes.size(); ++i)
            doc.system.nodes.push_back(make_logic<I>(node_langs[i], node_structs[i], node_theories[i]));
        for (std::size_t e = 0; e < parts.shape.edges.size(); ++e)
            doc.system.edges.push_back(edge_morphism(e));
        validate_information_system(doc.system, doc.bound);
    }
    return LoadedDocument{"folf", parts.search, std::move(doc)};
}

} // namespace

LoadedDocument parse_document(const std::string& text, const std::string& source_name) {
    ordered_json root;
    try {
        root = ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        // byte offset -> line/column
        std::size_t line = 1, column = 1;
        for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
            if (text[i] == '\n') {
                ++line;
                column = 1;
            } else {
                ++column;
            }
        }
        fail(source_name + ":" + std::to_string(line) + ":" + std::to_string(column) +
             ": JSON parse error: " + e.what());
    }
    require(root.is_object(), source_name + ": document root must be an object");
    const std::string institution =
        expect_string(member(root, "institution", "document"), "institution");
    const CommonParts parts = parse_common(root);
    if (institution == "if") return load_if(parts);
    if (institution == "folf") return load_folf(parts);
    fail("unknown institution '" + institution + "' (expected 'if' or 'folf')");
}

LoadedDocument load_document(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    require(in.good(), "cannot open file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_document(buf.str(), path);
}

} // namespace syscons::cli
