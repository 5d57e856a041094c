#include "syscons/document.hpp"
#include "syscons/witness_search.hpp"

namespace syscons::cli {

namespace {

using nlohmann::ordered_json;

template <typename I>
ordered_json sentence_list(const std::vector<typename I::Sentence>& v) {
    ordered_json arr = ordered_json::array();
    for (const auto& s : v) arr.push_back(I::print_sentence(s));
    return arr;
}

ordered_json language_json(const ifl::IfLanguage& l) {
    ordered_json arr = ordered_json::array();
    for (const auto& t : l.types) arr.push_back(t);
    return arr;
}

ordered_json language_json(const folf::FolfLanguage& l) {
    ordered_json arr = ordered_json::array();
    for (const auto& s : l.signature.symbols) arr.push_back(s.name + ":" + std::to_string(s.arity));
    return arr;
}

template <typename I>
ordered_json header(const std::string& command, const std::string& institution, const Document<I>& doc,
                    int bound) {
    ordered_json body;
    body["command"] = command;
    body["institution"] = institution;
    body["level"] = doc.level == Level::Semantic ? "semantic" : "formal";
    body["bound"] = bound;
    return body;
}

template <typename I>
int effective_bound(const Document<I>& doc, const RunFlags& flags) {
    return flags.bound.value_or(doc.bound);
}

template <typename I>
Report cmd_validate(const std::string& institution, const Document<I>& doc, const RunFlags& flags) {
    // Loading already validated the document; revalidate at the requested
    // bound so --bound changes are honored.
    const int bound = effective_bound(doc, flags);
    if (doc.level == Level::Semantic)
        validate_information_system(doc.system, bound);
    else
        validate_formal_system(doc.formal, bound);
    Report rep;
    rep.body = header("validate", institution, doc, bound);
    rep.body["status"] = "ok";
    rep.body["nodes"] = doc.shape().nodes.size();
    rep.body["edges_verified"] = doc.shape().edges.size();
    return rep;
}

template <typename I>
Report cmd_consequence(const std::string& institution, const Document<I>& doc, const RunFlags& flags) {
    const int bound = effective_bound(doc, flags);
    Report rep;
    rep.body = header("consequence", institution, doc, bound);
    rep.body["status"] = "ok";
    ordered_json nodes = ordered_json::array();
    for (std::size_t i = 0; i < doc.shape().nodes.size(); ++i) {
        const Specification<I> spec = doc.level == Level::Semantic ? doc.system.nodes[i].specification()
                                                                   : doc.formal.nodes[i];
        ordered_json entry;
        entry["node"] = doc.shape().nodes[i];
        entry["theory"] = sentence_list<I>(consequence(spec, bound).sentences);
        nodes.push_back(std::move(entry));
    }
    rep.body["nodes"] = std::move(nodes);
    return rep;
}

template <typename I>
Report cmd_fuse(const std::string& institution, const Document<I>& doc, const RunFlags& flags) {
    const int bound = effective_bound(doc, flags);
    Report rep;
    rep.body = header("fuse", institution, doc, bound);
    rep.body["status"] = "ok";
    if (doc.level == Level::Semantic) {
        const Logic<I> fused = fusion(doc.system, bound);
        rep.body["core_language"] = language_json(fused.language);
        rep.body["core_structure"] = I::print_structure(fused.structure);
        rep.body["fusion_theory"] = sentence_list<I>(fused.theory);
        rep.body["fusion_consequence"] = sentence_list<I>(consequence(fused.specification(), bound).sentences);
    } else {
        const Specification<I> fused = formal_fusion(doc.formal);
        rep.body["core_language"] = language_json(fused.language);
        rep.body["fusion_theory"] = sentence_list<I>(fused.sentences);
        rep.body["fusion_consequence"] = sentence_list<I>(consequence(fused, bound).sentences);
    }
    return rep;
}

template <typename I>
Report cmd_sys_consequence(const std::string& institution, const Document<I>& doc, const RunFlags& flags) {
    const int bound = effective_bound(doc, flags);
    Report rep;
    rep.body = header("sys-consequence", institution, doc, bound);
    rep.body["status"] = "ok";
    ordered_json nodes = ordered_json::array();
    if (doc.level == Level::Semantic) {
        const auto closed = system_consequence(doc.system, bound);
        for (std::size_t i = 0; i < closed.nodes.size(); ++i) {
            ordered_json entry;
            entry["node"] = doc.shape().nodes[i];
            entry["theory"] = sentence_list<I>(closed.nodes[i].theory);
            nodes.push_back(std::move(entry));
        }
    } else {
        const auto closed = formal_system_consequence(doc.formal, bound);
        for (std::size_t i = 0; i < closed.nodes.size(); ++i) {
            ordered_json entry;
            entry["node"] = doc.shape().nodes[i];
            entry["theory"] = sentence_list<I>(closed.nodes[i].sentences);
            nodes.push_back(std::move(entry));
        }
    }
    rep.body["nodes"] = std::move(nodes);
    return rep;
}

template <typename I>
Report cmd_entails(const std::string& institution, const Document<I>& doc, const RunFlags& flags) {
    const int bound = effective_bound(doc, flags);
    require(flags.node.has_value(), "entails needs --node");
    require(flags.sentence.has_value(), "entails needs --sentence");
    const int node = doc.shape().node_index(*flags.node);
    require(node >= 0, "unknown node '" + *flags.node + "'");

    typename I::Language node_lang = doc.level == Level::Semantic
                                         ? doc.system.nodes[static_cast<std::size_t>(node)].language
                                         : doc.formal.nodes[static_cast<std::size_t>(node)].language;
    const typename I::Sentence sentence = I::parse_sentence(*flags.sentence, node_lang);

    // Entailment at the node of the system consequence: the fusion theory
    // entails the translated sentence at the core.
    Specification<I> fused{node_lang, {}};
    typename I::Morphism component = I::identity(node_lang);
    if (doc.level == Level::Semantic) {
        const Channel<I> ch = minimal_cover(underlying(doc.system));
        const Logic<I> f = fusion(doc.system, bound);
        fused = f.specification();
        component = I::language_part(ch.components[static_cast<std::size_t>(node)]);
    } else {
        const FormalChannel<I> ch = formal_minimal_cover(doc.formal);
        fused = formal_fusion(doc.formal);
        component = ch.components[static_cast<std::size_t>(node)];
    }
    const auto report = entails(fused, I::translate(component, sentence), bound);

    Report rep;
    rep.body = header("entails", institution, doc, bound);
    rep.body["status"] = report.holds ? "ok" : "violation";
    rep.body["node"] = *flags.node;
    rep.body["sentence"] = I::print_sentence(sentence);
    rep.body["holds"] = report.holds;
    if (report.witness) rep.body["counter_model"] = I::print_structure(*report.witness);
    rep.exit_code = report.holds ? 0 : 1;
    return rep;
}

template <typename I>
Report cmd_order(const std::string& institution, const Document<I>& doc, const RunFlags& flags) {
    const int bound = effective_bound(doc, flags);
    Report rep;
    rep.body = header("order", institution, doc, bound);
    rep.body["status"] = "ok";
    ordered_json nodes = ordered_json::array();
    if (doc.level == Level::Semantic) {
        for (std::size_t i = 0; i < doc.system.nodes.size(); ++i) {
            ordered_json entry;
            entry["node"] = doc.shape().nodes[i];
            entry["sound"] = is_sound(doc.system.nodes[i], bound);
            entry["complete"] = is_complete(doc.system.nodes[i], bound);
            nodes.push_back(std::move(entry));
        }
        rep.body["nodes"] = std::move(nodes);
        const auto closed = system_consequence(doc.system, bound);
        rep.body["consequence_below_system"] = pointwise_leq(closed, doc.system, bound);
        rep.body["system_entails_consequence"] = system_entails(doc.system, closed, bound);
        rep.body["consequence_entails_system"] = system_entails(closed, doc.system, bound);
    } else {
        for (std::size_t i = 0; i < doc.formal.nodes.size(); ++i) {
            ordered_json entry;
            entry["node"] = doc.shape().nodes[i];
            entry["closed"] = doc.formal.nodes[i].sentences == consequence(doc.formal.nodes[i], bound).sentences;
            nodes.push_back(std::move(entry));
        }
        rep.body["nodes"] = std::move(nodes);
        const auto closed = formal_system_consequence(doc.formal, bound);
        rep.body["consequence_below_system"] = formal_pointwise_leq(closed, doc.formal, bound);
        rep.body["system_entails_consequence"] = formal_system_entails(doc.formal, closed, bound);
        rep.body["consequence_entails_system"] = formal_system_entails(closed, doc.formal, bound);
    }
    return rep;
}

ordered_json system_json(const InformationSystem<ifl::IfInstitution>& is) {
    ordered_json out;
    ordered_json nodes = ordered_json::array();
    for (std::size_t i = 0; i < is.nodes.size(); ++i) {
        ordered_json entry;
        entry["node"] = is.shape.nodes[i];
        entry["types"] = language_json(is.nodes[i].language);
        entry["structure"] = ifl::print_classification(is.nodes[i].structure);
        entry["theory"] = sentence_list<ifl::IfInstitution>(is.nodes[i].theory);
        nodes.push_back(std::move(entry));
    }
    out["nodes"] = std::move(nodes);
    ordered_json edges = ordered_json::array();
    for (std::size_t e = 0; e < is.edges.size(); ++e) {
        ordered_json entry;
        entry["edge"] = is.shape.edges[e].id;
        entry["source"] = is.shape.nodes[static_cast<std::size_t>(is.shape.edges[e].source)];
        entry["target"] = is.shape.nodes[static_cast<std::size_t>(is.shape.edges[e].target)];
        ordered_json tmap;
        for (const auto& [k, v] : is.edges[e].type_part.map) tmap[k] = v;
        entry["type_map"] = std::move(tmap);
        ordered_json imap;
        for (const auto& [k, v] : is.edges[e].instance_map) imap[k] = v;
        entry["instance_map"] = std::move(imap);
        edges.push_back(std::move(entry));
    }
    out["edges"] = std::move(edges);
    return out;
}

void check_search_keys(const ordered_json& search) {
    for (const auto& [k, v] : search.items()) {
        (void)v;
        const bool ok = k == "trials" || k == "max_nodes" || k == "max_edges" || k == "max_types" ||
                        k == "max_instances" || k == "max_theory";
        require(ok, "options.search: unknown key '" + k + "'");
    }
}

Report cmd_search_witness(const LoadedDocument& loaded, const RunFlags& flags) {
    require(loaded.institution == "if", "search-witness runs over IF systems; use an 'if' document");
    const auto& doc = std::get<Document<ifl::IfInstitution>>(loaded.doc);
    const int bound = flags.bound.value_or(doc.bound);

    ifl::WitnessSearchOptions opts;
    opts.seed = flags.seed.value_or(1);
    opts.bound = bound;
    opts.system.bound = bound;
    if (loaded.search.is_object()) {
        check_search_keys(loaded.search);
        if (loaded.search.contains("trials")) opts.trials = loaded.search.at("trials").get<int>();
        if (loaded.search.contains("max_nodes")) opts.system.max_nodes = loaded.search.at("max_nodes").get<int>();
        if (loaded.search.contains("max_edges")) opts.system.max_edges = loaded.search.at("max_edges").get<int>();
        if (loaded.search.contains("max_types")) opts.system.max_types = loaded.search.at("max_types").get<int>();
        if (loaded.search.contains("max_instances"))
            opts.system.max_instances = loaded.search.at("max_instances").get<int>();
        if (loaded.search.contains("max_theory")) opts.system.max_theory = loaded.search.at("max_theory").get<int>();
    }

    Report rep;
    rep.body = header("search-witness", loaded.institution, doc, bound);
    rep.body["seed"] = opts.seed;
    rep.body["trials"] = opts.trials;
    const auto witness = ifl::find_strictness_witness(opts);
    if (!witness) {
        rep.body["status"] = "none";
        return rep;
    }
    rep.body["status"] = "found";
    rep.body["trial"] = witness->trial;
    rep.body["node"] = witness->system.shape.nodes[static_cast<std::size_t>(witness->node)];
    rep.body["sentence"] = ifl::print_sequent(witness->sentence);
    rep.body["system"] = system_json(witness->system);
    return rep;
}

} // namespace

Report run_command(const std::string& command, const LoadedDocument& loaded, const RunFlags& flags) {
    require(flags.format == "text" || flags.format == "json",
            "unknown format '" + flags.format + "' (expected text or json)");
    if (command == "search-witness") return cmd_search_witness(loaded, flags);
    return std::visit(
        [&](const auto& doc) -> Report {
            if (command == "validate") return cmd_validate(loaded.institution, doc, flags);
            if (command == "consequence") return cmd_consequence(loaded.institution, doc, flags);
            if (command == "fuse") return cmd_fuse(loaded.institution, doc, flags);
            if (command == "sys-consequence") return cmd_sys_consequence(loaded.institution, doc, flags);
            if (command == "entails") return cmd_entails(loaded.institution, doc, flags);
            if (command == "order") return cmd_order(loaded.institution, doc, flags);
            fail("unknown command '" + command + "'");
        },
        loaded.doc);
}

} // namespace syscons::cli
