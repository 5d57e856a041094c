#pragma once

#include <string>
#include <variant>

#include <json.hpp>

#include "syscons/folf_institution.hpp"
#include "syscons/if_institution.hpp"
#include "syscons/report.hpp"
#include "syscons/systems.hpp"

namespace syscons::cli {

enum class Level { Formal, Semantic };

// A validated system description.  Exactly one of `system` (semantic
// level, logics at the nodes) or `formal` (specifications at the nodes)
// is populated, per `level`.
template <typename I>
struct Document {
    Level level = Level::Formal;
    int bound = 3;
    InformationSystem<I> system;
    FormalSystem<I> formal;

    const ShapeGraph& shape() const { return level == Level::Semantic ? system.shape : formal.shape; }
};

struct LoadedDocument {
    std::string institution;
    nlohmann::ordered_json search; // optional "options.search" passthrough
    std::variant<Document<ifl::IfInstitution>, Document<folf::FolfInstitution>> doc;
};

// Parses and fully validates: references resolve, structures are
// well-formed, IF incidence and infomorphism conditions hold, FOLf
// formulas parse, and every edge passes the morphism checks of its level.
LoadedDocument load_document(const std::string& path);
LoadedDocument parse_document(const std::string& text, const std::string& source_name);

// command in {validate, consequence, fuse, sys-consequence, entails,
// order, search-witness}; exit code 0 = success, 1 = property violation,
// 2 = input error (thrown as Error before a report exists).
Report run_command(const std::string& command, const LoadedDocument& doc, const RunFlags& flags);

} // namespace syscons::cli
