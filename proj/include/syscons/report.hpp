#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

namespace syscons::cli {

// Deterministic command result.  Text and JSON renderings are both derived
// from the ordered body, so byte-identical inputs and flags give
// byte-identical output.  Timing is reported separately on stderr and
// never enters the body.
struct Report {
    int exit_code = 0;
    nlohmann::ordered_json body;

    std::string to_text() const;
    std::string to_json() const;
};

struct RunFlags {
    std::optional<int> bound;
    std::string format = "text"; // "text" | "json"
    std::optional<std::string> node;
    std::optional<std::string> sentence;
    std::optional<std::uint64_t> seed;
};

} // namespace syscons::cli
