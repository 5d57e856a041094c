#include "syscons/report.hpp"

namespace syscons::cli {

namespace {

std::string scalar_text(const nlohmann::ordered_json& v) {
    if (v.is_string()) return v.get<std::string>();
    return v.dump();
}

void render(const nlohmann::ordered_json& v, int indent, std::string& out);

void render_object(const nlohmann::ordered_json& v, int indent, std::string& out) {
    const std::string pad(static_cast<std::size_t>(indent), ' ');
    for (const auto& [key, value] : v.items()) {
        if (value.is_object() || value.is_array()) {
            out += pad + key + ":";
            if (value.empty()) {
                out += value.is_array() ? " []\n" : " {}\n";
            } else {
                out += "\n";
                render(value, indent + 2, out);
            }
        } else {
            out += pad + key + ": " + scalar_text(value) + "\n";
        }
    }
}

void render(const nlohmann::ordered_json& v, int indent, std::string& out) {
    const std::string pad(static_cast<std::size_t>(indent), ' ');
    if (v.is_object()) {
        render_object(v, indent, out);
    } else if (v.is_array()) {
        for (const auto& item : v) {
            if (item.is_object() || item.is_array()) {
                out += pad + "-\n";
                render(item, indent + 2, out);
            } else {
                out += pad + "- " + scalar_text(item) + "\n";
            }
        }
    } else {
        out += pad + scalar_text(v) + "\n";
    }
}

} // namespace

std::string Report::to_text() const {
    std::string out;
    render(body, 0, out);
    return out;
}

std::string Report::to_json() const { return body.dump(2) + "\n"; }

} // namespace syscons::cli
