#pragma once

#include <map>
#include <string>
#include <vector>

#include "syscons/error.hpp"

namespace syscons {

// Total function on symbol names.  std::map keeps iteration order canonical.
using SymbolMap = std::map<std::string, std::string>;

inline std::string image_of(const SymbolMap& m, const std::string& sym) {
    auto it = m.find(sym);
    require(it != m.end(), "symbol map is not total: no image for '" + sym + "'");
    return it->second;
}

// A language morphism for any institution whose languages are built from
// named symbols: endpoints plus a symbol map, compared extensionally.
template <typename Lang>
struct BasicMorphism {
    Lang source;
    Lang target;
    SymbolMap map;

    friend bool operator==(const BasicMorphism& a, const BasicMorphism& b) {
        return a.source == b.source && a.target == b.target && a.map == b.map;
    }
};

template <typename Lang>
BasicMorphism<Lang> identity_morphism(const Lang& lang) {
    BasicMorphism<Lang> m{lang, lang, {}};
    for (const auto& sym : symbol_names(lang)) m.map[sym] = sym;
    return m;
}

// Diagrammatic order: first a, then b.
template <typename Lang>
BasicMorphism<Lang> compose(const BasicMorphism<Lang>& a, const BasicMorphism<Lang>& b) {
    require(a.target == b.source, "morphism composition endpoint mismatch");
    BasicMorphism<Lang> out{a.source, b.target, {}};
    for (const auto& [k, v] : a.map) out.map[k] = image_of(b.map, v);
    return out;
}

// Totality on the source symbols and containment of the image in the target.
template <typename Lang>
void validate_morphism_map(const BasicMorphism<Lang>& m) {
    const auto src = symbol_names(m.source);
    const auto dst = symbol_names(m.target);
    for (const auto& sym : src) {
        auto it = m.map.find(sym);
        require(it != m.map.end(), "morphism map is not total: source symbol '" + sym + "' has no image");
        bool in_target = false;
        for (const auto& t : dst)
            if (t == it->second) { in_target = true; break; }
        require(in_target, "morphism maps '" + sym + "' to '" + it->second + "', which is not in the target language");
    }
    for (const auto& [k, v] : m.map) {
        bool in_source = false;
        for (const auto& s : src)
            if (s == k) { in_source = true; break; }
        require(in_source, "morphism map mentions '" + k + "', which is not in the source language");
    }
}

} // namespace syscons
