#include "syscons/witness_search.hpp"

#include <algorithm>

namespace syscons::ifl {

namespace {

std::optional<Sequent> lost_sentence(const InformationSystem<IfInstitution>& is, int node, int bound) {
    const auto fuse_first =
        res_logic(system_consequence(is, bound).nodes[static_cast<std::size_t>(node)], bound);
    // the restricted system is sound, so its consequence lives in the sound fiber
    const auto restrict_first =
        system_consequence(restrict_system(is, bound), bound, FlowKind::Sound)
            .nodes[static_cast<std::size_t>(node)];
    const auto strong = consequence(fuse_first.specification(), bound).sentences;
    const auto weak = consequence(restrict_first.specification(), bound).sentences;
    for (const auto& s : strong)
        if (!std::binary_search(weak.begin(), weak.end(), s)) return s;
    return std::nullopt;
}

} // namespace

std::optional<StrictnessWitness> find_strictness_witness(const WitnessSearchOptions& opts) {
    Rng rng(opts.seed);
    for (int trial = 0; trial < opts.trials; ++trial) {
        InformationSystem<IfInstitution> is = random_information_system(opts.system, rng);
        if (is.nodes.size() < 2) continue; // single-node systems collapse the two paths
        for (int node = 0; node < static_cast<int>(is.nodes.size()); ++node) {
            if (auto s = lost_sentence(is, node, opts.bound))
                return StrictnessWitness{std::move(is), trial, node, *s};
        }
    }
    return std::nullopt;
}

bool revalidate_witness(const StrictnessWitness& w, int bound) {
    const auto maybe = lost_sentence(w.system, w.node, bound);
    if (!maybe) return false;
    // The recorded sentence must itself be strict, not merely the first.
    const auto fuse_first =
        res_logic(system_consequence(w.system, bound).nodes[static_cast<std::size_t>(w.node)], bound);
    const auto restrict_first =
        system_consequence(restrict_system(w.system, bound), bound, FlowKind::Sound)
            .nodes[static_cast<std::size_t>(w.node)];
    const auto strong = consequence(fuse_first.specification(), bound).sentences;
    const auto weak = consequence(restrict_first.specification(), bound).sentences;
    return std::binary_search(strong.begin(), strong.end(), w.sentence) &&
           !std::binary_search(weak.begin(), weak.end(), w.sentence);
}

} // namespace syscons::ifl
