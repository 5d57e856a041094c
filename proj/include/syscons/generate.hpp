#pragma once

#include "syscons/if_institution.hpp"
#include "syscons/rng.hpp"
#include "syscons/systems.hpp"

namespace syscons::ifl {

// Deterministic random IF values for property runs and witness searches.
// Edge morphisms are made valid by construction: instance maps are
// repaired by adding the missing preimage rows to the source, and theories
// are propagated forward along the edges until every edge preserves
// entailment syntactically.

IfLanguage random_language(Rng& rng, int max_types);
Sequent random_sequent(const IfLanguage& lang, Rng& rng);
Classification random_classification(const IfLanguage& lang, Rng& rng, int max_instances);
std::vector<Sequent> random_theory(const IfLanguage& lang, Rng& rng, int max_sentences);
SymbolMap random_type_map(const IfLanguage& source, const IfLanguage& target, Rng& rng);

struct RandomSystemOptions {
    int max_nodes = 3;
    int max_edges = 2;
    int max_types = 2;
    int max_instances = 3;
    int max_theory = 2;
    // Keep only systems whose node theories all have a model with at least
    // one instance (instance-inconsistent theories poison the channel core
    // and break the discrete-shape theorem).
    bool require_nonempty_models = false;
    int bound = 3;
};

InformationSystem<IfInstitution> random_information_system(const RandomSystemOptions& opts, Rng& rng);

} // namespace syscons::ifl
