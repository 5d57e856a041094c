#pragma once

#include <optional>

#include "syscons/generate.hpp"

namespace syscons::ifl {

// Seeded search for a system where restricting before fusing strictly
// loses a consequence sentence against fusing before restricting:
// a node and sentence with
//   s in consequence(res(IS#)_i)  and  s not in consequence((res IS)#_i).
struct WitnessSearchOptions {
    std::uint64_t seed = 1;
    int trials = 400;
    RandomSystemOptions system{2 /*nodes*/, 1 /*edges*/, 2 /*types*/, 2 /*instances*/, 2 /*theory*/, false, 3};
    int bound = 3;
};

struct StrictnessWitness {
    InformationSystem<IfInstitution> system;
    int trial = 0;
    int node = 0;
    Sequent sentence;
};

std::optional<StrictnessWitness> find_strictness_witness(const WitnessSearchOptions& opts);

// Recheck a claimed witness from the definitions.
bool revalidate_witness(const StrictnessWitness& w, int bound);

} // namespace syscons::ifl
