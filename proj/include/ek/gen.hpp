#pragma once

#include "ek/core.hpp"
#include "ek/pipeline.hpp"

#include <random>

namespace ek {

// Random instance generators used by the test suites and the `gen`
// subcommand. All draw exclusively from the supplied engine.

// Even bipartite weighted tournament with at least one arc; weights are
// drawn from {2, 4, ..., max_weight}. Requires n >= 2.
WeightedTournament random_even_bipartite_tournament(int n, int max_weight, std::mt19937_64& rng);

// Tournament whose weights all share the given parity; the odd flavor has
// no zero margins, the even flavor keeps at least one arc. Requires n >= 2
// (n == 1 is legal and has no pairs).
WeightedTournament random_parity_tournament(int n, Parity parity, int max_weight,
                                            std::mt19937_64& rng);

// Profile of `voters` uniformly random rankings, multiplicity 1 each.
Profile random_profile(int n, int voters, std::mt19937_64& rng);

// Bipartite digraph: between 1 and max_arcs distinct ordered pairs crossing
// a random 2-coloring (2-cycles possible). Requires n >= 2.
FasInstance random_bipartite_digraph(int n, int max_arcs, std::mt19937_64& rng);

}  // namespace ek
