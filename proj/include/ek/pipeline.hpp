#pragma once

#include "ek/construct.hpp"
#include "ek/core.hpp"
#include "ek/geometry.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ek {

// Feedback-arc-set instance: a digraph without self-loops. 2-cycles are
// allowed and each arc counts individually.
struct FasInstance {
    int n = 0;
    std::vector<std::pair<int, int>> arcs;

    bool operator==(const FasInstance&) const = default;
};

void validate_fas(const FasInstance& f);

// margin(i, j) = 2 * (#arcs i->j - #arcs j->i); all-even by construction,
// so every geometric compilation applies without the odd-case machinery.
WeightedTournament fas_to_tournament(const FasInstance& f);

// Oracle: minimum over all n! orderings of the number of backward arcs.
// Guard: n <= 9.
long long fas_brute_force(const FasInstance& f);

struct PipelineReport {
    FasInstance instance;
    Norm norm = Norm::L2;
    WeightedTournament tournament;
    int n_candidates = 0;
    int n_voter_records = 0;
    long long total_voters = 0;       // V, with multiplicity
    int max_coordinate_bits = 0;
    long long kemeny_cost = 0;
    long long implied_fas = 0;
    std::optional<long long> brute_force_fas;  // computed when n <= 9

    bool oracle_agrees() const {
        return !brute_force_fas || *brute_force_fas == implied_fas;
    }
    std::string to_text() const;
};

// Chains fas_to_tournament -> construct -> derive_profile -> kemeny_dp and
// extracts the implied FAS value from the Kemeny optimum via the
// margin-sum identity: a ranking's KT cost determines its consistent margin
// sum M = V*C(n,2) - 2*cost, and the minimum backward arc count is
// sum_pairs min(a_ij, a_ji) + (W - M*) / 4 with W the total margin weight.
// Cross-checks against fas_brute_force when n <= 9 (mismatch is a hard
// failure). L1/Linf require the tournament to be bipartite.
PipelineReport run_pipeline(const FasInstance& f, Norm norm);

struct InducibilityReport {
    bool ok = false;
    std::string diagnostics;
    long long total_voters = 0;
};

// Runs the applicable construction for (t, norm), derives the profile,
// recomputes the majority tournament and compares it to t exactly.
// Inapplicable parity/bipartiteness (or a degenerate no-voter construction)
// yields ok=false with diagnostics instead of an exception.
InducibilityReport verify_inducibility(const WeightedTournament& t, Norm norm);

}  // namespace ek
