#pragma once

#include "ek/core.hpp"

#include <optional>

namespace ek {

// cost_before(i, j) = number of voters (with multiplicity) preferring j to
// i, i.e. the disagreement cost of placing i anywhere before j.
// cost_before(i,j) + cost_before(j,i) = V for i != j; diagonal is zero.
class PairCostMatrix {
public:
    PairCostMatrix() = default;
    explicit PairCostMatrix(int n) : n_(n), cost_(static_cast<std::size_t>(n) * n, 0) {}

    static PairCostMatrix from_profile(const Profile& p);
    // Unit Slater costs: placing i before j costs 1 iff the majority
    // strictly prefers j to i. Zero margins cost nothing either way.
    static PairCostMatrix from_tournament_signs(const WeightedTournament& t);

    int size() const { return n_; }
    long long cost_before(int i, int j) const { return cost_[static_cast<std::size_t>(i) * n_ + j]; }
    void set(int i, int j, long long c) { cost_[static_cast<std::size_t>(i) * n_ + j] = c; }

private:
    int n_ = 0;
    std::vector<long long> cost_;
};

struct KemenyResult {
    Ranking optimal;
    long long cost = 0;
    // Exact count of co-optimal rankings; filled by the brute-force solver
    // only (counting through tie-broken DP paths is out of scope).
    std::optional<long long> optima_count;
};

// Minimizes total disagreement cost over all n! rankings. Ties broken by
// lexicographically smallest order sequence. Guard: n <= 10.
KemenyResult minimize_brute_force(const PairCostMatrix& costs);

// Subset DP over remaining candidate sets: pick the next-top candidate c of
// the remaining set S, paying sum over d in S\{c} of cost_before(c, d).
// Reconstruction picks the smallest co-optimal id at each step, which yields
// exactly the lexicographically smallest optimum. Guard: n <= 24.
KemenyResult minimize_subset_dp(const PairCostMatrix& costs);

// Exact Kemeny consensus: the ranking minimizing kt_to_profile.
KemenyResult kemeny_brute_force(const Profile& p);
KemenyResult kemeny_dp(const Profile& p);

// Exact Slater ranking: minimizes the number of contradicted positive-margin
// majority pairs. Weights enter through their sign only.
KemenyResult slater_ranking(const WeightedTournament& t);

// Sum over unordered pairs of min(cost_before(i,j), cost_before(j,i)).
// Always <= the optimum; equal iff the majority relation is acyclic on
// nonzero margins.
long long kemeny_lower_bound(const Profile& p);

}  // namespace ek
