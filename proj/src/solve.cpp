#include "ek/solve.hpp"

#include "ek/errors.hpp"

#include <algorithm>
#include <numeric>

namespace ek {

namespace {

constexpr int kBruteForceMaxN = 10;
constexpr int kSubsetDpMaxN = 24;
constexpr long long kMaxVoters = 1LL << 20;  // keeps all DP cost sums 64-bit safe

}  // namespace

PairCostMatrix PairCostMatrix::from_profile(const Profile& p) {
    validate_profile(p);
    if (p.total_voters() > kMaxVoters)
        throw CapacityError("profiles above 2^20 voters exceed the solver guard");
    const int n = p.n_candidates;
    PairCostMatrix m(n);
    const WeightedTournament t = majority_tournament(p);
    const long long v = p.total_voters();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j) m.set(i, j, (v - t.margin(i, j)) / 2);
    return m;
}

PairCostMatrix PairCostMatrix::from_tournament_signs(const WeightedTournament& t) {
    const int n = t.size();
    PairCostMatrix m(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j) m.set(i, j, t.margin(j, i) > 0 ? 1 : 0);
    return m;
}

namespace {

long long ranking_cost(const PairCostMatrix& costs, const std::vector<int>& order) {
    long long c = 0;
    const int n = static_cast<int>(order.size());
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) c += costs.cost_before(order[a], order[b]);
    return c;
}

}  // namespace

KemenyResult minimize_brute_force(const PairCostMatrix& costs) {
    const int n = costs.size();
    if (n < 1) throw InputError("cannot rank zero candidates");
    if (n > kBruteForceMaxN)
        throw CapacityError("brute force supports n <= " + std::to_string(kBruteForceMaxN));

    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    KemenyResult best;
    best.cost = -1;
    long long count = 0;
    // Lexicographic enumeration: the first minimum seen is the lex-smallest.
    do {
        const long long c = ranking_cost(costs, order);
        if (best.cost < 0 || c < best.cost) {
            best.cost = c;
            best.optimal.order = order;
            count = 1;
        } else if (c == best.cost) {
            ++count;
        }
    } while (std::next_permutation(order.begin(), order.end()));
    best.optima_count = count;
    return best;
}

KemenyResult minimize_subset_dp(const PairCostMatrix& costs) {
    const int n = costs.size();
    if (n < 1) throw InputError("cannot rank zero candidates");
    if (n > kSubsetDpMaxN)
        throw CapacityError("subset DP supports n <= " + std::to_string(kSubsetDpMaxN));

    // f[S] = minimal cost of ranking the candidate set S below everything
    // else, counting only pairs inside S.
    const std::size_t full = (std::size_t{1} << n) - 1;
    std::vector<long long> f(full + 1, 0);
    for (std::size_t s = 1; s <= full; ++s) {
        long long best = -1;
        for (int c = 0; c < n; ++c) {
            if (!(s >> c & 1)) continue;
            long long cost = f[s & ~(std::size_t{1} << c)];
            for (int d = 0; d < n; ++d)
                if (d != c && (s >> d & 1)) cost += costs.cost_before(c, d);
            if (best < 0 || cost < best) best = cost;
        }
        f[s] = best;
    }

    KemenyResult res;
    res.cost = f[full];
    // Top-down reconstruction; smallest co-optimal id first gives the
    // lexicographically smallest optimal ranking.
    std::size_t s = full;
    while (s) {
        for (int c = 0; c < n; ++c) {
            if (!(s >> c & 1)) continue;
            long long cost = f[s & ~(std::size_t{1} << c)];
            for (int d = 0; d < n; ++d)
                if (d != c && (s >> d & 1)) cost += costs.cost_before(c, d);
            if (cost == f[s]) {
                res.optimal.order.push_back(c);
                s &= ~(std::size_t{1} << c);
                break;
            }
        }
    }
    return res;
}

KemenyResult kemeny_brute_force(const Profile& p) {
    return minimize_brute_force(PairCostMatrix::from_profile(p));
}

KemenyResult kemeny_dp(const Profile& p) {
    return minimize_subset_dp(PairCostMatrix::from_profile(p));
}

KemenyResult slater_ranking(const WeightedTournament& t) {
    return minimize_subset_dp(PairCostMatrix::from_tournament_signs(t));
}

long long kemeny_lower_bound(const Profile& p) {
    const PairCostMatrix m = PairCostMatrix::from_profile(p);
    long long bound = 0;
    for (int i = 0; i < m.size(); ++i)
        for (int j = i + 1; j < m.size(); ++j)
            bound += std::min(m.cost_before(i, j), m.cost_before(j, i));
    return bound;
}

}  // namespace ek
