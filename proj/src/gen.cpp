#include "ek/gen.hpp"

#include "ek/errors.hpp"

#include <algorithm>
#include <numeric>

namespace ek {

namespace {

// Random 2-coloring with both sides nonempty.
std::vector<int> random_sides(int n, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> coin(0, 1);
    std::vector<int> side(static_cast<std::size_t>(n));
    for (;;) {
        for (auto& s : side) s = coin(rng);
        const auto lefts = std::count(side.begin(), side.end(), 0);
        if (lefts > 0 && lefts < n) return side;
    }
}

}  // namespace

WeightedTournament random_even_bipartite_tournament(int n, int max_weight, std::mt19937_64& rng) {
    if (n < 2) throw InputError("bipartite generator needs n >= 2");
    const auto side = random_sides(n, rng);
    std::uniform_int_distribution<int> pick(0, 2);
    std::uniform_int_distribution<long long> half_weight(1, std::max(1, max_weight / 2));
    std::uniform_int_distribution<int> coin(0, 1);

    WeightedTournament t(n);
    std::vector<std::pair<int, int>> crossing;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (side[i] != side[j]) crossing.emplace_back(i, j);
    bool any = false;
    for (auto [i, j] : crossing) {
        if (pick(rng) == 0) continue;  // leave the pair ex aequo
        const long long w = 2 * half_weight(rng);
        t.set_margin(i, j, coin(rng) ? w : -w);
        any = true;
    }
    if (!any) {
        auto [i, j] =
            crossing[std::uniform_int_distribution<std::size_t>(0, crossing.size() - 1)(rng)];
        t.set_margin(i, j, 2 * half_weight(rng));
    }
    return t;
}

WeightedTournament random_parity_tournament(int n, Parity parity, int max_weight,
                                            std::mt19937_64& rng) {
    if (n < 1) throw InputError("generator needs n >= 1");
    if (parity == Parity::Mixed) throw InputError("cannot generate a mixed-parity tournament");
    std::uniform_int_distribution<int> coin(0, 1);
    WeightedTournament t(n);
    bool any = false;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            long long w;
            if (parity == Parity::AllOdd) {
                std::uniform_int_distribution<long long> half(0, std::max(0, (max_weight - 1) / 2));
                w = 2 * half(rng) + 1;
            } else {
                std::uniform_int_distribution<long long> half(0, std::max(1, max_weight / 2));
                w = 2 * half(rng);
            }
            if (w != 0) any = true;
            t.set_margin(i, j, coin(rng) ? w : -w);
        }
    if (parity == Parity::AllEven && !any && n >= 2) t.set_margin(0, 1, 2);
    return t;
}

Profile random_profile(int n, int voters, std::mt19937_64& rng) {
    if (n < 1 || voters < 1) throw InputError("profile generator needs n >= 1 and voters >= 1");
    Profile p;
    p.n_candidates = n;
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    for (int v = 0; v < voters; ++v) {
        std::shuffle(order.begin(), order.end(), rng);
        p.entries.push_back({Ranking{order}, 1});
    }
    return p;
}

FasInstance random_bipartite_digraph(int n, int max_arcs, std::mt19937_64& rng) {
    if (n < 2) throw InputError("digraph generator needs n >= 2");
    if (max_arcs < 1) throw InputError("digraph generator needs max_arcs >= 1");
    const auto side = random_sides(n, rng);
    std::vector<std::pair<int, int>> ordered;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j && side[i] != side[j]) ordered.emplace_back(i, j);
    std::shuffle(ordered.begin(), ordered.end(), rng);
    const auto cap = std::min<std::size_t>(ordered.size(), static_cast<std::size_t>(max_arcs));
    std::uniform_int_distribution<std::size_t> count(1, cap);
    FasInstance f;
    f.n = n;
    f.arcs.assign(ordered.begin(), ordered.begin() + static_cast<long>(count(rng)));
    return f;
}

}  // namespace ek
