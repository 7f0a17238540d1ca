#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ek/construct.hpp"
#include "ek/errors.hpp"
#include "ek/gen.hpp"
#include "ek/geometry.hpp"
#include "ek/solve.hpp"
#include "test_util.hpp"

#include <random>

using namespace ek;
using namespace ek::test;

namespace {

const Profile kCycle = profile(3, {{{0, 1, 2}, 1}, {{1, 2, 0}, 1}, {{2, 0, 1}, 1}});

// Maximum margin sum over rankings consistent with their pair orders,
// enumerated independently of the solvers.
long long max_consistent_margin_sum(const Profile& p) {
    const WeightedTournament t = majority_tournament(p);
    long long best = 0;
    bool first = true;
    for (const auto& r : all_rankings(p.n_candidates)) {
        std::vector<int> pos(static_cast<std::size_t>(p.n_candidates));
        for (int i = 0; i < p.n_candidates; ++i) pos[r.order[i]] = i;
        long long sum = 0;
        for (int i = 0; i < p.n_candidates; ++i)
            for (int j = i + 1; j < p.n_candidates; ++j)
                sum += pos[i] < pos[j] ? t.margin(i, j) : t.margin(j, i);
        if (first || sum > best) best = sum;
        first = false;
    }
    return best;
}

}  // namespace

TEST_SUITE_BEGIN("solve");

TEST_CASE("brute force on fixed profiles") {
    const KemenyResult unanimous = kemeny_brute_force(profile(3, {{{0, 1, 2}, 5}}));
    CHECK(unanimous.optimal == ranking({0, 1, 2}));
    CHECK(unanimous.cost == 0);
    CHECK(unanimous.optima_count == 1);

    const KemenyResult cycle = kemeny_brute_force(kCycle);
    CHECK(cycle.cost == 4);
    CHECK(cycle.optima_count == 3);
    CHECK(cycle.optimal == ranking({0, 1, 2}));  // lex-smallest of the three rotations

    const KemenyResult pair = kemeny_brute_force(profile(2, {{{0, 1}, 1}, {{1, 0}, 1}}));
    CHECK(pair.cost == 1);
    CHECK(pair.optima_count == 2);
    CHECK(pair.optimal == ranking({0, 1}));
}

TEST_CASE("dp matches brute force on the fixed profiles") {
    for (const Profile& p : {profile(3, {{{0, 1, 2}, 5}}), kCycle,
                             profile(2, {{{0, 1}, 1}, {{1, 0}, 1}}), profile(1, {{{0}, 2}})}) {
        const KemenyResult bf = kemeny_brute_force(p);
        const KemenyResult dp = kemeny_dp(p);
        CHECK(dp.cost == bf.cost);
        CHECK(dp.optimal == bf.optimal);
        CHECK(!dp.optima_count.has_value());
    }
    CHECK(kemeny_dp(profile(1, {{{0}, 2}})).optimal == ranking({0}));
}

TEST_CASE("dp on a profile induced by the circle construction") {
    WeightedTournament t(2);
    t.set_margin(0, 1, 2);
    const Profile p = derive_profile(construct_l2(t));
    const KemenyResult r = kemeny_dp(p);
    CHECK(r.optimal == ranking({0, 1}));
    CHECK(r.cost == (p.total_voters() - 2) / 2);
}

TEST_CASE("oracle equivalence on random profiles") {
    std::mt19937_64 rng(71);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 8);
        const Profile p = random_profile(n, 1 + static_cast<int>(rng() % 15), rng);
        const KemenyResult bf = kemeny_brute_force(p);
        const KemenyResult dp = kemeny_dp(p);
        CHECK(bf.cost == dp.cost);
        CHECK(bf.optimal == dp.optimal);
        CHECK(bf.cost == kt_to_profile(bf.optimal, p));
    }
}

TEST_CASE("lower bound is valid and tight exactly when majority is acyclic") {
    CHECK(kemeny_lower_bound(profile(3, {{{0, 1, 2}, 5}})) == 0);
    CHECK(kemeny_lower_bound(kCycle) == 3);
    CHECK(kemeny_dp(kCycle).cost == 4);

    std::mt19937_64 rng(73);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 7);
        const Profile p = random_profile(n, 1 + static_cast<int>(rng() % 12), rng);
        CHECK(kemeny_lower_bound(p) <= kemeny_dp(p).cost);
    }
}

TEST_CASE("lower bound meets the optimum on line embeddings") {
    // all points on one axis: the majority relation is transitive
    std::mt19937_64 rng(79);
    int checked = 0;
    while (checked < 40) {
        const int n = 2 + static_cast<int>(rng() % 5);
        PlanarEmbedding e;
        e.norm = Norm::L1;
        for (int i = 0; i < n; ++i)
            e.candidates.push_back({i, {Rational(static_cast<long long>(rng() % 200)), Rational(0)}});
        for (int v = 0; v < 1 + static_cast<int>(rng() % 6); ++v)
            e.voters.push_back({"v" + std::to_string(v),
                                {Rational(static_cast<long long>(rng() % 200)), Rational(0)},
                                1});
        if (!verify_embedding(e).empty()) continue;
        const Profile p = derive_profile(e);
        CHECK(kemeny_lower_bound(p) == kemeny_dp(p).cost);
        ++checked;
    }
}

TEST_CASE("kemeny cost complements the best consistent margin sum") {
    std::mt19937_64 rng(83);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 5);
        const Profile p = random_profile(n, 1 + static_cast<int>(rng() % 10), rng);
        const long long pairs = static_cast<long long>(n) * (n - 1) / 2;
        CHECK(2 * kemeny_dp(p).cost ==
              p.total_voters() * pairs - max_consistent_margin_sum(p));
    }
}

TEST_CASE("slater ranking") {
    WeightedTournament transitive(3);
    transitive.set_margin(0, 1, 2);
    transitive.set_margin(0, 2, 2);
    transitive.set_margin(1, 2, 2);
    const KemenyResult t = slater_ranking(transitive);
    CHECK(t.cost == 0);
    CHECK(t.optimal == ranking({0, 1, 2}));

    WeightedTournament cycle(3);
    cycle.set_margin(0, 1, 1);
    cycle.set_margin(1, 2, 1);
    cycle.set_margin(2, 0, 1);
    const KemenyResult c = slater_ranking(cycle);
    CHECK(c.cost == 1);
    CHECK(c.optimal == ranking({0, 1, 2}));
    // count co-optima through the generic brute-force minimizer
    const KemenyResult cb = minimize_brute_force(PairCostMatrix::from_tournament_signs(cycle));
    CHECK(cb.cost == 1);
    CHECK(cb.optima_count == 3);

    const KemenyResult flat = slater_ranking(WeightedTournament(3));
    CHECK(flat.cost == 0);
    CHECK(flat.optimal == ranking({0, 1, 2}));
}

TEST_CASE("slater only reads margin signs") {
    std::mt19937_64 rng(89);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 6);
        const WeightedTournament t = random_parity_tournament(n, Parity::AllEven, 10, rng);
        WeightedTournament signs(n);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                signs.set_margin(i, j, t.margin(i, j) > 0 ? 1 : (t.margin(i, j) < 0 ? -1 : 0));
        const KemenyResult a = slater_ranking(t);
        const KemenyResult b = slater_ranking(signs);
        CHECK(a.cost == b.cost);
        CHECK(a.optimal == b.optimal);
    }
}

TEST_CASE("capacity guards") {
    Profile big;
    big.n_candidates = 11;
    Ranking r;
    for (int i = 0; i < 11; ++i) r.order.push_back(i);
    big.entries.push_back({r, 1});
    CHECK_THROWS_AS(kemeny_brute_force(big), CapacityError);

    Profile huge;
    huge.n_candidates = 25;
    Ranking h;
    for (int i = 0; i < 25; ++i) h.order.push_back(i);
    huge.entries.push_back({h, 1});
    CHECK_THROWS_AS(kemeny_dp(huge), CapacityError);

    Profile crowd;
    crowd.n_candidates = 2;
    crowd.entries.push_back({ranking({0, 1}), (1LL << 20) + 1});
    CHECK_THROWS_AS(kemeny_dp(crowd), CapacityError);
}

TEST_CASE("pair cost matrix invariants") {
    const PairCostMatrix m = PairCostMatrix::from_profile(kCycle);
    const long long v = kCycle.total_voters();
    for (int i = 0; i < 3; ++i) {
        CHECK(m.cost_before(i, i) == 0);
        for (int j = 0; j < 3; ++j)
            if (i != j) CHECK(m.cost_before(i, j) + m.cost_before(j, i) == v);
    }
}

TEST_SUITE_END();
