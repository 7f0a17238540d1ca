#include "ek/construct.hpp"

#include "ek/errors.hpp"

#include <algorithm>

namespace ek {

SquareParams SquareParams::for_nodes(int n) {
    if (n < 1) throw InputError("construction needs at least one node");
    if (n > 60) throw CapacityError("square construction supports n <= 60");
    SquareParams p;
    p.n = n;
    p.delta = 1LL << (n + 1);
    return p;
}

long long SquareParams::node_pow(int i) const { return 1LL << (i + 1); }

CircleParams CircleParams::for_nodes(int n) {
    if (n < 1) throw InputError("construction needs at least one node");
    CircleParams p;
    p.n = n;
    p.eps = Rational(BigInt(1), BigInt(1) << (n + 1));
    return p;
}

Rational CircleParams::theta(int i) const {
    return Rational(BigInt(1) << (i + 1), BigInt(1) << n);
}

namespace {

void require_even(const WeightedTournament& t) {
    if (check_parity(t) != Parity::AllEven)
        throw ParityError("square constructions need all-even weights, got " +
                          to_string(check_parity(t)));
}

// side[i] = 0 for left, 1 for right. The partition must cover {0..n-1}
// exactly and every positive arc must cross it.
std::vector<int> side_table(const WeightedTournament& t, const Bipartition& b) {
    const int n = t.size();
    std::vector<int> side(static_cast<std::size_t>(n), -1);
    auto place = [&](const std::vector<int>& ids, int s) {
        for (int id : ids) {
            if (id < 0 || id >= n) throw InputError("bipartition id out of range");
            if (side[id] != -1) throw InputError("bipartition sides overlap on node " + std::to_string(id));
            side[id] = s;
        }
    };
    place(b.left, 0);
    place(b.right, 1);
    for (int i = 0; i < n; ++i)
        if (side[i] == -1) throw InputError("bipartition misses node " + std::to_string(i));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (t.margin(i, j) != 0 && side[i] == side[j])
                throw BipartitionError("arc between " + std::to_string(i) + " and " +
                                       std::to_string(j) + " does not cross the bipartition");
    return side;
}

std::string voter_label(char kind, int winner, int loser) {
    return std::string(1, kind) + "_" + std::to_string(winner) + "_" + std::to_string(loser);
}

}  // namespace

PlanarEmbedding construct_l1(const WeightedTournament& t, const Bipartition& b) {
    const int n = t.size();
    const auto params = SquareParams::for_nodes(n);
    require_even(t);
    const auto side = side_table(t, b);

    // Everything is emitted post-scaled by 2: square [0, 2*Delta]^2, integer
    // coordinates, eps = 1.
    const long long d2 = 2 * params.delta;
    PlanarEmbedding e;
    e.norm = Norm::L1;
    for (int i = 0; i < n; ++i)
        e.candidates.push_back({i, {Rational(side[i] == 0 ? 0 : d2), Rational(2 * params.node_pow(i))}});

    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const long long m = t.margin(i, j);
            if (m == 0) continue;
            const int winner = m > 0 ? i : j;
            const int loser = m > 0 ? j : i;
            const long long w = m > 0 ? m : -m;
            const int lnode = side[i] == 0 ? i : j;
            const int rnode = side[i] == 0 ? j : i;
            // 2*x_A with x_A = (Delta + y_left - y_right) / 2.
            const long long xa = params.delta + params.node_pow(lnode) - params.node_pow(rnode);
            const long long shift = winner == lnode ? -1 : 1;
            e.voters.push_back({voter_label('f', winner, loser),
                                {Rational(xa + shift), Rational(d2)},
                                w / 2});
            e.voters.push_back({voter_label('g', winner, loser),
                                {Rational(d2 - xa + shift), Rational(0)},
                                w / 2});
        }
    return e;
}

PlanarEmbedding construct_linf(const WeightedTournament& t, const Bipartition& b) {
    const int n = t.size();
    const auto params = SquareParams::for_nodes(n);
    require_even(t);
    const auto side = side_table(t, b);

    const long long d2 = 2 * params.delta;
    PlanarEmbedding e;
    e.norm = Norm::Linf;
    for (int i = 0; i < n; ++i) {
        const long long p = 2 * params.node_pow(i);
        if (side[i] == 0)
            e.candidates.push_back({i, {Rational(-p), Rational(p - d2)}});
        else
            e.candidates.push_back({i, {Rational(p), Rational(d2 - p)}});
    }

    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const long long m = t.margin(i, j);
            if (m == 0) continue;
            const int winner = m > 0 ? i : j;
            const int loser = m > 0 ? j : i;
            const long long w = m > 0 ? m : -m;
            const int lnode = side[i] == 0 ? i : j;
            const int rnode = side[i] == 0 ? j : i;
            // A_ij sits on the upper-left side at parameter (2^i + 2^j)/2;
            // post-scaling turns that into t2 below. B_ij = -A_ij.
            const long long t2 = params.node_pow(lnode) + params.node_pow(rnode);
            // Winner on the left pulls voters down the sides (toward the
            // bottom-left corner); winner on the right pushes them up.
            const long long shift = winner == lnode ? -1 : 1;
            e.voters.push_back({voter_label('f', winner, loser),
                                {Rational(t2 - d2 + shift), Rational(t2 + shift)},
                                w / 2});
            e.voters.push_back({voter_label('g', winner, loser),
                                {Rational(d2 - t2 + shift), Rational(-t2 + shift)},
                                w / 2});
        }
    return e;
}

namespace {

// Margin the auxiliary angle-0 voter contributes to pair (i, j): its ranking
// follows increasing Theta, which is increasing node id.
long long aux_contribution(int i, int j) { return i < j ? 1 : -1; }

}  // namespace

CircularEmbedding construct_l2(const WeightedTournament& t) {
    const int n = t.size();
    const auto params = CircleParams::for_nodes(n);
    const Parity parity = check_parity(t);
    if (parity == Parity::Mixed)
        throw ParityError("circle construction needs weights of one parity, got mixed");

    CircularEmbedding e;
    for (int i = 0; i < n; ++i) e.candidates.push_back({i, params.theta(i)});

    if (parity == Parity::AllOdd) e.voters.push_back({"aux", Rational(0), false, 1});

    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            long long m = t.margin(i, j);
            if (parity == Parity::AllOdd) m -= aux_contribution(i, j);
            if (m == 0) continue;
            const int winner = m > 0 ? i : j;
            const int loser = m > 0 ? j : i;
            const long long w = m > 0 ? m : -m;
            const Rational mid = (params.theta(i) + params.theta(j)) / 2;
            // f goes eps toward the winner's side of the midline D_ij; g is
            // diametrically opposite, which lands on the same side of D_ij.
            const int sigma = params.theta(winner) > params.theta(loser) ? 1 : -1;
            e.voters.push_back(
                {voter_label('f', winner, loser), mid + sigma * params.eps, false, w / 2});
            e.voters.push_back(
                {voter_label('g', winner, loser), mid - sigma * params.eps, true, w / 2});
        }
    return e;
}

Profile construct_mcgarvey(const WeightedTournament& t) {
    const int n = t.size();
    if (n < 1) throw InputError("construction needs at least one node");
    const Parity parity = check_parity(t);
    if (parity == Parity::Mixed)
        throw ParityError("McGarvey construction needs weights of one parity, got mixed");

    Profile p;
    p.n_candidates = n;

    if (parity == Parity::AllOdd) {
        Ranking identity;
        for (int i = 0; i < n; ++i) identity.order.push_back(i);
        p.entries.push_back({std::move(identity), 1});
    }

    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            long long m = t.margin(i, j);
            if (parity == Parity::AllOdd) m -= aux_contribution(i, j);
            if (m == 0) continue;
            const int winner = m > 0 ? i : j;
            const int loser = m > 0 ? j : i;
            const long long w = m > 0 ? m : -m;

            Ranking f, g;
            f.order = {winner, loser};
            for (int c = 0; c < n; ++c)
                if (c != winner && c != loser) f.order.push_back(c);
            for (int c = n - 1; c >= 0; --c)
                if (c != winner && c != loser) g.order.push_back(c);
            g.order.push_back(winner);
            g.order.push_back(loser);

            p.entries.push_back({std::move(f), w / 2});
            p.entries.push_back({std::move(g), w / 2});
        }
    return p;
}

}  // namespace ek
