#include "ek/core.hpp"

#include "ek/errors.hpp"

#include <algorithm>
#include <queue>

namespace ek {

void validate_ranking(const Ranking& r, int n_candidates) {
    if (r.size() != n_candidates)
        throw InputError("ranking has length " + std::to_string(r.size()) + ", expected " +
                         std::to_string(n_candidates));
    std::vector<char> seen(static_cast<std::size_t>(n_candidates), 0);
    for (int c : r.order) {
        if (c < 0 || c >= n_candidates)
            throw InputError("ranking contains out-of-range candidate " + std::to_string(c));
        if (seen[c]) throw InputError("ranking repeats candidate " + std::to_string(c));
        seen[c] = 1;
    }
}

long long Profile::total_voters() const {
    long long v = 0;
    for (const auto& e : entries) v += e.multiplicity;
    return v;
}

void validate_profile(const Profile& p) {
    if (p.n_candidates < 1) throw InputError("profile needs at least one candidate");
    for (const auto& e : p.entries) {
        validate_ranking(e.ranking, p.n_candidates);
        if (e.multiplicity < 1) throw InputError("profile multiplicities must be >= 1");
    }
    if (p.total_voters() < 1) throw InputError("profile needs at least one voter");
}

void WeightedTournament::set_margin(int i, int j, long long w) {
    if (i < 0 || j < 0 || i >= n_ || j >= n_)
        throw InputError("node id out of range");
    if (i == j) throw InputError("diagonal margins are fixed at zero");
    margin_[idx(i, j)] = w;
    margin_[idx(j, i)] = -w;
}

std::string to_string(Parity p) {
    switch (p) {
        case Parity::AllEven: return "all-even";
        case Parity::AllOdd: return "all-odd";
        default: return "mixed";
    }
}

namespace {

// positions[c] = rank index of candidate c (0 = most preferred).
std::vector<int> position_table(const Ranking& r) {
    std::vector<int> pos(r.order.size());
    for (int i = 0; i < r.size(); ++i) pos[static_cast<std::size_t>(r.order[i])] = i;
    return pos;
}

}  // namespace

long long kendall_tau(const Ranking& a, const Ranking& b) {
    if (a.size() != b.size()) throw InputError("kendall_tau: rankings of different lengths");
    const int n = a.size();
    validate_ranking(a, n);
    validate_ranking(b, n);
    const auto pa = position_table(a);
    const auto pb = position_table(b);
    long long disagreements = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if ((pa[i] < pa[j]) != (pb[i] < pb[j])) ++disagreements;
    return disagreements;
}

long long kt_to_profile(const Ranking& r, const Profile& p) {
    validate_profile(p);
    if (r.size() != p.n_candidates)
        throw InputError("kt_to_profile: ranking length does not match profile");
    long long total = 0;
    for (const auto& e : p.entries) total += e.multiplicity * kendall_tau(r, e.ranking);
    return total;
}

WeightedTournament majority_tournament(const Profile& p) {
    validate_profile(p);
    const int n = p.n_candidates;
    WeightedTournament t(n);
    std::vector<long long> acc(static_cast<std::size_t>(n) * n, 0);
    for (const auto& e : p.entries) {
        const auto pos = position_table(e.ranking);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                if (pos[i] < pos[j])
                    acc[static_cast<std::size_t>(i) * n + j] += e.multiplicity;
                else
                    acc[static_cast<std::size_t>(i) * n + j] -= e.multiplicity;
            }
    }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) t.set_margin(i, j, acc[static_cast<std::size_t>(i) * n + j]);
    return t;
}

Parity check_parity(const WeightedTournament& t) {
    bool saw_even = false, saw_odd = false;
    for (int i = 0; i < t.size(); ++i)
        for (int j = i + 1; j < t.size(); ++j) {
            if (t.margin(i, j) % 2 == 0)
                saw_even = true;
            else
                saw_odd = true;
        }
    if (saw_even && saw_odd) return Parity::Mixed;
    if (saw_odd) return Parity::AllOdd;
    return Parity::AllEven;
}

std::optional<Bipartition> check_bipartite(const WeightedTournament& t) {
    const int n = t.size();
    std::vector<int> color(static_cast<std::size_t>(n), -1);
    for (int root = 0; root < n; ++root) {
        if (color[root] != -1) continue;
        color[root] = 0;
        std::queue<int> q;
        q.push(root);
        while (!q.empty()) {
            const int u = q.front();
            q.pop();
            for (int v = 0; v < n; ++v) {
                if (t.margin(u, v) == 0) continue;
                if (color[v] == -1) {
                    color[v] = 1 - color[u];
                    q.push(v);
                } else if (color[v] == color[u]) {
                    return std::nullopt;
                }
            }
        }
    }
    Bipartition b;
    for (int i = 0; i < n; ++i) (color[i] == 0 ? b.left : b.right).push_back(i);
    return b;
}

}  // namespace ek
