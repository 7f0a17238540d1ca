#pragma once

#include <optional>
#include <string>
#include <vector>

namespace ek {

// A total strict order over candidates 0..n-1, most-preferred first.
struct Ranking {
    std::vector<int> order;

    int size() const { return static_cast<int>(order.size()); }
    bool operator==(const Ranking&) const = default;
};

// Throws InputError unless r.order is a permutation of {0..n-1}.
void validate_ranking(const Ranking& r, int n_candidates);

struct ProfileEntry {
    Ranking ranking;
    long long multiplicity = 1;

    bool operator==(const ProfileEntry&) const = default;
};

// Multiset of rankings; multiplicities keep the representation proportional
// to the tournament description (constructions emit w/2 identical copies).
struct Profile {
    int n_candidates = 0;
    std::vector<ProfileEntry> entries;

    long long total_voters() const;
    bool operator==(const Profile&) const = default;
};

// Throws InputError unless every ranking has length n_candidates, every
// multiplicity is >= 1 and the total voter count is >= 1.
void validate_profile(const Profile& p);

// Antisymmetric integer margin matrix; margin(i,j) > 0 means i beats j by
// that margin, 0 means the pair is ex aequo (no arc).
class WeightedTournament {
public:
    WeightedTournament() = default;
    explicit WeightedTournament(int n) : n_(n), margin_(static_cast<std::size_t>(n) * n, 0) {}

    int size() const { return n_; }
    long long margin(int i, int j) const { return margin_[idx(i, j)]; }

    // Sets both (i,j) and (j,i); i == j is rejected.
    void set_margin(int i, int j, long long w);

    bool operator==(const WeightedTournament&) const = default;

private:
    std::size_t idx(int i, int j) const { return static_cast<std::size_t>(i) * n_ + j; }

    int n_ = 0;
    std::vector<long long> margin_;
};

// Two-coloring of the digraph underlying the positive arcs.
struct Bipartition {
    std::vector<int> left;
    std::vector<int> right;

    bool operator==(const Bipartition&) const = default;
};

enum class Parity { AllEven, AllOdd, Mixed };

std::string to_string(Parity p);

// Number of unordered candidate pairs ranked oppositely by a and b.
// Symmetric; 0 <= result <= n(n-1)/2. Throws InputError on length mismatch.
long long kendall_tau(const Ranking& a, const Ranking& b);

// Multiplicity-weighted sum of kendall_tau over all profile entries.
long long kt_to_profile(const Ranking& r, const Profile& p);

// Majority margin matrix: margin(i,j) = #{v: i >_v j} - #{v: j >_v i}.
// Every margin has the same parity as the total voter count.
WeightedTournament majority_tournament(const Profile& p);

// Classifies the multiset of off-diagonal |margin| values. Off-diagonal
// zeros count as even. Mixed tournaments are not inducible (Debord).
// A tournament with no pairs (n <= 1) is vacuously AllEven.
Parity check_parity(const WeightedTournament& t);

// 2-colors the undirected support of the positive arcs, if possible.
// Isolated nodes (and each BFS root) go to `left`.
std::optional<Bipartition> check_bipartite(const WeightedTournament& t);

}  // namespace ek
