#include "ek/pipeline.hpp"

#include "ek/errors.hpp"
#include "ek/solve.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <sstream>

namespace ek {

void validate_fas(const FasInstance& f) {
    if (f.n < 1) throw InputError("FAS instance needs at least one node");
    for (const auto& [u, v] : f.arcs) {
        if (u < 0 || u >= f.n || v < 0 || v >= f.n) throw InputError("FAS arc endpoint out of range");
        if (u == v) throw InputError("FAS instances must not contain self-loops");
    }
}

namespace {

std::vector<long long> arc_counts(const FasInstance& f) {
    std::vector<long long> a(static_cast<std::size_t>(f.n) * f.n, 0);
    for (const auto& [u, v] : f.arcs) ++a[static_cast<std::size_t>(u) * f.n + v];
    return a;
}

}  // namespace

WeightedTournament fas_to_tournament(const FasInstance& f) {
    validate_fas(f);
    const auto a = arc_counts(f);
    WeightedTournament t(f.n);
    for (int i = 0; i < f.n; ++i)
        for (int j = i + 1; j < f.n; ++j)
            t.set_margin(i, j, 2 * (a[static_cast<std::size_t>(i) * f.n + j] -
                                    a[static_cast<std::size_t>(j) * f.n + i]));
    return t;
}

long long fas_brute_force(const FasInstance& f) {
    validate_fas(f);
    if (f.n > 9) throw CapacityError("FAS brute force supports n <= 9");
    const auto a = arc_counts(f);
    std::vector<int> order(static_cast<std::size_t>(f.n));
    std::iota(order.begin(), order.end(), 0);
    long long best = -1;
    do {
        long long backward = 0;
        for (int x = 0; x < f.n; ++x)
            for (int y = x + 1; y < f.n; ++y)
                backward += a[static_cast<std::size_t>(order[y]) * f.n + order[x]];
        if (best < 0 || backward < best) best = backward;
    } while (std::next_permutation(order.begin(), order.end()));
    return best;
}

namespace {

int max_embedding_bits(const PlanarEmbedding& e) {
    int bits = 0;
    for (const auto& c : e.candidates) {
        bits = std::max(bits, coordinate_bit_length(c.pos.x));
        bits = std::max(bits, coordinate_bit_length(c.pos.y));
    }
    for (const auto& v : e.voters) {
        bits = std::max(bits, coordinate_bit_length(v.pos.x));
        bits = std::max(bits, coordinate_bit_length(v.pos.y));
    }
    return bits;
}

int max_embedding_bits(const CircularEmbedding& e) {
    int bits = 0;
    for (const auto& c : e.candidates) bits = std::max(bits, coordinate_bit_length(c.angle));
    for (const auto& v : e.voters) bits = std::max(bits, coordinate_bit_length(v.angle));
    return bits;
}

Bipartition require_bipartite(const WeightedTournament& t) {
    auto b = check_bipartite(t);
    if (!b) throw BipartitionError("tournament is not bipartite");
    return *b;
}

// A tournament with no arcs compiles to a voterless embedding; `profile`
// stays empty then (profiles need V >= 1).
struct BuiltProfile {
    std::optional<Profile> profile;
    int voter_records = 0;
    int coord_bits = 0;
};

BuiltProfile build_profile(const WeightedTournament& t, Norm norm) {
    BuiltProfile out;
    if (norm == Norm::L2) {
        const CircularEmbedding e = construct_l2(t);
        out.voter_records = static_cast<int>(e.voters.size());
        out.coord_bits = max_embedding_bits(e);
        if (!e.voters.empty()) out.profile = derive_profile(e);
    } else {
        // parity is reported ahead of bipartiteness when both fail
        if (check_parity(t) != Parity::AllEven)
            throw ParityError("square constructions need all-even weights, got " +
                              to_string(check_parity(t)));
        const Bipartition b = require_bipartite(t);
        const PlanarEmbedding e = norm == Norm::L1 ? construct_l1(t, b) : construct_linf(t, b);
        out.voter_records = static_cast<int>(e.voters.size());
        out.coord_bits = max_embedding_bits(e);
        if (!e.voters.empty()) out.profile = derive_profile(e);
    }
    return out;
}

}  // namespace

std::string PipelineReport::to_text() const {
    std::ostringstream os;
    os << "nodes: " << instance.n << "\n";
    os << "arcs: " << instance.arcs.size() << "\n";
    os << "norm: " << to_string(norm) << "\n";
    os << "embedding: " << n_candidates << " candidates, " << n_voter_records
       << " voter points, max coordinate bits " << max_coordinate_bits << "\n";
    os << "profile voters: " << total_voters << "\n";
    os << "kemeny cost: " << kemeny_cost << "\n";
    os << "implied fas: " << implied_fas << "\n";
    if (brute_force_fas)
        os << "brute-force fas: " << *brute_force_fas << "\n";
    else
        os << "brute-force fas: n/a (n > 9)\n";
    return os.str();
}

PipelineReport run_pipeline(const FasInstance& f, Norm norm) {
    validate_fas(f);
    PipelineReport rep;
    rep.instance = f;
    rep.norm = norm;
    rep.tournament = fas_to_tournament(f);
    rep.n_candidates = f.n;

    // A digraph whose arcs fully cancel has a vacuous Kemeny stage; only the
    // 2-cycle floor remains of its FAS value.
    const BuiltProfile built = build_profile(rep.tournament, norm);
    rep.n_voter_records = built.voter_records;
    rep.max_coordinate_bits = built.coord_bits;
    if (built.profile) {
        rep.total_voters = built.profile->total_voters();
        rep.kemeny_cost = kemeny_dp(*built.profile).cost;
    }

    // Backward arc count of the best ordering: the 2-cycle floor is paid no
    // matter what, the rest comes from pairs ordered against their margin.
    const auto a = arc_counts(f);
    long long floor2 = 0, weight = 0;
    for (int i = 0; i < f.n; ++i)
        for (int j = i + 1; j < f.n; ++j) {
            floor2 += std::min(a[static_cast<std::size_t>(i) * f.n + j],
                               a[static_cast<std::size_t>(j) * f.n + i]);
            weight += std::abs(rep.tournament.margin(i, j));
        }
    const long long pairs = static_cast<long long>(f.n) * (f.n - 1) / 2;
    const long long best_margin_sum = rep.total_voters * pairs - 2 * rep.kemeny_cost;
    rep.implied_fas = floor2 + (weight - best_margin_sum) / 4;

    if (f.n <= 9) rep.brute_force_fas = fas_brute_force(f);
    return rep;
}

InducibilityReport verify_inducibility(const WeightedTournament& t, Norm norm) {
    InducibilityReport rep;
    try {
        const BuiltProfile built = build_profile(t, norm);
        if (!built.profile) {
            rep.diagnostics = "degenerate: construction yields no voters (tournament has no arcs)";
            return rep;
        }
        rep.total_voters = built.profile->total_voters();
        const WeightedTournament induced = majority_tournament(*built.profile);
        if (induced == t) {
            rep.ok = true;
            rep.diagnostics = "round-trip exact";
        } else {
            rep.diagnostics = "derived majority tournament differs from input";
        }
    } catch (const ParityError& ex) {
        rep.diagnostics = std::string("parity: ") + ex.what();
    } catch (const BipartitionError& ex) {
        rep.diagnostics = std::string("bipartition: ") + ex.what();
    } catch (const TieError& ex) {
        rep.diagnostics = std::string("tie: ") + ex.what();
    }
    return rep;
}

}  // namespace ek
