#include "ek/geometry.hpp"

#include "ek/errors.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>

namespace ek {

std::string to_string(Norm n) {
    switch (n) {
        case Norm::L1: return "l1";
        case Norm::L2: return "l2";
        default: return "linf";
    }
}

namespace {

const Rational kAngleCap(3);

void check_angle(const Rational& a, const std::string& what) {
    if (a < 0 || a > kAngleCap)
        throw InputError(what + " angle " + rational_to_string(a) + " outside [0, 3]");
}

void check_candidate_ids(int n, const std::vector<int>& ids) {
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    for (int id : ids) {
        if (id < 0 || id >= n) throw InputError("candidate id " + std::to_string(id) + " out of range");
        if (seen[id]) throw InputError("duplicate candidate id " + std::to_string(id));
        seen[id] = 1;
    }
}

}  // namespace

void validate_embedding(const PlanarEmbedding& e) {
    if (e.norm == Norm::L2) throw InputError("planar embeddings support l1/linf only; l2 uses the circle");
    std::vector<int> ids;
    for (const auto& c : e.candidates) ids.push_back(c.id);
    check_candidate_ids(e.n_candidates(), ids);
    for (const auto& v : e.voters)
        if (v.multiplicity < 1) throw InputError("voter multiplicities must be >= 1");
}

void validate_embedding(const CircularEmbedding& e) {
    std::vector<int> ids;
    for (const auto& c : e.candidates) {
        ids.push_back(c.id);
        check_angle(c.angle, "candidate");
    }
    check_candidate_ids(e.n_candidates(), ids);
    for (const auto& v : e.voters) {
        check_angle(v.angle, "voter");
        if (v.multiplicity < 1) throw InputError("voter multiplicities must be >= 1");
    }
}

Rational dist_l1(const PlanarPoint& p, const PlanarPoint& q) {
    return abs(p.x - q.x) + abs(p.y - q.y);
}

Rational dist_linf(const PlanarPoint& p, const PlanarPoint& q) {
    return std::max(abs(p.x - q.x), abs(p.y - q.y));
}

Rational dist_planar(Norm norm, const PlanarPoint& p, const PlanarPoint& q) {
    switch (norm) {
        case Norm::L1: return dist_l1(p, q);
        case Norm::Linf: return dist_linf(p, q);
        default: throw InputError("planar distance undefined for l2");
    }
}

Pref compare_l2_on_circle(const Rational& voter_angle, bool antipode, const Rational& cand_a,
                          const Rational& cand_b) {
    check_angle(voter_angle, "voter");
    check_angle(cand_a, "candidate");
    check_angle(cand_b, "candidate");
    const Rational da = abs(voter_angle - cand_a);
    const Rational db = abs(voter_angle - cand_b);
    if (da == db) return Pref::Tie;
    if (antipode) return da > db ? Pref::A : Pref::B;
    return da < db ? Pref::A : Pref::B;
}

namespace {

// Sort keys: smaller key = more preferred. Equal keys are a tie.
template <typename KeyFn>
std::vector<TieReport> scan_ties(int n, const std::string& label, KeyFn key) {
    std::vector<TieReport> out;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (key(i) == key(j)) out.push_back({label, i, j});
    return out;
}

template <typename KeyFn>
Ranking rank_by_key(int n, const std::string& label, KeyFn key) {
    std::vector<Rational> keys(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) keys[i] = key(i);
    Ranking r;
    r.order.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) r.order[i] = i;
    std::sort(r.order.begin(), r.order.end(),
              [&](int a, int b) { return keys[a] < keys[b]; });
    for (int i = 0; i + 1 < n; ++i)
        if (keys[r.order[i]] == keys[r.order[i + 1]])
            throw TieError(label, std::min(r.order[i], r.order[i + 1]),
                           std::max(r.order[i], r.order[i + 1]));
    return r;
}

// Preference key of candidate `id` for one circular voter. Antipodal voters
// prefer the farther stored angle, so their key is negated.
Rational circular_key(const CircularEmbedding& e, const CircularVoter& v, int idx) {
    const Rational sep = abs(v.angle - e.candidates[idx].angle);
    return v.antipode ? -sep : sep;
}

}  // namespace

std::vector<TieReport> verify_embedding(const PlanarEmbedding& e) {
    validate_embedding(e);
    const int n = e.n_candidates();
    std::vector<TieReport> out;
    for (const auto& v : e.voters) {
        auto reports = scan_ties(n, v.label, [&](int i) {
            return dist_planar(e.norm, v.pos, e.candidates[i].pos);
        });
        out.insert(out.end(), reports.begin(), reports.end());
    }
    return out;
}

std::vector<TieReport> verify_embedding(const CircularEmbedding& e) {
    validate_embedding(e);
    const int n = e.n_candidates();
    std::vector<TieReport> out;
    for (const auto& v : e.voters) {
        auto reports = scan_ties(n, v.label, [&](int i) { return circular_key(e, v, i); });
        out.insert(out.end(), reports.begin(), reports.end());
    }
    return out;
}

namespace {

// Candidates may be listed in any id order; rankings must come out in ids.
template <typename Emb, typename KeyFn>
Profile derive_common(const Emb& e, KeyFn key_for_voter) {
    validate_embedding(e);
    if (e.voters.empty()) throw EmptyProfileError("embedding has no voters; profiles need V >= 1");
    const int n = e.n_candidates();
    std::vector<int> by_id(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) by_id[e.candidates[i].id] = i;

    Profile p;
    p.n_candidates = n;
    for (const auto& v : e.voters) {
        auto key = key_for_voter(v);
        Ranking r = rank_by_key(n, v.label, [&](int id) { return key(by_id[id]); });
        p.entries.push_back({std::move(r), v.multiplicity});
    }
    return p;
}

}  // namespace

Profile derive_profile(const PlanarEmbedding& e) {
    return derive_common(e, [&](const PlanarVoter& v) {
        return [&e, &v](int idx) { return dist_planar(e.norm, v.pos, e.candidates[idx].pos); };
    });
}

Profile derive_profile(const CircularEmbedding& e) {
    return derive_common(e, [&](const CircularVoter& v) {
        return [&e, &v](int idx) { return circular_key(e, v, idx); };
    });
}

namespace {

double round_digits(double v, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*g", digits, v);
    return std::strtod(buf, nullptr);
}

}  // namespace

std::vector<FloatPoint> to_float_points(const PlanarEmbedding& e, int digits) {
    std::vector<FloatPoint> out;
    for (const auto& c : e.candidates)
        out.push_back({"c" + std::to_string(c.id), round_digits(c.pos.x.convert_to<double>(), digits),
                       round_digits(c.pos.y.convert_to<double>(), digits), true, 1});
    for (const auto& v : e.voters)
        out.push_back({v.label, round_digits(v.pos.x.convert_to<double>(), digits),
                       round_digits(v.pos.y.convert_to<double>(), digits), false, v.multiplicity});
    return out;
}

std::vector<FloatPoint> to_float_points(const CircularEmbedding& e, int digits) {
    std::vector<FloatPoint> out;
    auto place = [&](const Rational& stored, bool antipode) {
        double a = stored.convert_to<double>();
        if (antipode) a += std::numbers::pi;
        return std::pair<double, double>{std::cos(a), std::sin(a)};
    };
    for (const auto& c : e.candidates) {
        auto [x, y] = place(c.angle, false);
        out.push_back({"c" + std::to_string(c.id), round_digits(x, digits), round_digits(y, digits),
                       true, 1});
    }
    for (const auto& v : e.voters) {
        auto [x, y] = place(v.angle, v.antipode);
        out.push_back({v.label, round_digits(x, digits), round_digits(y, digits), false,
                       v.multiplicity});
    }
    return out;
}

}  // namespace ek
