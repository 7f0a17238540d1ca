#pragma once

#include "ek/core.hpp"
#include "ek/rational.hpp"

#include <string>
#include <vector>

namespace ek {

enum class Norm { L1, L2, Linf };

std::string to_string(Norm n);

struct PlanarPoint {
    Rational x;
    Rational y;

    bool operator==(const PlanarPoint&) const = default;
};

struct PlanarCandidate {
    int id = 0;
    PlanarPoint pos;

    bool operator==(const PlanarCandidate&) const = default;
};

struct PlanarVoter {
    std::string label;
    PlanarPoint pos;
    long long multiplicity = 1;

    bool operator==(const PlanarVoter&) const = default;
};

// Positions in the plane under L1 or Linf; voters prefer nearer candidates.
struct PlanarEmbedding {
    Norm norm = Norm::L1;  // L1 or Linf only
    std::vector<PlanarCandidate> candidates;
    std::vector<PlanarVoter> voters;

    int n_candidates() const { return static_cast<int>(candidates.size()); }
    bool operator==(const PlanarEmbedding&) const = default;
};

struct CircularCandidate {
    int id = 0;
    Rational angle;  // radians, in [0, 3]

    bool operator==(const CircularCandidate&) const = default;
};

// An antipodal voter sits at (angle + pi); its stored angle stays in [0, 3]
// and its comparisons use the farther-is-preferred rule, which keeps all
// arithmetic rational (no pi).
struct CircularVoter {
    std::string label;
    Rational angle;  // stored angle, in [0, 3]
    bool antipode = false;
    long long multiplicity = 1;

    bool operator==(const CircularVoter&) const = default;
};

// Unit-circle L2 embedding. Chord length 2*sin(sep/2) is strictly increasing
// in angular separation on [0, pi], so preferences reduce to exact rational
// comparisons of angular separations.
struct CircularEmbedding {
    std::vector<CircularCandidate> candidates;
    std::vector<CircularVoter> voters;

    int n_candidates() const { return static_cast<int>(candidates.size()); }
    bool operator==(const CircularEmbedding&) const = default;
};

// Structural checks: ids dense 0..n-1, multiplicities >= 1, planar norm in
// {L1, Linf}, circular angles within [0, 3]. Throws InputError.
void validate_embedding(const PlanarEmbedding& e);
void validate_embedding(const CircularEmbedding& e);

Rational dist_l1(const PlanarPoint& p, const PlanarPoint& q);
Rational dist_linf(const PlanarPoint& p, const PlanarPoint& q);
Rational dist_planar(Norm norm, const PlanarPoint& p, const PlanarPoint& q);

enum class Pref { A, B, Tie };

// Exact chord comparison for points of one circle. For a non-antipodal voter
// the nearer candidate is the one with smaller |angle_v - theta|; for an
// antipodal voter the true separation is pi - |angle_v - theta|, so the
// farther stored angle wins. Throws InputError if any angle is outside [0,3].
Pref compare_l2_on_circle(const Rational& voter_angle, bool antipode, const Rational& cand_a,
                          const Rational& cand_b);

struct TieReport {
    std::string voter_label;
    int candidate_a = 0;
    int candidate_b = 0;

    bool operator==(const TieReport&) const = default;
};

// All (voter, candidate pair) equidistance violations; empty means the
// embedding yields a strict profile.
std::vector<TieReport> verify_embedding(const PlanarEmbedding& e);
std::vector<TieReport> verify_embedding(const CircularEmbedding& e);

// One profile entry per voter record, candidates sorted by strictly
// increasing distance. Throws TieError on any equidistance and
// EmptyProfileError if the embedding has no voters.
Profile derive_profile(const PlanarEmbedding& e);
Profile derive_profile(const CircularEmbedding& e);

struct FloatPoint {
    std::string label;
    double x = 0.0;
    double y = 0.0;
    bool is_candidate = false;
    long long multiplicity = 1;
};

// Approximate coordinates for rendering only (never used in preference
// derivation). Circular points are placed on the unit circle via cos/sin;
// values are rounded to `digits` significant digits.
std::vector<FloatPoint> to_float_points(const PlanarEmbedding& e, int digits = 12);
std::vector<FloatPoint> to_float_points(const CircularEmbedding& e, int digits = 12);

}  // namespace ek
