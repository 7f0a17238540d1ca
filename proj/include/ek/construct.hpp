#pragma once

#include "ek/core.hpp"
#include "ek/geometry.hpp"

namespace ek {

// Shared parameters of the square constructions. Node i carries exponent
// i+1, so candidate heights y_i = 2^(i+1) are distinct powers of two and
// every equidistance point lands at a distinct integer coordinate.
struct SquareParams {
    int n = 0;
    long long delta = 0;  // side length 2^(n+1), pre-scaling

    static SquareParams for_nodes(int n);
    long long node_pow(int i) const;  // 2^(i+1)
};

// Dyadic circle parameters: candidate angles Theta_i = 2^(i+1-n) in (0, 1],
// voter offset eps = 1/2^(n+1). All pairwise angle sums are distinct, so all
// midlines are distinct and separated by at least 2*eps.
struct CircleParams {
    int n = 0;
    Rational eps;

    static CircleParams for_nodes(int n);
    Rational theta(int i) const;  // 2^(i+1) / 2^n
};

// Compiles an even bipartite weighted tournament into an L1 square
// embedding: candidates on the vertical sides at height 2*y_i, each arc
// (i,j) into w/2 copies of a top-side voter f_ij and a bottom-side voter
// g_ij next to the equidistance points A_ij / B_ij. Coordinates are
// post-scaled by 2 so everything is an integer (eps = 1/2 becomes 1).
// Throws ParityError unless all weights are even, BipartitionError if a
// positive arc does not cross `b`.
PlanarEmbedding construct_l1(const WeightedTournament& t, const Bipartition& b);

// Same compilation onto the 45-degree-rotated square (diagonal 2*Delta):
// candidates at (-2^i, 2^i - Delta) on the left and (2^j, Delta - 2^j) on
// the right, voters next to A_ij / B_ij on the other two sides, shifted
// along the side toward the arc winner. Same preconditions as construct_l1.
PlanarEmbedding construct_linf(const WeightedTournament& t, const Bipartition& b);

// Compiles any same-parity weighted tournament into a unit-circle L2
// embedding. Even case: each arc (i,j) yields f_ij at the midline angle
// plus eps on the c_i side (antipode=false) and g_ij diametrically opposite
// (antipode=true), w/2 copies each. Odd case: one auxiliary voter at angle 0
// (ranking = increasing Theta, i.e. the identity) makes every residual
// margin even, then the even machinery realizes the residuals.
// Throws ParityError on mixed parity.
CircularEmbedding construct_l2(const WeightedTournament& t);

// Unrestricted McGarvey/Debord baseline: each arc (i,j) becomes w/2 copies
// of "i > j > rest ascending" and w/2 copies of "rest descending > i > j".
// Odd tournaments get one auxiliary identity voter plus even residuals.
// Used as an oracle against the geometric constructions.
Profile construct_mcgarvey(const WeightedTournament& t);

}  // namespace ek
