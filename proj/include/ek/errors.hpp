#pragma once

#include <stdexcept>
#include <string>

namespace ek {

// Invalid or malformed input data (bad permutation, dimension mismatch,
// unparseable file, angle outside the supported range, ...).
struct InputError : std::runtime_error {
    explicit InputError(const std::string& msg) : std::runtime_error(msg) {}
};

// Tournament weights do not all share the required parity.
struct ParityError : std::runtime_error {
    explicit ParityError(const std::string& msg) : std::runtime_error(msg) {}
};

// Tournament is not bipartite, or an arc does not cross the given partition.
struct BipartitionError : std::runtime_error {
    explicit BipartitionError(const std::string& msg) : std::runtime_error(msg) {}
};

// A voter is exactly equidistant from two candidates; strict profiles
// cannot be derived from such an embedding.
struct TieError : std::runtime_error {
    TieError(std::string voter, int cand_a, int cand_b)
        : std::runtime_error("tie: voter '" + voter + "' is equidistant from candidates " +
                             std::to_string(cand_a) + " and " + std::to_string(cand_b)),
          voter_label(std::move(voter)),
          candidate_a(cand_a),
          candidate_b(cand_b) {}
    std::string voter_label;
    int candidate_a;
    int candidate_b;
};

// Instance exceeds a solver size guard (factorial or subset-DP limits).
struct CapacityError : std::runtime_error {
    explicit CapacityError(const std::string& msg) : std::runtime_error(msg) {}
};

// An embedding with zero voters cannot yield a profile (profiles need V >= 1).
struct EmptyProfileError : std::runtime_error {
    explicit EmptyProfileError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace ek
