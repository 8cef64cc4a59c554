#pragma once

#include <cstdint>
#include <optional>

#include "sdbb/codebuilder.hpp"

namespace sdbb {

enum class DistanceStatus { EXACT, UPPER_BOUND };
enum class DistanceMethod { BRUTE, ILP, RANDOMIZED };

struct DistanceStats {
  std::uint64_t nodes = 0;     // branch-and-bound nodes explored
  std::uint64_t trials = 0;    // randomized trials performed
  double elapsed = 0.0;        // seconds
  std::uint64_t seed = 0;
};

struct DistanceResult {
  long long d = 0;
  BitVec witness;              // minimum-weight logical representative found
  DistanceStatus status = DistanceStatus::EXACT;
  DistanceMethod method = DistanceMethod::ILP;
  char sector = 'Z';           // 'Z': witness in ker(h_x); 'X': in ker(h_z)
  long long lower_bound = 1;   // proven; equals d when status is EXACT
  DistanceStats stats;
};

// Exhaustive oracle: enumerates Z-type vectors of weight <= w_max inside
// ker(h_x) via subsets of a systematic kernel basis (a combination of r
// basis rows has weight >= r, which bounds the subset size) and returns a
// minimum-weight logically nontrivial vector, or nullopt if none exists at
// or below the cap.
std::optional<DistanceResult> distance_bruteforce(const CssCode& code,
                                                  const LogicalBasis& basis,
                                                  long long w_max);

struct ExactOptions {
  double budget_seconds = 0.0;   // 0 = unlimited
  std::uint64_t seed = 0x5db8b5ULL;  // seeds the internal upper-bound pass
  std::uint64_t seeding_trials = 2000;
};

// Exact minimum distance. Reference semantics are the 0-1 integer program
//   minimize sum_q v_q  s.t.  H v = 2 s,  l_i v = 2 t + 1,  v binary,
// minimized over the logical rows l_i; the parity constraints are handled
// natively by GF(2)-aware branch and bound (branch on bits, propagate
// assignments through the checks, prune with partial weight plus a
// disjoint-odd-row lower bound and the incumbent). Iterative deepening on
// the target weight yields a proven lower bound when the wall-clock budget
// expires, in which case the incumbent is returned as UPPER_BOUND.
// Translation invariance of the code pins one support qubit per sublattice.
DistanceResult distance_exact(const CssCode& code, const LogicalBasis& basis,
                              const ExactOptions& opts = {});

struct RandomizedOptions {
  long long stop_at_weight = 0;  // stop early once a representative this light is found
  std::uint64_t wave = 4096;     // trials per deterministic wave
};

// Information-set sampling: per trial, row-reduce the (stabilizer plus one
// logical) generator matrix under a random column order and record the
// lightest logically nontrivial row. Deterministic given the seed; trials
// derive independent streams from a counter-based generator.
DistanceResult distance_upper_randomized(const CssCode& code, const LogicalBasis& basis,
                                         std::uint64_t trials, std::uint64_t seed,
                                         const RandomizedOptions& opts = {});

// Validity of a claimed witness for its sector.
bool witness_is_valid(const CssCode& code, const LogicalBasis& basis,
                      const DistanceResult& result);

}  // namespace sdbb
