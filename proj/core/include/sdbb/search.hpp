#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "sdbb/distance.hpp"
#include "sdbb/tables.hpp"

namespace sdbb {

// Exact rational, used for kd^2/n so ranking never touches floating point.
struct Rational {
  long long num = 0;
  long long den = 1;

  static Rational reduced(long long num, long long den);
  double approx() const { return double(num) / double(den); }
  friend bool operator==(const Rational&, const Rational&) = default;
};
int compare(const Rational& a, const Rational& b);  // -1, 0, 1

struct Candidate {
  TwistedTorus torus;
  LaurentPoly f;
  std::string key;  // "n|alpha,beta,gamma|f", stable across runs
};

// One evaluated search result.
struct CodeRecord {
  Candidate candidate;
  long long n = 0, k = 0, d = 0;
  Rational metric;           // k*d^2/n
  long long locality = 0;    // squared stabilizer diameter, quarter-cell units
  DistanceResult distance;
  bool exactness_skipped = false;  // exact solve skipped: provably dominated
};

// Distance policy of the sweep: exact up to a size cutoff, randomized above.
// Parsed from strings like "exact:64,randomized" or "randomized".
struct DistancePolicy {
  long long exact_max_n = 64;       // -1 disables the exact stage
  std::uint64_t trials = 20000;     // randomized trials per candidate
  double exact_budget_seconds = 0;  // per exact solve; 0 = unlimited

  static DistancePolicy parse(const std::string& text);
  std::string to_string() const;
};

struct SearchConfig {
  long long n_min = 16;
  long long n_max = 16;
  long long min_k = 4;
  DistancePolicy distance;
  std::uint64_t seed = 1;
  std::string out_path;  // JSON-lines persistence; empty = none
  int jobs = 1;
  std::uint64_t prefilter_trials = 2000;  // upper-bound pass before exact solves
};

// All weight-8 self-dual candidates for one block length: every torus
// decomposition, and every unordered pair of fundamental-domain cells
// distinct from the images of 1 and x.
std::vector<Candidate> enumerate_candidates(long long n);

// Full evaluation of one candidate. Returns nullopt (SKIPPED) when k is
// below config.min_k.
std::optional<CodeRecord> evaluate_candidate(const Candidate& candidate,
                                             const SearchConfig& config);

// Squared diameter of one stabilizer's support in the planar embedding
// (cell (i,j) at (i,j), sublattice offset (1/2,1/2)), measured with the
// shortest periodic image and returned in quarter-cell^2 units.
long long locality_score(const LaurentPoly& f, const LaurentPoly& g,
                         const TwistedTorus& torus);

// Highest metric, then most local, then smallest printed polynomial, then
// smallest canonical torus. Throws std::invalid_argument on an empty set.
const CodeRecord& rank_and_select(const std::vector<CodeRecord>& records);

// Checks the maximal-k law for the reciprocal trinomial pair
// f = 1 + x^a y^b + x^c y^d, g = antipode(f): the Laurent quotient has
// dimension 2|delta| (delta = ad - bc), and the torus with basis
// (3a, 3b), (c+a, d+b) realizes k = 4|delta|.
struct TrinomialKmaxReport {
  long long delta = 0;
  long long k_max_predicted = 0;
  long long k_max_computed = 0;  // from the Laurent quotient dimension
  TwistedTorus torus_used;
  long long k_on_torus = 0;
  bool ok = false;
};
TrinomialKmaxReport verify_trinomial_kmax(long long a, long long b, long long c,
                                          long long d);

struct TableRowCheck {
  TableRow row;
  long long k_quotient = 0, k_rank = 0;
  bool k_ok = false;
  bool d_checked = false;
  long long d_value = 0;
  DistanceStatus d_status = DistanceStatus::UPPER_BOUND;
  DistanceMethod d_method = DistanceMethod::RANDOMIZED;
  bool d_ok = false;
  bool pass = false;
};

struct TableCheckOptions {
  std::vector<int> tables = {1, 2};
  long long max_n = 0;     // 0 = no cap
  bool check_distance = true;
  DistancePolicy policy;
  std::uint64_t seed = 0x7ab1e5ULL;
  double budget_seconds = 0;  // per exact row
};

// Recomputes k (both derivations) and d (per policy) for the published rows
// and diffs them field by field.
std::vector<TableRowCheck> reproduce_table(const TableCheckOptions& opts);

struct SearchResult {
  std::vector<CodeRecord> records;          // all evaluated, deterministic order
  std::vector<CodeRecord> winners;          // one per block length
  std::size_t candidates_seen = 0;
  std::size_t skipped_low_k = 0;
  std::size_t resumed = 0;                  // keys already present in out_path
};

// The sweep: deterministic winners for every even n in range, independent of
// config.jobs. With out_path set, records append to a JSON-lines file with a
// manifest; completed candidate keys are skipped on re-runs.
SearchResult run_search(const SearchConfig& config);

nlohmann::ordered_json record_to_json(const CodeRecord& record);
nlohmann::ordered_json distance_to_json(const DistanceResult& result);
CodeRecord record_from_json(const nlohmann::json& j);

}  // namespace sdbb
