#include "sdbb/distance.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "sdbb/rng.hpp"

namespace sdbb {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

bool nontrivial(const BitVec& v, const BitMatrix& anticomm) {
  for (std::size_t j = 0; j < anticomm.rows(); ++j)
    if (BitVec::dot(v, anticomm.get_row(j))) return true;
  return false;
}

// ---------------------------------------------------------------------------
// Weight-capped existence search for one parity system.
//
// Rows are the stabilizer checks (kept redundant: extra rows only sharpen
// propagation and the lower bound) plus one anticommutation row with target
// parity 1. Binary branching on one column of the most-constrained odd row;
// assigned columns are substituted out of every check, rows left with zero
// or one free column propagate, and partial weight plus a disjoint-odd-row
// packing bound prunes against the cap.
// ---------------------------------------------------------------------------
class ExistenceSearch {
 public:
  ExistenceSearch(const BitMatrix& checks, const BitVec& parity_row)
      : n_(checks.cols()), words_((n_ + 63) / 64) {
    rows_ = checks.rows() + 1;
    row_mask_.assign(rows_ * words_, 0);
    for (std::size_t r = 0; r < checks.rows(); ++r)
      std::copy(checks.row(r), checks.row(r) + words_, &row_mask_[r * words_]);
    std::copy(parity_row.words().begin(), parity_row.words().end(),
              &row_mask_[(rows_ - 1) * words_]);
    target_.assign(rows_, 0);
    target_[rows_ - 1] = 1;

    col_rows_offset_.assign(n_ + 1, 0);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < n_; ++c)
        if (bit(r, c)) ++col_rows_offset_[c + 1];
    for (std::size_t c = 0; c < n_; ++c) col_rows_offset_[c + 1] += col_rows_offset_[c];
    col_rows_.resize(col_rows_offset_[n_]);
    std::vector<std::size_t> cursor(col_rows_offset_.begin(), col_rows_offset_.end() - 1);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < n_; ++c)
        if (bit(r, c)) col_rows_[cursor[c]++] = std::uint32_t(r);

    // Branch order: most-constrained column first (highest check degree),
    // ties by index.
    col_order_key_.resize(n_);
    for (std::size_t c = 0; c < n_; ++c) {
      std::size_t deg = col_rows_offset_[c + 1] - col_rows_offset_[c];
      col_order_key_[c] = (std::uint64_t(0xffffffffu - std::uint32_t(deg)) << 32) | c;
    }
  }

  // Searches for v with every check row even, the parity row odd,
  // v[forced_col] = 1 and wt(v) <= cap.
  std::optional<BitVec> run(std::size_t forced_col, long long cap,
                            std::uint64_t* node_counter, Clock::time_point deadline,
                            bool has_deadline, bool* timed_out) {
    nodes_ = node_counter;
    deadline_ = deadline;
    has_deadline_ = has_deadline;
    timed_out_ = false;
    cap_ = cap;
    weight_ = 0;

    free_mask_.assign(words_, ~std::uint64_t(0));
    if (n_ % 64) free_mask_[words_ - 1] = (std::uint64_t(1) << (n_ % 64)) - 1;
    ones_.assign(words_, 0);
    parity_.assign(target_.begin(), target_.end());
    free_cnt_.assign(rows_, 0);
    for (std::size_t r = 0; r < rows_; ++r) {
      std::size_t cnt = 0;
      for (std::size_t w = 0; w < words_; ++w)
        cnt += std::popcount(row_mask_[r * words_ + w]);
      free_cnt_[r] = int(cnt);
    }
    trail_.clear();

    std::optional<BitVec> found;
    if (assign(forced_col, 1) && propagate()) found = dfs();
    undo_to(0);
    *timed_out = timed_out_;
    return found;
  }

 private:
  bool bit(std::size_t r, std::size_t c) const {
    return (row_mask_[r * words_ + (c >> 6)] >> (c & 63)) & 1;
  }
  bool is_free(std::size_t c) const { return (free_mask_[c >> 6] >> (c & 63)) & 1; }

  bool assign(std::size_t c, int v) {
    free_mask_[c >> 6] &= ~(std::uint64_t(1) << (c & 63));
    if (v) {
      ones_[c >> 6] |= std::uint64_t(1) << (c & 63);
      ++weight_;
    }
    for (std::size_t idx = col_rows_offset_[c]; idx < col_rows_offset_[c + 1]; ++idx) {
      std::uint32_t r = col_rows_[idx];
      --free_cnt_[r];
      if (v) parity_[r] ^= 1;
    }
    trail_.push_back({std::uint32_t(c), std::uint8_t(v)});
    return !v || weight_ <= cap_;
  }

  void undo_to(std::size_t mark) {
    while (trail_.size() > mark) {
      auto [c, v] = trail_.back();
      trail_.pop_back();
      free_mask_[c >> 6] |= std::uint64_t(1) << (c & 63);
      if (v) {
        ones_[c >> 6] &= ~(std::uint64_t(1) << (c & 63));
        --weight_;
      }
      for (std::size_t idx = col_rows_offset_[c]; idx < col_rows_offset_[c + 1]; ++idx) {
        std::uint32_t r = col_rows_[idx];
        ++free_cnt_[r];
        if (v) parity_[r] ^= 1;
      }
    }
  }

  // Substitutes forced values: an even row with no free column is fine, an
  // odd one is a contradiction; a row with a single free column fixes it.
  bool propagate() {
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t r = 0; r < rows_; ++r) {
        if (free_cnt_[r] == 0) {
          if (parity_[r]) return false;
        } else if (free_cnt_[r] == 1) {
          if (!assign(single_free_col(r), parity_[r])) return false;
          changed = true;
        }
      }
    }
    return true;
  }

  std::size_t single_free_col(std::size_t r) const {
    for (std::size_t w = 0; w < words_; ++w) {
      std::uint64_t m = row_mask_[r * words_ + w] & free_mask_[w];
      if (m) return w * 64 + std::size_t(std::countr_zero(m));
    }
    throw std::logic_error("single_free_col: row has no free column");
  }

  // Odd rows with pairwise disjoint free supports each need a distinct new
  // support bit; admissible lower bound on the remaining weight.
  long long packing_bound() {
    scratch_rows_.clear();
    for (std::size_t r = 0; r < rows_; ++r)
      if (parity_[r] && free_cnt_[r] > 0) scratch_rows_.push_back(std::uint32_t(r));
    std::sort(scratch_rows_.begin(), scratch_rows_.end(),
              [&](std::uint32_t a, std::uint32_t b) {
                if (free_cnt_[a] != free_cnt_[b]) return free_cnt_[a] < free_cnt_[b];
                return a < b;
              });
    scratch_mask_.assign(words_, 0);
    long long packed = 0;
    for (std::uint32_t r : scratch_rows_) {
      bool disjoint = true;
      for (std::size_t w = 0; w < words_ && disjoint; ++w)
        if (row_mask_[r * words_ + w] & free_mask_[w] & scratch_mask_[w]) disjoint = false;
      if (!disjoint) continue;
      for (std::size_t w = 0; w < words_; ++w)
        scratch_mask_[w] |= row_mask_[r * words_ + w] & free_mask_[w];
      ++packed;
    }
    return packed;
  }

  std::optional<BitVec> dfs() {
    if (++*nodes_ % 4096 == 0 && has_deadline_ && Clock::now() > deadline_) {
      timed_out_ = true;
      return std::nullopt;
    }

    std::size_t best = rows_;
    int best_cnt = std::numeric_limits<int>::max();
    for (std::size_t r = 0; r < rows_; ++r) {
      if (!parity_[r]) continue;
      if (free_cnt_[r] < best_cnt) {
        best_cnt = free_cnt_[r];
        best = r;
      }
    }
    if (best == rows_) {
      // Every check already even: zeros complete the assignment.
      BitVec v(n_);
      std::copy(ones_.begin(), ones_.end(), v.words().begin());
      return v;
    }
    if (weight_ + packing_bound() > cap_) return std::nullopt;

    // Most-constrained free column of the chosen row.
    std::size_t pick = n_;
    std::uint64_t pick_key = ~std::uint64_t(0);
    for (std::size_t w = 0; w < words_; ++w) {
      std::uint64_t m = row_mask_[best * words_ + w] & free_mask_[w];
      while (m) {
        std::size_t c = w * 64 + std::size_t(std::countr_zero(m));
        m &= m - 1;
        if (col_order_key_[c] < pick_key) {
          pick_key = col_order_key_[c];
          pick = c;
        }
      }
    }
    if (pick == n_) return std::nullopt;  // odd row with no free column

    for (int v : {1, 0}) {
      std::size_t mark = trail_.size();
      if (assign(pick, v) && propagate()) {
        std::optional<BitVec> got = dfs();
        if (got || timed_out_) return got;
      }
      undo_to(mark);
    }
    return std::nullopt;
  }

  std::size_t n_, words_, rows_ = 0;
  std::vector<std::uint64_t> row_mask_;
  std::vector<std::uint8_t> target_;
  std::vector<std::size_t> col_rows_offset_;
  std::vector<std::uint32_t> col_rows_;
  std::vector<std::uint64_t> col_order_key_;

  std::vector<std::uint64_t> free_mask_, ones_, scratch_mask_;
  std::vector<int> free_cnt_;
  std::vector<std::uint8_t> parity_;
  std::vector<std::pair<std::uint32_t, std::uint8_t>> trail_;
  std::vector<std::uint32_t> scratch_rows_;
  long long weight_ = 0, cap_ = 0;
  std::uint64_t* nodes_ = nullptr;
  Clock::time_point deadline_{};
  bool has_deadline_ = false;
  bool timed_out_ = false;
};

// One CSS sector: witnesses live in ker(checks), are spanned by span_rows
// plus coset_logicals, and are nontrivial iff they anticommute with some
// anticomm row.
struct Sector {
  const BitMatrix* checks;
  const BitMatrix* span_rows;
  const BitMatrix* coset_logicals;
  const BitMatrix* anticomm;
  char name;
};

struct RandomizedOutcome {
  long long best = -1;
  BitVec witness;
  std::uint64_t trials_done = 0;
};

// Information-set sampling over one sector. Deterministic given the seed:
// trial t draws its permutation from an independent counter-based stream,
// and the running best is ordered by (weight, trial, row).
RandomizedOutcome randomized_pass(const Sector& sector, std::uint64_t trials,
                                  std::uint64_t seed, long long stop_at,
                                  std::uint64_t wave) {
  const BitMatrix& stab = *sector.span_rows;
  const BitMatrix& coset = *sector.coset_logicals;
  std::size_t n = stab.cols();
  std::size_t k = coset.rows();
  RandomizedOutcome out;

  std::vector<std::size_t> perm(n);
  BitMatrix work(stab.rows() + 1, n);
  std::vector<bool> used(work.rows(), false);
  for (std::uint64_t t = 0; t < trials; ++t) {
    SplitMix64 rng(mix_seed(seed, t));
    std::iota(perm.begin(), perm.end(), std::size_t(0));
    for (std::size_t i = n - 1; i > 0; --i)
      std::swap(perm[i], perm[rng.below(i + 1)]);

    for (std::size_t r = 0; r < stab.rows(); ++r) work.set_row(r, stab.get_row(r));
    work.set_row(stab.rows(), coset.get_row(t % k));
    std::fill(used.begin(), used.end(), false);

    std::size_t nrows = work.rows();
    for (std::size_t pi = 0; pi < n; ++pi) {
      std::size_t c = perm[pi];
      std::size_t pivot = nrows;
      for (std::size_t r = 0; r < nrows; ++r)
        if (!used[r] && work.get(r, c)) {
          pivot = r;
          break;
        }
      if (pivot == nrows) continue;
      used[pivot] = true;
      for (std::size_t r = 0; r < nrows; ++r)
        if (r != pivot && work.get(r, c)) work.xor_row_into(pivot, r);
    }

    for (std::size_t r = 0; r < nrows; ++r) {
      BitVec row = work.get_row(r);
      if (row.is_zero()) continue;
      long long w = (long long)row.weight();
      if (out.best >= 0 && w >= out.best) continue;
      if (!nontrivial(row, *sector.anticomm)) continue;
      out.best = w;
      out.witness = row;
    }
    out.trials_done = t + 1;
    if (stop_at > 0 && out.best > 0 && out.best <= stop_at &&
        ((t + 1) % std::max<std::uint64_t>(wave, 1) == 0 || t + 1 == trials))
      break;
  }
  return out;
}

struct SectorExactResult {
  long long d = -1;     // -1 when nothing is known
  long long lower = 1;  // weights strictly below `lower` are excluded
  bool exact = false;
  BitVec witness;
};

// Iterative deepening on the target weight. Each weight test pins one
// support qubit per sublattice (translations act transitively on cells, so
// some translate of a minimum-weight vector touches cell (0,0)) and one
// anticommuting logical row.
SectorExactResult exact_sector(const CssCode& code, const Sector& sector,
                               std::uint64_t seed, std::uint64_t seeding_trials,
                               Clock::time_point deadline, bool has_deadline,
                               std::uint64_t* nodes, std::uint64_t* trials) {
  SectorExactResult out;

  RandomizedOutcome ub = randomized_pass(sector, seeding_trials, seed, 0, 4096);
  *trials += ub.trials_done;
  long long incumbent = ub.best;
  BitVec incumbent_vec = ub.witness;

  // Anticommutation rows as canonical coset representatives; subtracting
  // check rows does not change the constraint on ker(checks).
  BitMatrix red = *sector.checks;
  std::vector<std::size_t> pivots = red.rref();
  std::vector<BitVec> parity_rows;
  for (std::size_t i = 0; i < sector.anticomm->rows(); ++i)
    parity_rows.push_back(reduce_against_rref(red, pivots, sector.anticomm->get_row(i)));

  std::vector<ExistenceSearch> searches;
  searches.reserve(parity_rows.size());
  for (const BitVec& row : parity_rows) searches.emplace_back(*sector.checks, row);

  long long cells = code.torus.cells();
  for (long long w = 1;; ++w) {
    if (incumbent > 0 && w >= incumbent) {
      out.d = incumbent;
      out.witness = incumbent_vec;
      out.exact = true;
      out.lower = incumbent;
      return out;
    }
    for (int s = 0; s < 2; ++s) {
      for (ExistenceSearch& search : searches) {
        bool timed_out = false;
        std::optional<BitVec> got =
            search.run(std::size_t(s) * std::size_t(cells), w, nodes, deadline,
                       has_deadline, &timed_out);
        if (timed_out) {
          out.d = incumbent;
          out.witness = incumbent_vec;
          out.exact = false;
          out.lower = w;
          return out;
        }
        if (got) {
          out.d = w;
          out.witness = *got;
          out.exact = true;
          out.lower = w;
          return out;
        }
      }
    }
  }
}

}  // namespace

std::optional<DistanceResult> distance_bruteforce(const CssCode& code,
                                                  const LogicalBasis& basis,
                                                  long long w_max) {
  if (basis.k < 1) throw std::invalid_argument("distance_bruteforce: k = 0");
  if (w_max < 1) throw std::invalid_argument("distance_bruteforce: w_max < 1");
  Clock::time_point t0 = Clock::now();

  BitMatrix ker = code.h_x.kernel();
  std::size_t dim = ker.rows();
  std::size_t n = std::size_t(code.n);

  long long best = -1;
  BitVec best_vec;
  std::uint64_t nodes = 0;

  BitVec acc(n);
  // Depth-first over subsets of the systematic kernel basis; a combination
  // of r basis rows has weight >= r, which caps the subset size.
  auto rec = [&](auto&& self, std::size_t start, long long used) -> void {
    long long cap = best < 0 ? w_max : std::min<long long>(w_max, best - 1);
    if (used >= cap) return;
    for (std::size_t i = start; i < dim; ++i) {
      acc ^= ker.get_row(i);
      ++nodes;
      long long w = (long long)acc.weight();
      if (w <= w_max && (best < 0 || w < best) && nontrivial(acc, basis.l_x)) {
        best = w;
        best_vec = acc;
      }
      self(self, i + 1, used + 1);
      acc ^= ker.get_row(i);
    }
  };
  rec(rec, 0, 0);

  if (best < 0) return std::nullopt;
  DistanceResult res;
  res.d = best;
  res.witness = best_vec;
  res.status = DistanceStatus::EXACT;
  res.method = DistanceMethod::BRUTE;
  res.sector = 'Z';
  res.lower_bound = best;
  res.stats.nodes = nodes;
  res.stats.elapsed = seconds_since(t0);
  if (!witness_is_valid(code, basis, res))
    throw std::logic_error("distance_bruteforce: invalid witness");
  return res;
}

DistanceResult distance_exact(const CssCode& code, const LogicalBasis& basis,
                              const ExactOptions& opts) {
  if (basis.k < 1) throw std::invalid_argument("distance_exact: k = 0");
  Clock::time_point t0 = Clock::now();
  bool has_deadline = opts.budget_seconds > 0;
  Clock::time_point deadline =
      t0 + std::chrono::duration_cast<Clock::duration>(
               std::chrono::duration<double>(has_deadline ? opts.budget_seconds : 1.0));

  std::uint64_t nodes = 0, trials = 0;

  Sector zsec{&code.h_x, &code.h_z, &basis.l_z, &basis.l_x, 'Z'};
  SectorExactResult z = exact_sector(code, zsec, mix_seed(opts.seed, 0),
                                     opts.seeding_trials, deadline, has_deadline,
                                     &nodes, &trials);

  DistanceResult res;
  res.method = DistanceMethod::ILP;
  res.stats.seed = opts.seed;

  if (code.self_dual()) {
    res.d = z.d;
    res.witness = z.witness;
    res.sector = 'Z';
    res.status = z.exact ? DistanceStatus::EXACT : DistanceStatus::UPPER_BOUND;
    res.lower_bound = z.exact ? z.d : z.lower;
  } else {
    Sector xsec{&code.h_z, &code.h_x, &basis.l_x, &basis.l_z, 'X'};
    SectorExactResult x = exact_sector(code, xsec, mix_seed(opts.seed, 1),
                                       opts.seeding_trials, deadline, has_deadline,
                                       &nodes, &trials);
    bool z_first = x.d < 0 || (z.d >= 0 && z.d <= x.d);
    const SectorExactResult& lead = z_first ? z : x;
    const SectorExactResult& other = z_first ? x : z;
    res.d = lead.d;
    res.witness = lead.witness;
    res.sector = z_first ? 'Z' : 'X';
    bool exact = lead.exact && (other.exact || (lead.d >= 0 && lead.d <= other.lower));
    res.status = exact ? DistanceStatus::EXACT : DistanceStatus::UPPER_BOUND;
    res.lower_bound = exact ? res.d
                            : std::min(z.exact ? z.d : z.lower,
                                       x.exact ? x.d : x.lower);
  }

  res.stats.nodes = nodes;
  res.stats.trials = trials;
  res.stats.elapsed = seconds_since(t0);
  if (res.d < 0)
    throw std::runtime_error("distance_exact: budget too small to certify any bound");
  if (!witness_is_valid(code, basis, res))
    throw std::logic_error("distance_exact: invalid witness");
  return res;
}

DistanceResult distance_upper_randomized(const CssCode& code, const LogicalBasis& basis,
                                         std::uint64_t trials, std::uint64_t seed,
                                         const RandomizedOptions& opts) {
  if (basis.k < 1) throw std::invalid_argument("distance_upper_randomized: k = 0");
  if (trials < 1) throw std::invalid_argument("distance_upper_randomized: trials = 0");
  Clock::time_point t0 = Clock::now();

  Sector zsec{&code.h_x, &code.h_z, &basis.l_z, &basis.l_x, 'Z'};
  RandomizedOutcome out = randomized_pass(zsec, trials, seed, opts.stop_at_weight,
                                          opts.wave);
  if (out.best < 0)
    throw std::runtime_error("distance_upper_randomized: no nontrivial vector found");

  DistanceResult res;
  res.d = out.best;
  res.witness = out.witness;
  res.status = DistanceStatus::UPPER_BOUND;
  res.method = DistanceMethod::RANDOMIZED;
  res.sector = 'Z';
  res.lower_bound = 1;
  res.stats.trials = out.trials_done;
  res.stats.seed = seed;
  res.stats.elapsed = seconds_since(t0);
  if (!witness_is_valid(code, basis, res))
    throw std::logic_error("distance_upper_randomized: invalid witness");
  return res;
}

bool witness_is_valid(const CssCode& code, const LogicalBasis& basis,
                      const DistanceResult& result) {
  const BitMatrix& checks = result.sector == 'Z' ? code.h_x : code.h_z;
  const BitMatrix& anticomm = result.sector == 'Z' ? basis.l_x : basis.l_z;
  if ((long long)result.witness.weight() != result.d) return false;
  for (std::size_t r = 0; r < checks.rows(); ++r)
    if (BitVec::dot(result.witness, checks.get_row(r))) return false;
  return nontrivial(result.witness, anticomm);
}

}  // namespace sdbb
