#include "sdbb/search.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <fstream>
#include <functional>
#include <limits>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "sdbb/groebner.hpp"
#include "sdbb/rng.hpp"

namespace sdbb {

namespace {

constexpr const char* kCodeVersion = "0.1.0";

void parallel_for(std::size_t count, int jobs, const std::function<void(std::size_t)>& fn) {
  if (jobs <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&]() {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= count) return;
      try {
        fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  for (int t = 0; t < jobs - 1; ++t) pool.emplace_back(worker);
  worker();
  for (std::thread& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

std::string candidate_key(long long n, const TwistedTorus& t, const LaurentPoly& f) {
  std::ostringstream os;
  os << n << "|" << t.alpha << "," << t.beta << "," << t.gamma << "|" << f.to_string();
  return os.str();
}

std::uint64_t candidate_seed(std::uint64_t master, const std::string& key) {
  return mix_seed(master, fnv1a(key.data(), key.size()));
}

}  // namespace

Rational Rational::reduced(long long num, long long den) {
  if (den == 0) throw std::invalid_argument("Rational: zero denominator");
  long long g = std::gcd(num, den);
  if (g == 0) g = 1;
  return Rational{num / g, den / g};
}

int compare(const Rational& a, const Rational& b) {
  __int128 lhs = __int128(a.num) * b.den;
  __int128 rhs = __int128(b.num) * a.den;
  if (lhs < rhs) return -1;
  if (lhs > rhs) return 1;
  return 0;
}

std::vector<Candidate> enumerate_candidates(long long n) {
  std::vector<Candidate> out;
  for (const TwistedTorus& torus : enumerate_decompositions(n)) {
    Cell one = reduce_monomial(Monomial{0, 0}, torus);
    Cell xc = reduce_monomial(Monomial{1, 0}, torus);
    if (one == xc) continue;  // x is identified with 1: no weight-8 pattern fits

    std::vector<Cell> cells;
    for (long long i = 0; i < torus.beta; ++i)
      for (long long j = 0; j < torus.alpha; ++j) {
        Cell c{i, j};
        if (c == one || c == xc) continue;
        cells.push_back(c);
      }
    for (std::size_t p = 0; p < cells.size(); ++p) {
      for (std::size_t q = p + 1; q < cells.size(); ++q) {
        LaurentPoly f({Monomial{0, 0}, Monomial{1, 0},
                       Monomial{int(cells[p].i), int(cells[p].j)},
                       Monomial{int(cells[q].i), int(cells[q].j)}});
        Candidate cand{torus, f, candidate_key(n, torus, f)};
        out.push_back(std::move(cand));
      }
    }
  }
  return out;
}

long long locality_score(const LaurentPoly& f, const LaurentPoly& g,
                         const TwistedTorus& torus) {
  // Doubled coordinates keep everything integral: qubit (cell (i,j),
  // sublattice s) sits at (2i+s, 2j+s), lattice vectors are doubled too, and
  // squared lengths come out in quarter-cell^2 units.
  struct Pt {
    long long x, y;
  };
  std::vector<Pt> pts;
  for (const Monomial& m : f.terms()) {
    Cell c = reduce_monomial(m, torus);
    pts.push_back(Pt{2 * c.i, 2 * c.j});
  }
  for (const Monomial& m : g.terms()) {
    Cell c = reduce_monomial(m, torus);
    pts.push_back(Pt{2 * c.i + 1, 2 * c.j + 1});
  }

  long long a1x = 0, a1y = 2 * torus.alpha;
  long long a2x = 2 * torus.beta, a2y = 2 * torus.gamma;
  auto image_min = [&](long long dx, long long dy) {
    // Pre-reduce toward the origin, then scan a window of images.
    long long k2 = std::llround(double(dx) / double(a2x));
    dx -= k2 * a2x;
    dy -= k2 * a2y;
    long long k1 = std::llround(double(dy) / double(a1y));
    dy -= k1 * a1y;
    long long best = -1;
    for (long long i = -2; i <= 2; ++i) {
      for (long long j = -2; j <= 2; ++j) {
        long long ex = dx + j * a2x;
        long long ey = dy + i * a1y + j * a2y;
        long long d2 = ex * ex + ey * ey;
        if (best < 0 || d2 < best) best = d2;
      }
    }
    return best;
  };

  long long score = 0;
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j)
      score = std::max(score, image_min(pts[i].x - pts[j].x, pts[i].y - pts[j].y));
  return score;
}

namespace {

DistanceResult distance_per_policy(const CssCode& code, const LogicalBasis& basis,
                                   const DistancePolicy& policy, std::uint64_t seed,
                                   long long stop_at) {
  if (policy.exact_max_n >= 0 && code.n <= policy.exact_max_n) {
    ExactOptions opts;
    opts.budget_seconds = policy.exact_budget_seconds;
    opts.seed = seed;
    return distance_exact(code, basis, opts);
  }
  RandomizedOptions opts;
  opts.stop_at_weight = stop_at;
  return distance_upper_randomized(code, basis, policy.trials, seed, opts);
}

}  // namespace

std::optional<CodeRecord> evaluate_candidate(const Candidate& candidate,
                                             const SearchConfig& config) {
  const LaurentPoly g = antipode(candidate.f);
  long long k = compute_k_quotient(candidate.f, g, candidate.torus);
  if (k < config.min_k) return std::nullopt;

  CssCode code = build_code(candidate.f, candidate.torus);
  if (!doubly_even_check(code).condition_holds)
    throw std::logic_error("evaluate_candidate: emitted record is not doubly even");
  LogicalBasis basis = logical_basis(code);
  DistanceResult dist = distance_per_policy(code, basis, config.distance,
                                            candidate_seed(config.seed, candidate.key), 0);

  CodeRecord rec;
  rec.candidate = candidate;
  rec.n = code.n;
  rec.k = k;
  rec.d = dist.d;
  rec.metric = Rational::reduced(k * dist.d * dist.d, code.n);
  rec.locality = locality_score(candidate.f, g, candidate.torus);
  rec.distance = dist;
  return rec;
}

const CodeRecord& rank_and_select(const std::vector<CodeRecord>& records) {
  if (records.empty()) throw std::invalid_argument("rank_and_select: empty record set");
  auto better = [](const CodeRecord& a, const CodeRecord& b) {
    int c = compare(a.metric, b.metric);
    if (c != 0) return c > 0;
    if (a.locality != b.locality) return a.locality < b.locality;
    std::string fa = a.candidate.f.to_string(), fb = b.candidate.f.to_string();
    if (fa != fb) return fa < fb;
    auto ta = std::make_tuple(a.candidate.torus.alpha, a.candidate.torus.beta,
                              a.candidate.torus.gamma);
    auto tb = std::make_tuple(b.candidate.torus.alpha, b.candidate.torus.beta,
                              b.candidate.torus.gamma);
    return ta < tb;
  };
  const CodeRecord* best = &records.front();
  for (const CodeRecord& r : records)
    if (better(r, *best)) best = &r;
  return *best;
}

TrinomialKmaxReport verify_trinomial_kmax(long long a, long long b, long long c,
                                          long long d) {
  TrinomialKmaxReport rep;
  rep.delta = a * d - b * c;
  if (rep.delta == 0)
    throw std::invalid_argument("verify_trinomial_kmax: delta = 0 is not zero-dimensional");
  rep.k_max_predicted = 4 * std::llabs(rep.delta);

  LaurentPoly f({Monomial{0, 0}, Monomial{int(a), int(b)}, Monomial{int(c), int(d)}});
  std::optional<std::size_t> dim = laurent_quotient_dim(f, antipode(f));
  rep.k_max_computed = dim ? 2 * (long long)*dim : -1;

  rep.torus_used = canonicalize_torus(Vec2{3 * a, 3 * b}, Vec2{c + a, d + b});
  rep.k_on_torus = compute_k_quotient(f, antipode(f), rep.torus_used);
  rep.ok = rep.k_max_computed == rep.k_max_predicted &&
           rep.k_on_torus == rep.k_max_predicted;
  return rep;
}

std::vector<TableRowCheck> reproduce_table(const TableCheckOptions& opts) {
  std::vector<TableRowCheck> out;
  for (const TableRow& row : benchmark_rows()) {
    if (std::find(opts.tables.begin(), opts.tables.end(), row.table) == opts.tables.end())
      continue;
    if (opts.max_n > 0 && row.n > opts.max_n) continue;

    TableRowCheck chk;
    chk.row = row;
    LaurentPoly f = parse_poly(row.f);
    TwistedTorus torus = canonicalize_torus(Vec2{row.a1x, row.a1y}, Vec2{row.a2x, row.a2y});
    LaurentPoly g = antipode(f);

    chk.k_quotient = compute_k_quotient(f, g, torus);
    CssCode code = build_code(f, torus);
    chk.k_rank = compute_k_rank(code);
    chk.k_ok = chk.k_quotient == row.k && chk.k_rank == row.k && code.n == row.n;

    if (opts.check_distance) {
      LogicalBasis basis = logical_basis(code);
      DistancePolicy policy = opts.policy;
      policy.exact_budget_seconds = opts.budget_seconds;
      DistanceResult dist = distance_per_policy(
          code, basis, policy, mix_seed(opts.seed, std::uint64_t(row.n)), row.d);
      chk.d_checked = true;
      chk.d_value = dist.d;
      chk.d_status = dist.status;
      chk.d_method = dist.method;
      chk.d_ok = dist.d == row.d;
      chk.pass = chk.k_ok && chk.d_ok;
    } else {
      chk.pass = chk.k_ok;
    }
    out.push_back(chk);
  }
  return out;
}

namespace {

nlohmann::ordered_json torus_to_json(const TwistedTorus& t) {
  return nlohmann::ordered_json{
      {"a1", {t.a1.x, t.a1.y}}, {"a2", {t.a2.x, t.a2.y}},
      {"alpha", t.alpha},       {"beta", t.beta},
      {"gamma", t.gamma},
  };
}

TwistedTorus torus_from_json(const nlohmann::json& j) {
  return canonicalize_torus(Vec2{j["a1"][0], j["a1"][1]}, Vec2{j["a2"][0], j["a2"][1]});
}

const char* status_name(DistanceStatus s) {
  return s == DistanceStatus::EXACT ? "EXACT" : "UPPER_BOUND";
}
const char* method_name(DistanceMethod m) {
  switch (m) {
    case DistanceMethod::BRUTE: return "BRUTE";
    case DistanceMethod::ILP: return "ILP";
    case DistanceMethod::RANDOMIZED: return "RANDOMIZED";
  }
  return "?";
}

}  // namespace

nlohmann::ordered_json distance_to_json(const DistanceResult& r) {
  return nlohmann::ordered_json{
      {"d", r.d},
      {"witness", r.witness.to_hex()},
      {"status", status_name(r.status)},
      {"method", method_name(r.method)},
      {"sector", std::string(1, r.sector)},
      {"lower_bound", r.lower_bound},
      {"stats",
       {{"nodes", r.stats.nodes},
        {"trials", r.stats.trials},
        {"elapsed", r.stats.elapsed},
        {"seed", r.stats.seed}}},
  };
}

nlohmann::ordered_json record_to_json(const CodeRecord& rec) {
  return nlohmann::ordered_json{
      {"key", rec.candidate.key},
      {"f", rec.candidate.f.to_string()},
      {"torus", torus_to_json(rec.candidate.torus)},
      {"n", rec.n},
      {"k", rec.k},
      {"d", rec.d},
      {"metric", {{"num", rec.metric.num}, {"den", rec.metric.den}}},
      {"locality", rec.locality},
      {"exactness_skipped", rec.exactness_skipped},
      {"distance", distance_to_json(rec.distance)},
  };
}

CodeRecord record_from_json(const nlohmann::json& j) {
  CodeRecord rec;
  rec.candidate.torus = torus_from_json(j["torus"]);
  rec.candidate.f = parse_poly(j["f"].get<std::string>());
  rec.candidate.key = j["key"].get<std::string>();
  rec.n = j["n"];
  rec.k = j["k"];
  rec.d = j["d"];
  rec.metric = Rational{j["metric"]["num"], j["metric"]["den"]};
  rec.locality = j["locality"];
  rec.exactness_skipped = j["exactness_skipped"];
  const nlohmann::json& dj = j["distance"];
  rec.distance.d = dj["d"];
  rec.distance.witness = BitVec::from_hex(dj["witness"].get<std::string>(),
                                          std::size_t(rec.n));
  rec.distance.status = dj["status"] == "EXACT" ? DistanceStatus::EXACT
                                                : DistanceStatus::UPPER_BOUND;
  std::string m = dj["method"];
  rec.distance.method = m == "BRUTE"      ? DistanceMethod::BRUTE
                        : m == "ILP"      ? DistanceMethod::ILP
                                          : DistanceMethod::RANDOMIZED;
  rec.distance.sector = dj["sector"].get<std::string>()[0];
  rec.distance.lower_bound = dj["lower_bound"];
  rec.distance.stats.nodes = dj["stats"]["nodes"];
  rec.distance.stats.trials = dj["stats"]["trials"];
  rec.distance.stats.elapsed = dj["stats"]["elapsed"];
  rec.distance.stats.seed = dj["stats"]["seed"];
  return rec;
}

DistancePolicy DistancePolicy::parse(const std::string& text) {
  DistancePolicy policy;
  policy.exact_max_n = -1;
  bool has_randomized = false;
  std::stringstream ss(text);
  std::string entry;
  while (std::getline(ss, entry, ',')) {
    if (entry.empty()) continue;
    std::size_t colon = entry.find(':');
    std::string name = entry.substr(0, colon);
    if (name == "exact") {
      policy.exact_max_n = colon == std::string::npos
                               ? std::numeric_limits<long long>::max()
                               : std::stoll(entry.substr(colon + 1));
    } else if (name == "randomized") {
      has_randomized = true;
      if (colon != std::string::npos) policy.trials = std::stoull(entry.substr(colon + 1));
    } else {
      throw std::invalid_argument("unknown distance policy entry: " + entry);
    }
  }
  if (policy.exact_max_n < 0 && !has_randomized)
    throw std::invalid_argument("distance policy selects no method: " + text);
  return policy;
}

std::string DistancePolicy::to_string() const {
  std::ostringstream os;
  if (exact_max_n >= 0) {
    os << "exact";
    if (exact_max_n != std::numeric_limits<long long>::max()) os << ":" << exact_max_n;
    os << ",";
  }
  os << "randomized:" << trials;
  return os.str();
}

namespace {

std::uint64_t config_hash(const SearchConfig& c) {
  std::ostringstream os;
  os << c.n_min << "|" << c.n_max << "|" << c.min_k << "|" << c.distance.to_string()
     << "|" << c.seed << "|" << kCodeVersion;
  std::string s = os.str();
  return fnv1a(s.data(), s.size());
}

// Evaluated-but-not-yet-exact candidate state inside the sweep.
struct Pending {
  Candidate candidate;
  long long k = 0;
  CssCode code;
  LogicalBasis basis;
  DistanceResult upper;      // randomized bound
  bool done = false;         // exact solve finished or inherited
  DistanceResult final_dist;
};

}  // namespace

SearchResult run_search(const SearchConfig& config) {
  SearchResult result;

  // Resumable persistence: previously completed keys are skipped.
  std::vector<CodeRecord> resumed_records;
  std::ofstream out_stream;
  if (!config.out_path.empty()) {
    std::string manifest_path = config.out_path + ".manifest.json";
    std::uint64_t hash = config_hash(config);
    std::ifstream manifest_in(manifest_path);
    if (manifest_in) {
      nlohmann::json m = nlohmann::json::parse(manifest_in);
      if (m["config_hash"].get<std::uint64_t>() != hash)
        throw std::runtime_error("run_search: existing output has a different config; "
                                 "remove " + config.out_path + " to restart");
      std::ifstream lines(config.out_path);
      std::string line;
      while (std::getline(lines, line)) {
        if (line.empty()) continue;
        resumed_records.push_back(record_from_json(nlohmann::json::parse(line)));
      }
    } else {
      nlohmann::ordered_json m{{"config_hash", hash},
                               {"seed", config.seed},
                               {"version", kCodeVersion},
                               {"n_min", config.n_min},
                               {"n_max", config.n_max},
                               {"min_k", config.min_k},
                               {"distance", config.distance.to_string()},
                               {"locality_metric", "max_pairwise_squared_periodic_distance_quarter_cells"}};
      std::ofstream manifest_out(manifest_path);
      manifest_out << m.dump() << "\n";
    }
    out_stream.open(config.out_path, std::ios::app);
  }
  result.resumed = resumed_records.size();

  long long first_n = config.n_min + (config.n_min % 2);
  for (long long n = first_n; n <= config.n_max; n += 2) {
    std::vector<Candidate> cands = enumerate_candidates(n);
    result.candidates_seen += cands.size();

    std::vector<CodeRecord> n_records;
    for (const CodeRecord& r : resumed_records)
      if (r.n == n) n_records.push_back(r);

    // Stage 1 (parallel): logical dimension via the group-algebra rank.
    std::vector<long long> kvals(cands.size());
    parallel_for(cands.size(), config.jobs, [&](std::size_t i) {
      kvals[i] = compute_k_quotient(cands[i].f, antipode(cands[i].f), cands[i].torus);
    });

    std::vector<Pending> pend;
    for (std::size_t i = 0; i < cands.size(); ++i) {
      if (kvals[i] < config.min_k) {
        ++result.skipped_low_k;
        continue;
      }
      bool already = false;
      for (const CodeRecord& r : n_records)
        if (r.candidate.key == cands[i].key) {
          already = true;
          break;
        }
      if (already) continue;
      Pending p;
      p.candidate = cands[i];
      p.k = kvals[i];
      pend.push_back(std::move(p));
    }

    bool exact_stage = config.distance.exact_max_n >= 0 && n <= config.distance.exact_max_n;

    // Stage 2 (parallel): build codes and a randomized upper bound per
    // candidate; for sizes beyond the exact cutoff this is the final answer.
    parallel_for(pend.size(), config.jobs, [&](std::size_t i) {
      Pending& p = pend[i];
      p.code = build_code(p.candidate.f, p.candidate.torus);
      if (!doubly_even_check(p.code).condition_holds)
        throw std::logic_error("run_search: candidate is not doubly even self-dual");
      p.basis = logical_basis(p.code);
      std::uint64_t seed = candidate_seed(config.seed, p.candidate.key);
      std::uint64_t trials = exact_stage
                                 ? std::min<std::uint64_t>(config.prefilter_trials,
                                                           config.distance.trials)
                                 : config.distance.trials;
      p.upper = distance_upper_randomized(p.code, p.basis, trials, seed);
      if (!exact_stage) {
        p.final_dist = p.upper;
        p.done = true;
      }
    });

    // Stage 3: exact solves in deterministic waves, best candidates first.
    // A candidate whose optimistic metric k*ub^2/n cannot reach the best
    // exact metric keeps its upper bound (flagged), which cannot change the
    // winner.
    if (exact_stage && !pend.empty()) {
      std::vector<std::size_t> order(pend.size());
      std::iota(order.begin(), order.end(), std::size_t(0));
      std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        Rational ma = Rational::reduced(pend[a].k * pend[a].upper.d * pend[a].upper.d, n);
        Rational mb = Rational::reduced(pend[b].k * pend[b].upper.d * pend[b].upper.d, n);
        int c = compare(ma, mb);
        if (c != 0) return c > 0;
        return pend[a].candidate.key < pend[b].candidate.key;
      });

      constexpr std::size_t kWave = 64;  // fixed so results ignore job count
      Rational best_exact{0, 1};
      bool have_best = false;
      std::vector<bool> skip(pend.size(), false);
      for (std::size_t wave_start = 0; wave_start < order.size(); wave_start += kWave) {
        std::size_t wave_end = std::min(order.size(), wave_start + kWave);
        parallel_for(wave_end - wave_start, config.jobs, [&](std::size_t wi) {
          Pending& p = pend[order[wave_start + wi]];
          Rational optimistic = Rational::reduced(p.k * p.upper.d * p.upper.d, n);
          if (have_best && compare(optimistic, best_exact) < 0) {
            p.final_dist = p.upper;
            p.done = true;
            skip[order[wave_start + wi]] = true;
            return;
          }
          ExactOptions opts;
          opts.budget_seconds = config.distance.exact_budget_seconds;
          opts.seed = candidate_seed(config.seed, p.candidate.key);
          p.final_dist = distance_exact(p.code, p.basis, opts);
          p.done = true;
        });
        for (std::size_t wi = wave_start; wi < wave_end; ++wi) {
          const Pending& p = pend[order[wi]];
          if (skip[order[wi]] || p.final_dist.status != DistanceStatus::EXACT) continue;
          Rational m = Rational::reduced(p.k * p.final_dist.d * p.final_dist.d, n);
          if (!have_best || compare(m, best_exact) > 0) {
            best_exact = m;
            have_best = true;
          }
        }
      }
    }

    // Reduce: records in enumeration order, then persist and rank.
    for (Pending& p : pend) {
      CodeRecord rec;
      rec.candidate = p.candidate;
      rec.n = n;
      rec.k = p.k;
      rec.d = p.final_dist.d;
      rec.metric = Rational::reduced(p.k * p.final_dist.d * p.final_dist.d, n);
      rec.locality = locality_score(p.candidate.f, antipode(p.candidate.f),
                                    p.candidate.torus);
      rec.distance = p.final_dist;
      rec.exactness_skipped =
          exact_stage && p.final_dist.status != DistanceStatus::EXACT;
      if (out_stream.is_open()) out_stream << record_to_json(rec).dump() << "\n";
      n_records.push_back(std::move(rec));
    }

    if (!n_records.empty()) {
      result.winners.push_back(rank_and_select(n_records));
      for (CodeRecord& r : n_records) result.records.push_back(std::move(r));
    }
  }

  if (out_stream.is_open()) out_stream.flush();
  return result;
}

}  // namespace sdbb
