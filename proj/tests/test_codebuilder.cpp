#include "doctest.h"
#include "json.hpp"
#include "sdbb/codebuilder.hpp"
#include "sdbb/groebner.hpp"
#include "sdbb/rng.hpp"
#include "sdbb/search.hpp"

using namespace sdbb;

namespace {

CssCode make(const char* f, long long a1x, long long a1y, long long a2x, long long a2y) {
  return build_code(parse_poly(f), canonicalize_torus(Vec2{a1x, a1y}, Vec2{a2x, a2y}));
}

bool css_commutes(const CssCode& code) {
  return BitMatrix::mul_transpose(code.h_x, code.h_z).is_zero();
}

}  // namespace

TEST_CASE("color code on the 6-qubit twisted torus: all-ones stabilizers") {
  CssCode code = make("1+x+y", 3, 0, 1, 1);
  CHECK(code.n == 6);
  for (std::size_t r = 0; r < code.h_x.rows(); ++r)
    CHECK(code.h_x.row_weight(r) == 6);
  CHECK(code.h_x.rank() == 1);
  CHECK(compute_k_rank(code) == 4);
  CHECK(css_commutes(code));
}

TEST_CASE("f = 1 gives weight-2 stabilizers and no logicals") {
  CssCode code = make("1", 0, 3, 2, 0);
  for (std::size_t r = 0; r < code.h_x.rows(); ++r)
    CHECK(code.h_x.row_weight(r) == 2);
  CHECK(compute_k_rank(code) == 0);
  CHECK(compute_k_quotient(code.f, code.g, code.torus) == 0);
}

TEST_CASE("the 16-qubit code: weight-8 rows, h_x = h_z") {
  CssCode code = make("1+x+y+y^-1", 0, 4, 2, 2);
  CHECK(code.n == 16);
  CHECK(code.h_x.rows() == 8);
  for (std::size_t r = 0; r < code.h_x.rows(); ++r)
    CHECK(code.h_x.row_weight(r) == 8);
  CHECK(code.self_dual());
  CHECK(compute_k_rank(code) == 4);
  CHECK(css_commutes(code));
}

TEST_CASE("k by quotient matches the published examples") {
  CHECK(compute_k_quotient(parse_poly("1+x+x^2*y+x^-1*y"),
                           antipode(parse_poly("1+x+x^2*y+x^-1*y")),
                           canonicalize_torus(Vec2{0, 7}, Vec2{4, 3})) == 6);
  CHECK(compute_k_quotient(parse_poly("1+x+y"), antipode(parse_poly("1+x+y")),
                           canonicalize_torus(Vec2{3, 0}, Vec2{0, 3})) == 4);
  // Single-cell torus: the group algebra is GF(2) and the map is onto.
  CHECK(compute_k_quotient(parse_poly("1+x"), antipode(parse_poly("1+x")),
                           canonicalize_torus(Vec2{0, 1}, Vec2{1, 0})) == 0);
}

TEST_CASE("rank and quotient derivations of k agree on random candidates") {
  SplitMix64 rng(3);
  int done = 0;
  while (done < 40) {
    long long n = 8 + 2 * (long long)rng.below(12);
    std::vector<Candidate> cands = enumerate_candidates(n);
    if (cands.empty()) continue;
    const Candidate& cand = cands[rng.below(cands.size())];
    CssCode code = build_code(cand.f, cand.torus);
    long long kq = compute_k_quotient(cand.f, antipode(cand.f), cand.torus);
    CHECK(compute_k_rank(code) == kq);
    CHECK(css_commutes(code));
    CHECK(code.h_x == code.h_z);
    // k never exceeds k_max from the Laurent quotient.
    auto dim = laurent_quotient_dim(cand.f, antipode(cand.f));
    if (dim) CHECK(kq <= 2 * (long long)*dim);
    ++done;
  }
}

TEST_CASE("translation invariance: translated rows are a permutation") {
  CssCode code = make("1+x+y+y^-1", 0, 4, 2, 2);
  // Row of cell c + t equals row of cell c with all qubits translated by t.
  TwistedTorus t = code.torus;
  Cell shift{1, 2};
  for (long long i = 0; i < t.beta; ++i) {
    for (long long j = 0; j < t.alpha; ++j) {
      Cell c{i, j};
      Cell moved = reduce_monomial(Monomial{int(c.i + shift.i), int(c.j + shift.j)}, t);
      BitVec expect(code.n);
      BitVec base = code.h_x.get_row(std::size_t(cell_index(c, t)));
      for (long long q = 0; q < code.n; ++q) {
        if (!base.get(std::size_t(q))) continue;
        int subl = q >= t.cells() ? 1 : 0;
        long long ci = (q - subl * t.cells()) / t.alpha;
        long long cj = (q - subl * t.cells()) % t.alpha;
        Cell moved_q =
            reduce_monomial(Monomial{int(ci + shift.i), int(cj + shift.j)}, t);
        expect.set(code.qubit(moved_q, subl), true);
      }
      CHECK(code.h_x.get_row(std::size_t(cell_index(moved, t))) == expect);
    }
  }
}

TEST_CASE("logical_basis pairing is exactly the identity") {
  CssCode codes[] = {make("1+x+y+y^-1", 0, 4, 2, 2),
                     make("1+x+x^2*y+x^-1*y", 0, 7, 4, 3)};
  for (const CssCode& code : codes) {
    LogicalBasis basis = logical_basis(code);
    CHECK(BitMatrix::mul_transpose(basis.l_x, basis.l_z).is_identity());
    // Rows live in the right kernels and are logically nontrivial.
    BitMatrix hx_r = code.h_x;
    auto px = hx_r.rref();
    BitMatrix hz_r = code.h_z;
    auto pz = hz_r.rref();
    for (long long j = 0; j < basis.k; ++j) {
      BitVec lx = basis.l_x.get_row(std::size_t(j));
      BitVec lz = basis.l_z.get_row(std::size_t(j));
      for (std::size_t r = 0; r < code.h_z.rows(); ++r)
        CHECK_FALSE(BitVec::dot(lx, code.h_z.get_row(r)));
      for (std::size_t r = 0; r < code.h_x.rows(); ++r)
        CHECK_FALSE(BitVec::dot(lz, code.h_x.get_row(r)));
      CHECK_FALSE(in_rowspace(hx_r, px, lx));
      CHECK_FALSE(in_rowspace(hz_r, pz, lz));
    }
    // The residual form is the final l_x l_x^T.
    CHECK(BitMatrix::mul_transpose(basis.l_x, basis.l_x) == basis.residual_form);
  }
}

TEST_CASE("logical_basis rejects k = 0") {
  CssCode code = make("1", 0, 3, 2, 0);
  CHECK_THROWS_AS(logical_basis(code), std::invalid_argument);
}

TEST_CASE("[[6,4,2]] logical basis from an independent pairing check") {
  CssCode code = make("1+x+y", 3, 0, 1, 1);
  LogicalBasis basis = logical_basis(code);
  REQUIRE(basis.k == 4);
  // Symplectic pairing: l_x,i anticommutes with l_z,i only.
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      CHECK(BitVec::dot(basis.l_x.get_row(i), basis.l_z.get_row(j)) == (i == j));
}

TEST_CASE("doubly even check") {
  CssCode w8 = make("1+x+y+y^-1", 0, 4, 2, 2);
  DoublyEvenReport rep = doubly_even_check(w8);
  CHECK(rep.condition_holds);

  CssCode color18 = make("1+x+y", 3, 0, 0, 3);  // weight-6 rows
  rep = doubly_even_check(color18);
  CHECK(rep.self_dual);
  CHECK_FALSE(rep.condition_holds);
  for (int w : rep.generator_weights_mod4) CHECK(w == 2);

  CssCode f1 = make("1", 0, 3, 2, 0);  // weight-2 rows
  CHECK_FALSE(doubly_even_check(f1).condition_holds);
}

TEST_CASE("export format is bit-exact") {
  CssCode code = make("1+x+y", 3, 0, 1, 1);
  nlohmann::json j = nlohmann::json::parse(export_code_json(code));
  CHECK(j["n"] == 6);
  CHECK(j["k"] == 4);
  CHECK(j["f"] == "1+y+x");
  CHECK(j["a1"] == nlohmann::json::array({3, 0}));
  // All-ones rows over 6 columns: 1111'11 padded -> "fc".
  for (const auto& row : j["h_x"]) CHECK(row == "fc");
  CHECK(j["h_x"] == j["h_z"]);
}
