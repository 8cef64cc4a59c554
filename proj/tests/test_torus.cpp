#include <set>

#include "doctest.h"
#include "sdbb/codebuilder.hpp"
#include "sdbb/groebner.hpp"
#include "sdbb/rng.hpp"
#include "sdbb/torus.hpp"

using namespace sdbb;

TEST_CASE("canonicalize_torus") {
  TwistedTorus t = canonicalize_torus(Vec2{3, 0}, Vec2{1, 1});
  CHECK(t.alpha == 3);
  CHECK(t.beta == 1);
  CHECK(t.gamma == 1);

  t = canonicalize_torus(Vec2{0, 8}, Vec2{4, 4});
  CHECK(t.alpha == 8);
  CHECK(t.beta == 4);
  CHECK(t.gamma == 4);

  t = canonicalize_torus(Vec2{0, 11}, Vec2{3, -3});
  CHECK(t.alpha == 11);
  CHECK(t.beta == 3);
  CHECK(t.gamma == 8);

  CHECK_THROWS_AS(canonicalize_torus(Vec2{2, 4}, Vec2{1, 2}), std::invalid_argument);
}

TEST_CASE("canonicalize_torus is idempotent and respects |det| = alpha*beta") {
  SplitMix64 rng(5);
  for (int i = 0; i < 200; ++i) {
    Vec2 a1{(long long)rng.below(13) - 6, (long long)rng.below(13) - 6};
    Vec2 a2{(long long)rng.below(13) - 6, (long long)rng.below(13) - 6};
    long long det = a1.x * a2.y - a1.y * a2.x;
    if (det == 0) continue;
    TwistedTorus t = canonicalize_torus(a1, a2);
    CHECK(t.alpha * t.beta == std::llabs(det));
    TwistedTorus again =
        canonicalize_torus(Vec2{0, t.alpha}, Vec2{t.beta, t.gamma});
    CHECK(again.alpha == t.alpha);
    CHECK(again.beta == t.beta);
    CHECK(again.gamma == t.gamma);
  }
}

TEST_CASE("reduce_monomial") {
  TwistedTorus t = canonicalize_torus(Vec2{0, 8}, Vec2{4, 4});
  CHECK(reduce_monomial(Monomial{4, 4}, t) == Cell{0, 0});
  CHECK(reduce_monomial(Monomial{0, 8}, t) == Cell{0, 0});

  TwistedTorus t2 = canonicalize_torus(Vec2{0, 4}, Vec2{2, 2});
  CHECK(reduce_monomial(Monomial{2, 0}, t2) == Cell{0, 2});
}

TEST_CASE("reduce_monomial is invariant under lattice translations") {
  SplitMix64 rng(17);
  TwistedTorus t = canonicalize_torus(Vec2{0, 6}, Vec2{4, 3});
  for (int i = 0; i < 200; ++i) {
    Monomial m{int(rng.below(21)) - 10, int(rng.below(21)) - 10};
    int k1 = int(rng.below(7)) - 3, k2 = int(rng.below(7)) - 3;
    Monomial shifted{int(m.ex + k1 * t.a1.x + k2 * t.a2.x),
                     int(m.ey + k1 * t.a1.y + k2 * t.a2.y)};
    CHECK(reduce_monomial(m, t) == reduce_monomial(shifted, t));
  }
}

TEST_CASE("distinct cells count equals alpha*beta") {
  TwistedTorus t = canonicalize_torus(Vec2{0, 5}, Vec2{3, 2});
  std::set<std::pair<long long, long long>> cells;
  for (int ex = -12; ex <= 12; ++ex)
    for (int ey = -12; ey <= 12; ++ey) {
      Cell c = reduce_monomial(Monomial{ex, ey}, t);
      cells.insert({c.i, c.j});
    }
  CHECK((long long)cells.size() == t.alpha * t.beta);
}

TEST_CASE("enumerate_decompositions") {
  std::vector<TwistedTorus> n16 = enumerate_decompositions(16);
  bool has_442 = false;
  for (const TwistedTorus& t : n16)
    if (t.alpha == 4 && t.beta == 2 && t.gamma == 2) has_442 = true;
  CHECK(has_442);

  std::vector<TwistedTorus> n2 = enumerate_decompositions(2);
  REQUIRE(n2.size() == 1);
  CHECK(n2[0].alpha == 1);
  CHECK(n2[0].beta == 1);
  CHECK(n2[0].gamma == 0);

  CHECK(enumerate_decompositions(24).size() == 28);  // sum of m over m | 12
  CHECK_THROWS_AS(enumerate_decompositions(7), std::invalid_argument);
}

TEST_CASE("unimodular_normalize") {
  LaurentPoly f = parse_poly("1 + x*y + x^2*y + x^-1*y");
  UnimodularRewrite rw = unimodular_normalize(f);
  CHECK(rw.pivot == Monomial{1, 1});
  CHECK(rw.basis_change[0][0] == 1);
  CHECK(rw.basis_change[1][0] == 1);
  CHECK(rw.basis_change[0][1] == 0);
  CHECK(rw.basis_change[1][1] == 1);
  CHECK(rw.transformed.contains(Monomial{1, 0}));  // pivot became x'
  CHECK(rw.transformed.contains(Monomial{0, 0}));
  // Quotient dimension is preserved.
  CHECK(laurent_quotient_dim(f, antipode(f)) ==
        laurent_quotient_dim(rw.transformed, antipode(rw.transformed)));

  LaurentPoly id = parse_poly("1 + x + y^2");
  UnimodularRewrite rid = unimodular_normalize(id);
  CHECK(rid.pivot == Monomial{1, 0});
  CHECK(rid.transformed == id);
  CHECK(rid.basis_change[0][0] == 1);
  CHECK(rid.basis_change[0][1] == 0);
  CHECK(rid.basis_change[1][0] == 0);
  CHECK(rid.basis_change[1][1] == 1);

  CHECK_THROWS_AS(unimodular_normalize(parse_poly("1 + x^2*y^2 + x^2*y^-2")),
                  std::invalid_argument);
}

TEST_CASE("unimodular_normalize preserves (n, k) through a mapped torus") {
  LaurentPoly f = parse_poly("1 + x*y + x^2*y + x^-1*y");
  UnimodularRewrite rw = unimodular_normalize(f);
  TwistedTorus t = canonicalize_torus(Vec2{0, 6}, Vec2{3, 1});
  TwistedTorus mapped = map_torus(t, rw);
  CHECK(mapped.alpha * mapped.beta == t.alpha * t.beta);
  long long k1 = compute_k_quotient(f, antipode(f), t);
  long long k2 = compute_k_quotient(rw.transformed, antipode(rw.transformed), mapped);
  CHECK(k1 == k2);
}
