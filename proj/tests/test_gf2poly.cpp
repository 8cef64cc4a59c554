#include <map>
#include <utility>

#include "doctest.h"
#include "sdbb/gf2poly.hpp"
#include "sdbb/rng.hpp"

using namespace sdbb;

namespace {

LaurentPoly random_poly(SplitMix64& rng, int max_terms = 6, int span = 4) {
  std::vector<Monomial> terms;
  int count = int(rng.below(max_terms + 1));
  for (int i = 0; i < count; ++i)
    terms.push_back(Monomial{int(rng.below(2 * span + 1)) - span,
                             int(rng.below(2 * span + 1)) - span});
  return LaurentPoly(std::move(terms));
}

// Term-by-term convolution over a map; independent of LaurentPoly's merge.
LaurentPoly convolution_oracle(const LaurentPoly& p, const LaurentPoly& q) {
  std::map<std::pair<int, int>, int> counts;
  for (const Monomial& a : p.terms())
    for (const Monomial& b : q.terms()) counts[{a.ex + b.ex, a.ey + b.ey}] += 1;
  std::vector<Monomial> terms;
  for (const auto& [key, cnt] : counts)
    if (cnt % 2) terms.push_back(Monomial{key.first, key.second});
  return LaurentPoly(std::move(terms));
}

}  // namespace

TEST_CASE("parse_poly grammar") {
  CHECK(parse_poly("1 + x + y + y^-1") ==
        LaurentPoly({{0, 0}, {1, 0}, {0, 1}, {0, -1}}));
  CHECK(parse_poly("1") == LaurentPoly::one());
  CHECK(parse_poly("x*y^2 + x*y^2").is_zero());
  CHECK(parse_poly("x^2*y") == LaurentPoly({{2, 1}}));
  CHECK(parse_poly("x^-1") == LaurentPoly({{-1, 0}}));
  CHECK(parse_poly("x*x*y") == LaurentPoly({{2, 1}}));
}

TEST_CASE("parse_poly reports the byte offset of errors") {
  CHECK_THROWS_AS(parse_poly("1 + z"), ParseError);
  try {
    parse_poly("1 + z");
  } catch (const ParseError& e) {
    CHECK(e.offset() == 4);
  }
  try {
    parse_poly("x^1.5");
  } catch (const ParseError& e) {
    CHECK(e.offset() == 3);
  }
  CHECK_THROWS_AS(parse_poly(""), ParseError);
  CHECK_THROWS_AS(parse_poly("x^"), ParseError);
  CHECK_THROWS_AS(parse_poly("x +"), ParseError);
}

TEST_CASE("printing is canonical and parses back") {
  CHECK(parse_poly("y + 1 + y^-1 + x").to_string() == "y^-1+1+y+x");
  CHECK(LaurentPoly::zero().to_string() == "0");
  SplitMix64 rng(7);
  for (int i = 0; i < 200; ++i) {
    LaurentPoly p = random_poly(rng);
    if (p.is_zero()) continue;
    CHECK(parse_poly(p.to_string()) == p);
  }
}

TEST_CASE("antipode") {
  LaurentPoly f = parse_poly("1+x+y+y^-1");
  CHECK(antipode(f) == parse_poly("1+x^-1+y^-1+y"));
  CHECK(antipode(LaurentPoly::one()) == LaurentPoly::one());
  SplitMix64 rng(13);
  for (int i = 0; i < 100; ++i) {
    LaurentPoly p = random_poly(rng);
    CHECK(antipode(antipode(p)) == p);
  }
}

TEST_CASE("ring operations") {
  LaurentPoly one_plus_x = parse_poly("1+x");
  CHECK(one_plus_x * one_plus_x == parse_poly("1+x^2"));
  SplitMix64 rng(21);
  for (int i = 0; i < 100; ++i) {
    LaurentPoly p = random_poly(rng);
    CHECK((p + p).is_zero());
  }
}

TEST_CASE("trinomial times its antipode, expanded by an independent oracle") {
  // (1+M+N)(1+M^-1+N^-1) with M = x, N = y.
  LaurentPoly f = parse_poly("1+x+y");
  LaurentPoly g = antipode(f);
  LaurentPoly expect = parse_poly("1 + x + x^-1 + y + y^-1 + x*y^-1 + x^-1*y");
  CHECK(f * g == expect);
  CHECK(convolution_oracle(f, g) == expect);
}

TEST_CASE("antipode is a ring homomorphism") {
  SplitMix64 rng(34);
  for (int i = 0; i < 100; ++i) {
    LaurentPoly p = random_poly(rng);
    LaurentPoly q = random_poly(rng);
    CHECK(antipode(p * q) == antipode(p) * antipode(q));
    CHECK(antipode(p + q) == antipode(p) + antipode(q));
    CHECK(p * q == convolution_oracle(p, q));
  }
}
