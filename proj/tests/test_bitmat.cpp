#include "doctest.h"
#include "sdbb/bitmat.hpp"
#include "sdbb/rng.hpp"

using namespace sdbb;

namespace {

BitMatrix random_matrix(std::size_t rows, std::size_t cols, std::uint64_t seed) {
  BitMatrix m(rows, cols);
  SplitMix64 rng(seed);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c)
      if (rng.next() & 1) m.set(r, c, true);
  return m;
}

}  // namespace

TEST_CASE("hex round trip, column 0 is the most significant bit") {
  BitVec v(6);
  for (std::size_t c = 0; c < 6; ++c) v.set(c, true);
  CHECK(v.to_hex() == "fc");
  CHECK(BitVec::from_hex("fc", 6) == v);

  BitVec w(12);
  w.set(0, true);
  w.set(11, true);
  CHECK(w.to_hex() == "801");
}

TEST_CASE("rank and kernel") {
  BitMatrix m(2, 4);
  m.set(0, 0, true);
  m.set(0, 1, true);
  m.set(1, 1, true);
  m.set(1, 2, true);
  CHECK(m.rank() == 2);
  BitMatrix ker = m.kernel();
  CHECK(ker.rows() == 2);
  for (std::size_t i = 0; i < ker.rows(); ++i)
    for (std::size_t r = 0; r < m.rows(); ++r)
      CHECK_FALSE(BitVec::dot(ker.get_row(i), m.get_row(r)));
}

TEST_CASE("kernel vectors of random matrices annihilate the rows") {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    BitMatrix m = random_matrix(7, 13, seed);
    BitMatrix ker = m.kernel();
    CHECK(ker.rows() + m.rank() == 13);
    for (std::size_t i = 0; i < ker.rows(); ++i)
      for (std::size_t r = 0; r < m.rows(); ++r)
        CHECK_FALSE(BitVec::dot(ker.get_row(i), m.get_row(r)));
  }
}

TEST_CASE("inverse of a random invertible matrix") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    BitMatrix m = random_matrix(8, 8, seed);
    if (m.rank() != 8) continue;
    BitMatrix inv = m.inverse();
    BitMatrix prod(8, 8);
    for (std::size_t i = 0; i < 8; ++i)
      for (std::size_t j = 0; j < 8; ++j) {
        bool acc = false;
        for (std::size_t l = 0; l < 8; ++l) acc ^= m.get(i, l) && inv.get(l, j);
        prod.set(i, j, acc);
      }
    CHECK(prod.is_identity());
  }
}

TEST_CASE("rowspace membership") {
  BitMatrix m = random_matrix(5, 10, 99);
  BitMatrix red = m;
  std::vector<std::size_t> pivots = red.rref();
  // Sums of rows are members.
  BitVec v = m.get_row(0);
  v ^= m.get_row(3);
  CHECK(in_rowspace(red, pivots, v));
}
