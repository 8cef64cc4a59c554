#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "sdbb/gf2poly.hpp"

namespace sdbb {

// Integer lattice vector (x component, y component).
struct Vec2 {
  long long x = 0;
  long long y = 0;
  friend bool operator==(const Vec2&, const Vec2&) = default;
};

// Twisted torus: the plane modulo the lattice spanned by a1 and a2. The
// canonical (column Hermite) form has basis (0, alpha) and (beta, gamma)
// with alpha, beta > 0 and 0 <= gamma < alpha, so alpha*beta unit cells tile
// the torus.
struct TwistedTorus {
  Vec2 a1, a2;  // basis as given
  long long alpha = 1;
  long long beta = 1;
  long long gamma = 0;

  long long cells() const { return alpha * beta; }
  friend bool operator==(const TwistedTorus&, const TwistedTorus&) = default;
};

// Canonical unit-cell coordinate: i in [0, beta) along x, j in [0, alpha)
// along y.
struct Cell {
  long long i = 0;
  long long j = 0;
  friend bool operator==(const Cell&, const Cell&) = default;
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

// Hermite canonical form of an arbitrary nondegenerate integer basis.
// Throws std::invalid_argument when det(a1, a2) == 0.
TwistedTorus canonicalize_torus(Vec2 a1, Vec2 a2);

// Unique representative of a monomial's cell on the torus: fold the
// x exponent into [0, beta) using the (beta, gamma) relation, then the
// y exponent mod alpha.
Cell reduce_monomial(const Monomial& m, const TwistedTorus& t);

// Linear cell index j + i*alpha, in [0, alpha*beta).
long long cell_index(const Cell& c, const TwistedTorus& t);

// All twisted tori with n = 2*l*m qubits: basis (0, m), (l, q) over
// divisor pairs l*m = n/2 and 0 <= q < m, ordered by ascending m then q.
// Throws std::invalid_argument for odd or nonpositive n.
std::vector<TwistedTorus> enumerate_decompositions(long long n);

// Result of rewriting f in new variables x' = x^a y^b, y' = x^a' y^b'.
// The columns of `basis_change` are the exponent vectors (a, b) and
// (a', b'); its determinant is +-1, and new exponents are obtained by
// applying the inverse to old exponent vectors.
struct UnimodularRewrite {
  LaurentPoly transformed;
  std::array<std::array<long long, 2>, 2> basis_change;  // [[a, a'], [b, b']]
  Monomial pivot;
};

// Rewrites f so that a primitive term x^a y^b (gcd(a,b) = 1) becomes the
// plain variable x'. When no pivot is supplied the most local primitive term
// is chosen (smallest |a|+|b|, fewest negative exponents, then canonical
// order). Requires the constant term to be present. Throws
// std::invalid_argument when f has no primitive non-constant term.
UnimodularRewrite unimodular_normalize(const LaurentPoly& f);
UnimodularRewrite unimodular_normalize(const LaurentPoly& f, Monomial pivot);

// Applies the same exponent-lattice change of variables to a torus basis.
TwistedTorus map_torus(const TwistedTorus& t, const UnimodularRewrite& rw);

}  // namespace sdbb
