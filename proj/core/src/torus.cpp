#include "sdbb/torus.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace sdbb {

namespace {

long long floormod(long long x, long long m) {
  long long r = x % m;
  return r < 0 ? r + m : r;
}

// u*a + v*b = g > 0 for (a, b) != (0, 0).
struct Egcd {
  long long g, u, v;
};

Egcd egcd(long long a, long long b) {
  long long g0 = a, g1 = b, u0 = 1, u1 = 0, v0 = 0, v1 = 1;
  while (g1 != 0) {
    long long q = g0 / g1;
    std::tie(g0, g1) = std::make_tuple(g1, g0 - q * g1);
    std::tie(u0, u1) = std::make_tuple(u1, u0 - q * u1);
    std::tie(v0, v1) = std::make_tuple(v1, v0 - q * v1);
  }
  if (g0 < 0) {
    g0 = -g0;
    u0 = -u0;
    v0 = -v0;
  }
  return Egcd{g0, u0, v0};
}

}  // namespace

TwistedTorus canonicalize_torus(Vec2 a1, Vec2 a2) {
  long long det = a1.x * a2.y - a1.y * a2.x;
  if (det == 0) throw std::invalid_argument("canonicalize_torus: degenerate basis");

  // Unimodular column operations: clear the x component of the first column.
  Vec2 c1 = a1, c2 = a2;
  while (c1.x != 0) {
    long long q = c2.x / c1.x;
    c2.x -= q * c1.x;
    c2.y -= q * c1.y;
    std::swap(c1, c2);
  }
  if (c2.x < 0) {
    c2.x = -c2.x;
    c2.y = -c2.y;
  }
  if (c1.y < 0) c1.y = -c1.y;

  TwistedTorus t;
  t.a1 = a1;
  t.a2 = a2;
  t.alpha = c1.y;
  t.beta = c2.x;
  t.gamma = floormod(c2.y, t.alpha);
  return t;
}

Cell reduce_monomial(const Monomial& m, const TwistedTorus& t) {
  long long i = floormod(m.ex, t.beta);
  long long q = (m.ex - i) / t.beta;
  long long ey = m.ey - q * t.gamma;
  return Cell{i, floormod(ey, t.alpha)};
}

long long cell_index(const Cell& c, const TwistedTorus& t) {
  return c.i * t.alpha + c.j;
}

std::vector<TwistedTorus> enumerate_decompositions(long long n) {
  if (n <= 0 || n % 2 != 0)
    throw std::invalid_argument("enumerate_decompositions: n must be even and positive");
  long long half = n / 2;
  std::vector<TwistedTorus> out;
  for (long long m = 1; m <= half; ++m) {
    if (half % m != 0) continue;
    long long l = half / m;
    for (long long q = 0; q < m; ++q)
      out.push_back(canonicalize_torus(Vec2{0, m}, Vec2{l, q}));
  }
  return out;
}

UnimodularRewrite unimodular_normalize(const LaurentPoly& f) {
  if (!f.contains(Monomial{0, 0}))
    throw std::invalid_argument("unimodular_normalize: constant term required");
  bool found = false;
  Monomial best{};
  auto key = [](const Monomial& m) {
    int l1 = std::abs(m.ex) + std::abs(m.ey);
    int neg = (m.ex < 0 ? 1 : 0) + (m.ey < 0 ? 1 : 0);
    return std::make_tuple(l1, neg, m.ex, m.ey);
  };
  for (const Monomial& t : f.terms()) {
    if (t.ex == 0 && t.ey == 0) continue;
    if (std::gcd(t.ex, t.ey) != 1) continue;
    if (!found || key(t) < key(best)) {
      best = t;
      found = true;
    }
  }
  if (!found)
    throw std::invalid_argument("unimodular_normalize: no primitive exponent pair");
  return unimodular_normalize(f, best);
}

UnimodularRewrite unimodular_normalize(const LaurentPoly& f, Monomial pivot) {
  if (!f.contains(pivot))
    throw std::invalid_argument("unimodular_normalize: pivot is not a term of f");
  long long a = pivot.ex, b = pivot.ey;
  Egcd e = egcd(a, b);
  if (e.g != 1)
    throw std::invalid_argument("unimodular_normalize: pivot exponents not coprime");
  // (a', b') = (-v, u) gives a*b' - a'*b = a*u + b*v = 1.
  long long ap = -e.v, bp = e.u;

  std::vector<Monomial> terms;
  for (const Monomial& t : f.terms()) {
    long long s = e.u * t.ex + e.v * t.ey;
    long long w = -b * t.ex + a * t.ey;
    terms.push_back(Monomial{int(s), int(w)});
  }

  UnimodularRewrite rw;
  rw.transformed = LaurentPoly(std::move(terms));
  rw.basis_change = {{{a, ap}, {b, bp}}};
  rw.pivot = pivot;
  return rw;
}

TwistedTorus map_torus(const TwistedTorus& t, const UnimodularRewrite& rw) {
  long long a = rw.basis_change[0][0], ap = rw.basis_change[0][1];
  long long b = rw.basis_change[1][0], bp = rw.basis_change[1][1];
  long long det = a * bp - ap * b;  // +-1
  // Inverse of [[a, a'], [b, b']] scaled by det in {1, -1}.
  auto apply = [&](Vec2 v) {
    return Vec2{det * (bp * v.x - ap * v.y), det * (-b * v.x + a * v.y)};
  };
  return canonicalize_torus(apply(t.a1), apply(t.a2));
}

}  // namespace sdbb
