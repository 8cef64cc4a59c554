#pragma once

#include <optional>
#include <vector>

#include "sdbb/gf2poly.hpp"

namespace sdbb {

// Lexicographic monomial order on x, y with a declared variable precedence.
struct MonomialOrder {
  bool y_precedes_x = true;  // default lex y > x

  // Strict "a comes after b" comparison: true when a < b in the order.
  bool less(const Monomial& a, const Monomial& b) const {
    if (y_precedes_x) {
      if (a.ey != b.ey) return a.ey < b.ey;
      return a.ex < b.ex;
    }
    if (a.ex != b.ex) return a.ex < b.ex;
    return a.ey < b.ey;
  }
};

struct GroebnerBasis {
  std::vector<LaurentPoly> generators;  // reduced, sorted by leading term (descending)
  MonomialOrder order;
};

// Leading term of a nonzero polynomial under the order.
Monomial leading_term(const LaurentPoly& p, const MonomialOrder& order);

// Buchberger's algorithm over GF(2) for ordinary (nonnegative-exponent)
// bivariate polynomials. Throws std::invalid_argument when a generator has a
// negative exponent; callers clear denominators first since monomials are
// units in the Laurent ring. The result is the unique reduced basis.
GroebnerBasis buchberger(const std::vector<LaurentPoly>& generators, MonomialOrder order);

// Remainder of p under multivariate division by the basis generators.
LaurentPoly normal_form(const LaurentPoly& p, const GroebnerBasis& gb);

// S-polynomial of two nonzero polynomials under the order.
LaurentPoly s_polynomial(const LaurentPoly& f, const LaurentPoly& g, MonomialOrder order);

// Number of standard monomials (monomials outside the leading-term ideal);
// nullopt when the staircase is infinite, i.e. the ideal is not
// zero-dimensional.
std::optional<std::size_t> staircase_dimension(const GroebnerBasis& gb);

// dim Z2[x^±1, y^±1] / <f, g>, computed by clearing denominators, adjoining
// an auxiliary variable u with the relation x*y*u + 1 so that monomials stay
// invertible, and counting the staircase of the resulting ideal. nullopt
// means the quotient is infinite-dimensional (f and g share a factor).
std::optional<std::size_t> laurent_quotient_dim(const LaurentPoly& f, const LaurentPoly& g);

}  // namespace sdbb
