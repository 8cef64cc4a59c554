#pragma once

#include <string>

#include "sdbb/bitmat.hpp"
#include "sdbb/gf2poly.hpp"
#include "sdbb/torus.hpp"

namespace sdbb {

// CSS code generated by translating the stabilizer pattern of (f, g) over
// every cell of a twisted torus. Qubit columns are indexed
// sublattice*(alpha*beta) + i*alpha + j, which makes h_x == h_z bit-exact in
// the self-dual case g = antipode(f).
struct CssCode {
  long long n = 0;
  TwistedTorus torus;
  LaurentPoly f, g;
  BitMatrix h_x;  // one row per cell
  BitMatrix h_z;

  bool self_dual() const { return h_x == h_z; }
  std::size_t qubit(const Cell& c, int sublattice) const {
    return std::size_t(sublattice) * std::size_t(torus.cells()) +
           std::size_t(cell_index(c, torus));
  }
};

// Canonically paired logical operators: l_x * l_z^T = I_k exactly. The
// symmetric overlap form l_x * l_x^T cannot always be zeroed by a change of
// basis; whatever congruence-canonical residual remains is stored.
struct LogicalBasis {
  long long k = 0;
  BitMatrix l_x;            // k x n X-logical supports
  BitMatrix l_z;            // k x n Z-logical supports
  BitMatrix residual_form;  // k x k, value of l_x * l_x^T after reduction
};

struct DoublyEvenReport {
  bool self_dual = false;
  std::vector<int> generator_weights_mod4;
  bool pairwise_overlaps_even = false;
  bool condition_holds = false;
};

// Builds the parity-check pair. X row of cell c supports f translated to c
// on sublattice 0 and g on sublattice 1; Z rows carry antipode(g) and
// antipode(f). Terms of f that collide after reduction cancel mod 2.
CssCode build_code(const LaurentPoly& f, const TwistedTorus& torus);
CssCode build_code(const LaurentPoly& f, const TwistedTorus& torus, const LaurentPoly& g);

// k = n - rank(h_x) - rank(h_z).
long long compute_k_rank(const CssCode& code);

// k = 2*(alpha*beta - rank [M_f | M_g]) where M_f is multiplication by f on
// the group algebra of the torus. Independent of build_code's matrices.
long long compute_k_quotient(const LaurentPoly& f, const LaurentPoly& g,
                             const TwistedTorus& torus);

// Canonical paired logical basis; throws std::invalid_argument when k = 0.
LogicalBasis logical_basis(const CssCode& code);

DoublyEvenReport doubly_even_check(const CssCode& code);

// JSON export {f, g, a1, a2, n, k, h_x, h_z} with hex-encoded matrix rows
// (column 0 = most significant bit). Bit-exact across runs.
std::string export_code_json(const CssCode& code);

}  // namespace sdbb
