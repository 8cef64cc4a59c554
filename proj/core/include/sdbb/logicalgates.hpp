#pragma once

#include <optional>
#include <string>
#include <utility>

#include "sdbb/bitmat.hpp"
#include "sdbb/codebuilder.hpp"

namespace sdbb {

// i^phase * X^x_part Z^z_part with the per-qubit convention Y = iXZ.
struct PauliVector {
  BitVec x_part;
  BitVec z_part;
  int phase = 0;  // exponent of i, mod 4

  std::size_t n() const { return x_part.size(); }
};

enum class TransversalGate { CNOT, H, S };

// Conjugation by a transversal single-block gate (H or S):
//   H: (a|b) -> (b|a), phase += 2*|a AND b|
//   S: (a|b) -> (a|a+b), phase += wt(a)
// Throws std::invalid_argument for CNOT (two-block) or a length mismatch.
PauliVector conjugate_by_transversal(TransversalGate gate, const PauliVector& p,
                                     const CssCode& code);

// Conjugation by transversal CNOT between two blocks of the same code
// (control = first): X propagates control->target, Z target->control.
std::pair<PauliVector, PauliVector> conjugate_cnot(const PauliVector& control,
                                                   const PauliVector& target,
                                                   const CssCode& code);

struct StabilizerPreservation {
  bool preserved = false;
  // On failure, the first offending generator and the phase it acquired.
  std::optional<std::size_t> counterexample_row;
  std::optional<int> counterexample_phase;
  bool counterexample_is_x_row = true;
};

// True iff the image of every stabilizer generator is again a stabilizer
// element with phase +1.
StabilizerPreservation stabilizer_preserved(TransversalGate gate, const CssCode& code);

// Binary symplectic action on the logical algebra. Coordinates are
// (x_1..x_K | z_1..z_K); column j is the image of the j-th basis logical.
// For CNOT the matrix covers both blocks (K = 2k), otherwise K = k.
struct LogicalClifford {
  BitMatrix symplectic;         // 2K x 2K
  std::vector<int> phases;      // phase exponent of each basis image, mod 4
  std::string label;
  bool matches_expected_form = false;  // equals the canonical-basis action
};

// Re-expresses gate images of the basis logicals in logical coordinates
// (stabilizer components discarded). Throws std::invalid_argument when the
// gate does not preserve the stabilizer.
LogicalClifford induced_logical_action(TransversalGate gate, const CssCode& code,
                                       const LogicalBasis& basis);

// M^T Omega M == Omega with Omega the block-antidiagonal identity.
bool is_symplectic(const BitMatrix& m);

}  // namespace sdbb
