#include "sdbb/logicalgates.hpp"

#include <bit>
#include <stdexcept>

namespace sdbb {

namespace {

std::size_t and_weight(const BitVec& a, const BitVec& b) {
  std::size_t w = 0;
  for (std::size_t i = 0; i < a.words().size(); ++i)
    w += std::popcount(a.words()[i] & b.words()[i]);
  return w;
}

}  // namespace

PauliVector conjugate_by_transversal(TransversalGate gate, const PauliVector& p,
                                     const CssCode& code) {
  if (p.n() != std::size_t(code.n))
    throw std::invalid_argument("conjugate_by_transversal: length mismatch");
  switch (gate) {
    case TransversalGate::H: {
      // H X H = Z and H Z H = X; reordering Z^a X^b into X^b Z^a costs
      // (-1)^|a AND b|.
      PauliVector out;
      out.x_part = p.z_part;
      out.z_part = p.x_part;
      out.phase = int((p.phase + 2 * and_weight(p.x_part, p.z_part)) % 4);
      return out;
    }
    case TransversalGate::S: {
      // S X S^dag = iXZ, so (a|b) -> (a|a+b) with phase i^wt(a).
      PauliVector out;
      out.x_part = p.x_part;
      out.z_part = p.z_part;
      out.z_part ^= p.x_part;
      out.phase = int((p.phase + p.x_part.weight()) % 4);
      return out;
    }
    case TransversalGate::CNOT:
      throw std::invalid_argument("CNOT acts on two blocks; use conjugate_cnot");
  }
  throw std::invalid_argument("unknown gate");
}

std::pair<PauliVector, PauliVector> conjugate_cnot(const PauliVector& control,
                                                   const PauliVector& target,
                                                   const CssCode& code) {
  if (control.n() != std::size_t(code.n) || target.n() != std::size_t(code.n))
    throw std::invalid_argument("conjugate_cnot: length mismatch");
  PauliVector c = control, t = target;
  t.x_part ^= control.x_part;  // X propagates control -> target
  c.z_part ^= target.z_part;   // Z propagates target -> control
  c.phase = control.phase;
  t.phase = target.phase;
  return {c, t};
}

StabilizerPreservation stabilizer_preserved(TransversalGate gate, const CssCode& code) {
  StabilizerPreservation rep;
  BitMatrix hx_r = code.h_x;
  std::vector<std::size_t> px = hx_r.rref();
  BitMatrix hz_r = code.h_z;
  std::vector<std::size_t> pz = hz_r.rref();

  auto in_group = [&](const PauliVector& p) {
    return p.phase == 0 && in_rowspace(hx_r, px, p.x_part) &&
           in_rowspace(hz_r, pz, p.z_part);
  };

  std::size_t rows = code.h_x.rows();
  for (std::size_t r = 0; r < rows * 2; ++r) {
    bool is_x = r < rows;
    PauliVector gen;
    gen.x_part = BitVec(code.n);
    gen.z_part = BitVec(code.n);
    if (is_x) gen.x_part = code.h_x.get_row(r);
    else gen.z_part = code.h_z.get_row(r - rows);

    PauliVector image;
    if (gate == TransversalGate::CNOT) {
      // Generators of the two-block group are (s, 1) and (1, s); both blocks
      // of each image must land back in the group.
      PauliVector idp;
      idp.x_part = BitVec(code.n);
      idp.z_part = BitVec(code.n);
      auto [ia, ib] = conjugate_cnot(gen, idp, code);
      auto [ja, jb] = conjugate_cnot(idp, gen, code);
      if (in_group(ia) && in_group(ib) && in_group(ja) && in_group(jb)) continue;
      image = !in_group(ia) ? ia : (!in_group(ib) ? ib : (!in_group(ja) ? ja : jb));
    } else {
      image = conjugate_by_transversal(gate, gen, code);
      if (in_group(image)) continue;
    }
    rep.preserved = false;
    rep.counterexample_row = is_x ? r : r - rows;
    rep.counterexample_phase = image.phase;
    rep.counterexample_is_x_row = is_x;
    return rep;
  }
  rep.preserved = true;
  return rep;
}

bool is_symplectic(const BitMatrix& m) {
  std::size_t kk = m.rows() / 2;
  if (m.rows() != m.cols() || m.rows() % 2 != 0) return false;
  // Omega = [[0, I], [I, 0]]; check column pairs: <c_i, c_j>_sp.
  auto spdot = [&](std::size_t ci, std::size_t cj) {
    bool acc = false;
    for (std::size_t r = 0; r < kk; ++r) {
      acc ^= m.get(r, ci) && m.get(kk + r, cj);
      acc ^= m.get(kk + r, ci) && m.get(r, cj);
    }
    return acc;
  };
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = i; j < m.rows(); ++j) {
      bool expect = (j == i + kk) || (i == j + kk);
      if (spdot(i, j) != expect) return false;
    }
  return true;
}

namespace {

// Logical coordinates of a Pauli vector: X coefficients pair against l_z,
// Z coefficients against l_x. The stabilizer component is discarded.
void logical_coords(const PauliVector& p, const LogicalBasis& basis,
                    BitMatrix& m, std::size_t col, std::size_t x_offset,
                    std::size_t z_offset) {
  std::size_t k = std::size_t(basis.k);
  for (std::size_t j = 0; j < k; ++j) {
    if (BitVec::dot(p.x_part, basis.l_z.get_row(j))) m.set(x_offset + j, col, true);
    if (BitVec::dot(p.z_part, basis.l_x.get_row(j))) m.set(z_offset + j, col, true);
  }
}

}  // namespace

LogicalClifford induced_logical_action(TransversalGate gate, const CssCode& code,
                                       const LogicalBasis& basis) {
  StabilizerPreservation pres = stabilizer_preserved(gate, code);
  if (!pres.preserved)
    throw std::invalid_argument("induced_logical_action: gate does not preserve the stabilizer");

  std::size_t k = std::size_t(basis.k);
  LogicalClifford out;

  if (gate == TransversalGate::CNOT) {
    // Two blocks, logical qubits ordered (A_1..A_k, B_1..B_k).
    std::size_t bk = 2 * k;
    out.symplectic = BitMatrix(2 * bk, 2 * bk);
    out.phases.assign(2 * bk, 0);
    out.label = "CNOT";
    PauliVector idp;
    idp.x_part = BitVec(code.n);
    idp.z_part = BitVec(code.n);
    for (std::size_t j = 0; j < k; ++j) {
      PauliVector xa, za;
      xa.x_part = basis.l_x.get_row(j);
      xa.z_part = BitVec(code.n);
      za.x_part = BitVec(code.n);
      za.z_part = basis.l_z.get_row(j);

      // X_j^A -> X_j^A X_j^B
      auto [c1, t1] = conjugate_cnot(xa, idp, code);
      logical_coords(c1, basis, out.symplectic, j, 0, bk);
      logical_coords(t1, basis, out.symplectic, j, k, bk + k);
      out.phases[j] = (c1.phase + t1.phase) % 4;
      // X_j^B -> X_j^B
      auto [c2, t2] = conjugate_cnot(idp, xa, code);
      logical_coords(c2, basis, out.symplectic, k + j, 0, bk);
      logical_coords(t2, basis, out.symplectic, k + j, k, bk + k);
      out.phases[k + j] = (c2.phase + t2.phase) % 4;
      // Z_j^A -> Z_j^A
      auto [c3, t3] = conjugate_cnot(za, idp, code);
      logical_coords(c3, basis, out.symplectic, bk + j, 0, bk);
      logical_coords(t3, basis, out.symplectic, bk + j, k, bk + k);
      out.phases[bk + j] = (c3.phase + t3.phase) % 4;
      // Z_j^B -> Z_j^A Z_j^B
      auto [c4, t4] = conjugate_cnot(idp, za, code);
      logical_coords(c4, basis, out.symplectic, bk + k + j, 0, bk);
      logical_coords(t4, basis, out.symplectic, bk + k + j, k, bk + k);
      out.phases[bk + k + j] = (c4.phase + t4.phase) % 4;
    }
    // Expected pairwise form: X^A -> X^A X^B, X^B fixed, Z^A fixed,
    // Z^B -> Z^A Z^B.
    BitMatrix expect(2 * bk, 2 * bk);
    for (std::size_t j = 0; j < k; ++j) {
      expect.set(j, j, true);
      expect.set(k + j, j, true);
      expect.set(k + j, k + j, true);
      expect.set(bk + j, bk + j, true);
      expect.set(bk + j, bk + k + j, true);
      expect.set(bk + k + j, bk + k + j, true);
    }
    out.matches_expected_form = out.symplectic == expect;
    return out;
  }

  out.symplectic = BitMatrix(2 * k, 2 * k);
  out.phases.assign(2 * k, 0);
  out.label = gate == TransversalGate::H ? "H" : "S";
  for (std::size_t j = 0; j < k; ++j) {
    PauliVector xj, zj;
    xj.x_part = basis.l_x.get_row(j);
    xj.z_part = BitVec(code.n);
    zj.x_part = BitVec(code.n);
    zj.z_part = basis.l_z.get_row(j);
    PauliVector ix = conjugate_by_transversal(gate, xj, code);
    PauliVector iz = conjugate_by_transversal(gate, zj, code);
    logical_coords(ix, basis, out.symplectic, j, 0, k);
    logical_coords(iz, basis, out.symplectic, k + j, 0, k);
    out.phases[j] = ix.phase;
    out.phases[k + j] = iz.phase;
  }

  BitMatrix expect(2 * k, 2 * k);
  if (gate == TransversalGate::H) {
    for (std::size_t j = 0; j < k; ++j) {
      expect.set(k + j, j, true);  // X_j -> Z_j
      expect.set(j, k + j, true);  // Z_j -> X_j
    }
  } else {
    for (std::size_t j = 0; j < k; ++j) {
      expect.set(j, j, true);
      expect.set(k + j, j, true);      // X_j -> X_j Z_j
      expect.set(k + j, k + j, true);  // Z_j fixed
    }
  }
  out.matches_expected_form = out.symplectic == expect;
  return out;
}

}  // namespace sdbb
