#include "sdbb/codebuilder.hpp"

#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace sdbb {

namespace {

// Toggle the support of poly translated by cell c into a matrix row.
void stamp_poly(BitMatrix& h, std::size_t row, const LaurentPoly& poly,
                const Cell& c, int sublattice, const CssCode& code) {
  for (const Monomial& m : poly.terms()) {
    Cell target = reduce_monomial(Monomial{int(m.ex + c.i), int(m.ey + c.j)}, code.torus);
    h.flip(row, code.qubit(target, sublattice));
  }
}

}  // namespace

CssCode build_code(const LaurentPoly& f, const TwistedTorus& torus) {
  return build_code(f, torus, antipode(f));
}

CssCode build_code(const LaurentPoly& f, const TwistedTorus& torus, const LaurentPoly& g) {
  if (f.is_zero()) throw std::invalid_argument("build_code: f must be nonzero");
  CssCode code;
  code.torus = torus;
  code.f = f;
  code.g = g;
  long long cells = torus.cells();
  code.n = 2 * cells;
  code.h_x = BitMatrix(cells, code.n);
  code.h_z = BitMatrix(cells, code.n);

  LaurentPoly gbar = antipode(g);
  LaurentPoly fbar = antipode(f);
  for (long long i = 0; i < torus.beta; ++i) {
    for (long long j = 0; j < torus.alpha; ++j) {
      Cell c{i, j};
      std::size_t row = std::size_t(cell_index(c, torus));
      stamp_poly(code.h_x, row, f, c, 0, code);
      stamp_poly(code.h_x, row, g, c, 1, code);
      stamp_poly(code.h_z, row, gbar, c, 0, code);
      stamp_poly(code.h_z, row, fbar, c, 1, code);
    }
  }
  return code;
}

long long compute_k_rank(const CssCode& code) {
  return code.n - (long long)code.h_x.rank() - (long long)code.h_z.rank();
}

long long compute_k_quotient(const LaurentPoly& f, const LaurentPoly& g,
                             const TwistedTorus& torus) {
  long long cells = torus.cells();
  BitMatrix m(cells, 2 * cells);
  // Column c of M_f is f * delta_c; both multiplication maps side by side.
  for (long long i = 0; i < torus.beta; ++i) {
    for (long long j = 0; j < torus.alpha; ++j) {
      Cell c{i, j};
      long long col = cell_index(c, torus);
      for (const Monomial& t : f.terms()) {
        Cell target = reduce_monomial(Monomial{int(t.ex + c.i), int(t.ey + c.j)}, torus);
        m.flip(std::size_t(cell_index(target, torus)), std::size_t(col));
      }
      for (const Monomial& t : g.terms()) {
        Cell target = reduce_monomial(Monomial{int(t.ex + c.i), int(t.ey + c.j)}, torus);
        m.flip(std::size_t(cell_index(target, torus)), std::size_t(cells + col));
      }
    }
  }
  return 2 * (cells - (long long)m.rank());
}

namespace {

// Rows of `candidates` that are independent modulo the row space of `base`;
// returns exactly `expect` of them.
BitMatrix quotient_basis(const BitMatrix& base, const BitMatrix& candidates,
                         std::size_t expect) {
  BitMatrix work = base;
  std::vector<std::size_t> pivots = work.rref();
  std::size_t r = pivots.size();
  BitMatrix acc(0, 0);
  for (std::size_t i = 0; i < candidates.rows() && acc.rows() < expect; ++i) {
    BitMatrix trial(0, 0);
    for (std::size_t p = 0; p < r; ++p) trial.append_row(work.get_row(p));
    for (std::size_t p = 0; p < acc.rows(); ++p) trial.append_row(acc.get_row(p));
    trial.append_row(candidates.get_row(i));
    if (trial.rank() == r + acc.rows() + 1) acc.append_row(candidates.get_row(i));
  }
  if (acc.rows() != expect)
    throw std::logic_error("quotient_basis: dimension mismatch");
  return acc;
}

// Symmetric congruence canonicalization over GF(2): A <- U A U^T with the
// same row operations accumulated into U. The result is I_r (+) 0 when the
// form is non-alternating and a direct sum of hyperbolic pairs (+) 0 when it
// is alternating (the latter cannot be brought closer to zero).
void congruence_canonicalize(BitMatrix& a, BitMatrix& u) {
  std::size_t k = a.rows();
  auto add_into = [&](std::size_t src, std::size_t dst) {
    // Congruence by E = I + e_dst,src: row dst += row src, col dst += col src.
    for (std::size_t c = 0; c < k; ++c)
      if (a.get(src, c)) a.flip(dst, c);
    for (std::size_t r = 0; r < k; ++r)
      if (a.get(r, src)) a.flip(r, dst);
    u.xor_row_into(src, dst);
  };
  auto swap_basis = [&](std::size_t p, std::size_t q) {
    if (p == q) return;
    a.swap_rows(p, q);
    for (std::size_t r = 0; r < k; ++r) {
      bool t = a.get(r, p);
      a.set(r, p, a.get(r, q));
      a.set(r, q, t);
    }
    u.swap_rows(p, q);
  };

  // Phase 1: orthogonalize along diagonal pivots.
  std::size_t pos = 0;
  std::size_t units = 0;
  while (pos < k) {
    std::size_t diag = k;
    for (std::size_t j = pos; j < k; ++j)
      if (a.get(j, j)) {
        diag = j;
        break;
      }
    if (diag == k) break;
    swap_basis(diag, pos);
    for (std::size_t r = 0; r < k; ++r)
      if (r != pos && a.get(r, pos)) add_into(pos, r);
    ++units;
    ++pos;
  }

  // Phase 2: the remainder is alternating; split off hyperbolic pairs.
  std::vector<std::size_t> pair_starts;
  while (pos + 1 < k) {
    std::size_t pi = k, pj = k;
    for (std::size_t r = pos; r < k && pi == k; ++r)
      for (std::size_t c = r + 1; c < k && pi == k; ++c)
        if (a.get(r, c)) {
          pi = r;
          pj = c;
        }
    if (pi == k) break;
    swap_basis(pi, pos);
    if (pj == pos) pj = pi;
    swap_basis(pj, pos + 1);
    for (std::size_t r = 0; r < k; ++r) {
      if (r == pos || r == pos + 1) continue;
      if (a.get(r, pos + 1)) add_into(pos, r);
      if (a.get(r, pos)) add_into(pos + 1, r);
    }
    pair_starts.push_back(pos);
    pos += 2;
  }

  // Phase 3: a unit block absorbs hyperbolic pairs, since
  // [1] (+) [[0,1],[1,0]] is congruent to I_3 via u+a+b, u+a, u+b.
  if (units > 0) {
    for (std::size_t p : pair_starts) {
      std::size_t uu = 0;  // any finished unit position
      BitVec ru = u.get_row(uu), ra = u.get_row(p), rb = u.get_row(p + 1);
      BitVec e1 = ru;
      e1 ^= ra;
      e1 ^= rb;
      BitVec e2 = ru;
      e2 ^= ra;
      BitVec e3 = ru;
      e3 ^= rb;
      u.set_row(uu, e1);
      u.set_row(p, e2);
      u.set_row(p + 1, e3);
      // The corresponding 3x3 block of the form becomes the identity.
      a.set(p, p, true);
      a.set(p + 1, p + 1, true);
      a.set(p, p + 1, false);
      a.set(p + 1, p, false);
    }
  }
}

}  // namespace

LogicalBasis logical_basis(const CssCode& code) {
  BitMatrix hx = code.h_x;
  BitMatrix hz = code.h_z;
  std::size_t rx = hx.rank();
  std::size_t rz = hz.rank();
  long long k = code.n - (long long)rx - (long long)rz;
  if (k <= 0) throw std::invalid_argument("logical_basis: code has no logical qubits");

  // X logicals: ker(h_z) modulo the row space of h_x, and dually for Z.
  BitMatrix lx = quotient_basis(code.h_x, code.h_z.kernel(), std::size_t(k));
  BitMatrix lz = quotient_basis(code.h_z, code.h_x.kernel(), std::size_t(k));

  // Normalize the pairing to the identity: row i of the new lz is
  // sum_j P^-1(j, i) lz_j, so that lx * lz^T = P * P^-1 = I.
  BitMatrix pairing = BitMatrix::mul_transpose(lx, lz);
  BitMatrix pinv = pairing.inverse();
  BitMatrix lz_fixed(std::size_t(k), lz.cols());
  for (std::size_t i = 0; i < std::size_t(k); ++i) {
    BitVec acc(lz.cols());
    for (std::size_t j = 0; j < std::size_t(k); ++j)
      if (pinv.get(j, i)) acc ^= lz.get_row(j);
    lz_fixed.set_row(i, acc);
  }
  lz = lz_fixed;

  // Congruence-reduce the symmetric form l_x l_x^T as far as possible and
  // counter-transform l_z to keep the pairing at identity.
  BitMatrix form = BitMatrix::mul_transpose(lx, lx);
  BitMatrix u{std::size_t(k), std::size_t(k)};
  for (std::size_t i = 0; i < std::size_t(k); ++i) u.set(i, i, true);
  congruence_canonicalize(form, u);

  BitMatrix lx_new(std::size_t(k), lx.cols());
  for (std::size_t i = 0; i < std::size_t(k); ++i) {
    BitVec acc(lx.cols());
    for (std::size_t j = 0; j < std::size_t(k); ++j)
      if (u.get(i, j)) acc ^= lx.get_row(j);
    lx_new.set_row(i, acc);
  }
  BitMatrix uinv_t = u.inverse();  // apply (U^-1)^T: row i = sum_j uinv(j,i) lz_j
  BitMatrix lz_new(std::size_t(k), lz.cols());
  for (std::size_t i = 0; i < std::size_t(k); ++i) {
    BitVec acc(lz.cols());
    for (std::size_t j = 0; j < std::size_t(k); ++j)
      if (uinv_t.get(j, i)) acc ^= lz.get_row(j);
    lz_new.set_row(i, acc);
  }

  LogicalBasis basis;
  basis.k = k;
  basis.l_x = lx_new;
  basis.l_z = lz_new;
  basis.residual_form = BitMatrix::mul_transpose(lx_new, lx_new);
  return basis;
}

DoublyEvenReport doubly_even_check(const CssCode& code) {
  DoublyEvenReport rep;
  rep.self_dual = code.self_dual();
  bool weights_ok = true;
  for (std::size_t r = 0; r < code.h_x.rows(); ++r) {
    int w = int(code.h_x.row_weight(r) % 4);
    rep.generator_weights_mod4.push_back(w);
    weights_ok &= w == 0;
  }
  rep.pairwise_overlaps_even = true;
  for (std::size_t r = 0; r < code.h_x.rows() && rep.pairwise_overlaps_even; ++r) {
    BitVec a = code.h_x.get_row(r);
    for (std::size_t s = r + 1; s < code.h_x.rows(); ++s) {
      if (BitVec::dot(a, code.h_x.get_row(s))) {
        rep.pairwise_overlaps_even = false;
        break;
      }
    }
  }
  rep.condition_holds = rep.self_dual && weights_ok && rep.pairwise_overlaps_even;
  return rep;
}

std::string export_code_json(const CssCode& code) {
  nlohmann::ordered_json j;
  j["f"] = code.f.to_string();
  j["g"] = code.g.to_string();
  j["a1"] = {code.torus.a1.x, code.torus.a1.y};
  j["a2"] = {code.torus.a2.x, code.torus.a2.y};
  j["n"] = code.n;
  j["k"] = compute_k_rank(code);
  j["h_x"] = code.h_x.to_hex_rows();
  j["h_z"] = code.h_z.to_hex_rows();
  return j.dump();
}

}  // namespace sdbb
