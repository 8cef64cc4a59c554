#include "sdbb/groebner.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <stdexcept>

// An n-variate (n <= 3) Buchberger engine over GF(2). The third variable is
// the denominator-clearing auxiliary used by laurent_quotient_dim; the public
// bivariate surface runs the same engine with two variables.

namespace sdbb {
namespace {

constexpr int kMaxVars = 3;
using Exps = std::array<int, kMaxVars>;

struct LexOrder {
  int nvars = 2;
  std::array<int, kMaxVars> prec{1, 0, 2};  // prec[0] = most significant var

  bool less(const Exps& a, const Exps& b) const {
    for (int i = 0; i < nvars; ++i) {
      int v = prec[i];
      if (a[v] != b[v]) return a[v] < b[v];
    }
    return false;
  }
  bool equal(const Exps& a, const Exps& b) const {
    for (int v = 0; v < nvars; ++v)
      if (a[v] != b[v]) return false;
    return true;
  }
};

// Terms kept sorted descending, so terms.front() is the leading term.
struct NPoly {
  std::vector<Exps> terms;

  bool is_zero() const { return terms.empty(); }
  const Exps& lt() const { return terms.front(); }
};

NPoly normalize(std::vector<Exps> terms, const LexOrder& ord) {
  std::sort(terms.begin(), terms.end(),
            [&](const Exps& a, const Exps& b) { return ord.less(b, a); });
  std::vector<Exps> out;
  out.reserve(terms.size());
  std::size_t i = 0;
  while (i < terms.size()) {
    std::size_t j = i;
    while (j < terms.size() && terms[j] == terms[i]) ++j;
    if ((j - i) % 2 == 1) out.push_back(terms[i]);
    i = j;
  }
  return NPoly{std::move(out)};
}

NPoly add(const NPoly& a, const NPoly& b, const LexOrder& ord) {
  std::vector<Exps> merged;
  merged.reserve(a.terms.size() + b.terms.size());
  std::size_t i = 0, j = 0;
  while (i < a.terms.size() && j < b.terms.size()) {
    if (a.terms[i] == b.terms[j]) {
      ++i;
      ++j;  // cancels mod 2
    } else if (ord.less(b.terms[j], a.terms[i])) {
      merged.push_back(a.terms[i++]);
    } else {
      merged.push_back(b.terms[j++]);
    }
  }
  merged.insert(merged.end(), a.terms.begin() + i, a.terms.end());
  merged.insert(merged.end(), b.terms.begin() + j, b.terms.end());
  return NPoly{std::move(merged)};
}

NPoly mul_monomial(const NPoly& p, const Exps& m) {
  NPoly out = p;
  for (Exps& t : out.terms)
    for (int v = 0; v < kMaxVars; ++v) t[v] += m[v];
  return out;
}

bool divides(const Exps& a, const Exps& b) {
  for (int v = 0; v < kMaxVars; ++v)
    if (a[v] > b[v]) return false;
  return true;
}

Exps quotient(const Exps& a, const Exps& b) {
  Exps q{};
  for (int v = 0; v < kMaxVars; ++v) q[v] = a[v] - b[v];
  return q;
}

Exps lcm(const Exps& a, const Exps& b) {
  Exps l{};
  for (int v = 0; v < kMaxVars; ++v) l[v] = std::max(a[v], b[v]);
  return l;
}

// Full multivariate division remainder of p by the set G.
NPoly reduce(NPoly p, const std::vector<NPoly>& g, const LexOrder& ord) {
  std::vector<Exps> out;
  while (!p.is_zero()) {
    bool reduced = false;
    for (const NPoly& f : g) {
      if (divides(f.lt(), p.lt())) {
        p = add(p, mul_monomial(f, quotient(p.lt(), f.lt())), ord);
        reduced = true;
        break;
      }
    }
    if (!reduced) {
      out.push_back(p.lt());
      p.terms.erase(p.terms.begin());
    }
  }
  return NPoly{std::move(out)};
}

NPoly s_poly(const NPoly& f, const NPoly& g, const LexOrder& ord) {
  Exps l = lcm(f.lt(), g.lt());
  return add(mul_monomial(f, quotient(l, f.lt())),
             mul_monomial(g, quotient(l, g.lt())), ord);
}

bool coprime(const Exps& a, const Exps& b) {
  for (int v = 0; v < kMaxVars; ++v)
    if (a[v] > 0 && b[v] > 0) return false;
  return true;
}

std::vector<NPoly> buchberger_engine(std::vector<NPoly> gens, const LexOrder& ord) {
  std::vector<NPoly> basis;
  for (NPoly& g : gens) {
    NPoly r = reduce(std::move(g), basis, ord);
    if (!r.is_zero()) basis.push_back(std::move(r));
  }

  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j) pairs.emplace_back(i, j);

  while (!pairs.empty()) {
    auto [i, j] = pairs.back();
    pairs.pop_back();
    if (coprime(basis[i].lt(), basis[j].lt())) continue;  // product criterion
    NPoly r = reduce(s_poly(basis[i], basis[j], ord), basis, ord);
    if (r.is_zero()) continue;
    for (std::size_t k = 0; k < basis.size(); ++k) pairs.emplace_back(k, basis.size());
    basis.push_back(std::move(r));
  }

  // Minimalize: drop generators whose leading term is divisible by another's.
  std::vector<NPoly> minimal;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    bool keep = true;
    for (std::size_t j = 0; j < basis.size(); ++j) {
      if (i == j) continue;
      if (divides(basis[j].lt(), basis[i].lt()) &&
          !(ord.equal(basis[j].lt(), basis[i].lt()) && j > i)) {
        keep = false;
        break;
      }
    }
    if (keep) minimal.push_back(basis[i]);
  }

  // Interreduce tails: the result is the unique reduced Groebner basis.
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<NPoly> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    minimal[i] = reduce(minimal[i], others, ord);
  }

  std::sort(minimal.begin(), minimal.end(),
            [&](const NPoly& a, const NPoly& b) { return ord.less(b.lt(), a.lt()); });
  return minimal;
}

// Staircase size of the leading-term ideal, or nullopt when some variable has
// no pure power among the leading terms (the standard zero-dimensionality
// criterion).
std::optional<std::size_t> staircase_count(const std::vector<NPoly>& basis,
                                           const LexOrder& ord) {
  std::vector<Exps> lts;
  lts.reserve(basis.size());
  for (const NPoly& g : basis) {
    if (g.is_zero()) continue;
    lts.push_back(g.lt());
  }
  if (lts.empty()) return std::nullopt;  // zero ideal, quotient is the whole ring
  for (const Exps& t : lts) {
    bool constant = true;
    for (int v = 0; v < ord.nvars; ++v) constant &= t[v] == 0;
    if (constant) return 0;  // unit ideal
  }

  std::array<int, kMaxVars> cap{};
  for (int v = 0; v < ord.nvars; ++v) {
    int best = -1;
    for (const Exps& t : lts) {
      bool pure = t[v] > 0;
      for (int w = 0; w < ord.nvars && pure; ++w)
        if (w != v && t[w] != 0) pure = false;
      if (pure && (best < 0 || t[v] < best)) best = t[v];
    }
    if (best < 0) return std::nullopt;
    cap[v] = best;
  }

  // Every standard monomial lies in the box [0,cap_0) x ... ; walk it.
  std::size_t count = 0;
  Exps m{};
  auto divisible_by_some = [&](const Exps& mm) {
    for (const Exps& t : lts)
      if (divides(t, mm)) return true;
    return false;
  };
  std::array<int, kMaxVars> idx{};
  int nv = ord.nvars;
  while (true) {
    for (int v = 0; v < kMaxVars; ++v) m[v] = v < nv ? idx[v] : 0;
    if (!divisible_by_some(m)) ++count;
    int v = 0;
    while (v < nv) {
      if (++idx[v] < cap[v]) break;
      idx[v] = 0;
      ++v;
    }
    if (v == nv) break;
  }
  return count;
}

NPoly from_laurent(const LaurentPoly& p, const LexOrder& ord) {
  std::vector<Exps> terms;
  terms.reserve(p.terms().size());
  for (const Monomial& t : p.terms()) terms.push_back(Exps{t.ex, t.ey, 0});
  return normalize(std::move(terms), ord);
}

LaurentPoly to_laurent(const NPoly& p) {
  std::vector<Monomial> terms;
  terms.reserve(p.terms.size());
  for (const Exps& t : p.terms) terms.push_back(Monomial{t[0], t[1]});
  return LaurentPoly(std::move(terms));
}

LexOrder bivariate_order(MonomialOrder order) {
  LexOrder ord;
  ord.nvars = 2;
  ord.prec = order.y_precedes_x ? std::array<int, 3>{1, 0, 2}
                                : std::array<int, 3>{0, 1, 2};
  return ord;
}

}  // namespace

Monomial leading_term(const LaurentPoly& p, const MonomialOrder& order) {
  if (p.is_zero()) throw std::invalid_argument("leading_term of zero polynomial");
  Monomial best = p.terms().front();
  for (const Monomial& t : p.terms())
    if (order.less(best, t)) best = t;
  return best;
}

GroebnerBasis buchberger(const std::vector<LaurentPoly>& generators, MonomialOrder order) {
  LexOrder ord = bivariate_order(order);
  std::vector<NPoly> gens;
  for (const LaurentPoly& g : generators) {
    for (const Monomial& t : g.terms())
      if (t.ex < 0 || t.ey < 0)
        throw std::invalid_argument(
            "buchberger: generators must have nonnegative exponents");
    if (!g.is_zero()) gens.push_back(from_laurent(g, ord));
  }
  std::vector<NPoly> basis = buchberger_engine(std::move(gens), ord);
  GroebnerBasis gb;
  gb.order = order;
  for (const NPoly& b : basis) gb.generators.push_back(to_laurent(b));
  return gb;
}

LaurentPoly normal_form(const LaurentPoly& p, const GroebnerBasis& gb) {
  LexOrder ord = bivariate_order(gb.order);
  std::vector<NPoly> basis;
  for (const LaurentPoly& g : gb.generators)
    if (!g.is_zero()) basis.push_back(from_laurent(g, ord));
  return to_laurent(reduce(from_laurent(p, ord), basis, ord));
}

LaurentPoly s_polynomial(const LaurentPoly& f, const LaurentPoly& g, MonomialOrder order) {
  if (f.is_zero() || g.is_zero())
    throw std::invalid_argument("s_polynomial of zero polynomial");
  LexOrder ord = bivariate_order(order);
  return to_laurent(s_poly(from_laurent(f, ord), from_laurent(g, ord), ord));
}

std::optional<std::size_t> staircase_dimension(const GroebnerBasis& gb) {
  LexOrder ord = bivariate_order(gb.order);
  std::vector<NPoly> basis;
  for (const LaurentPoly& g : gb.generators)
    if (!g.is_zero()) basis.push_back(from_laurent(g, ord));
  return staircase_count(basis, ord);
}

std::optional<std::size_t> laurent_quotient_dim(const LaurentPoly& f, const LaurentPoly& g) {
  if (f.is_zero() || g.is_zero())
    throw std::invalid_argument("laurent_quotient_dim: polynomials must be nonzero");

  auto clear_denominators = [](const LaurentPoly& p) {
    Monomial m = p.min_exponents();
    int sx = m.ex < 0 ? -m.ex : 0;
    int sy = m.ey < 0 ? -m.ey : 0;
    std::vector<Exps> terms;
    for (const Monomial& t : p.terms()) terms.push_back(Exps{t.ex + sx, t.ey + sy, 0});
    return terms;
  };

  LexOrder ord;
  ord.nvars = 3;
  ord.prec = {2, 1, 0};  // lex u > y > x

  std::vector<NPoly> gens;
  gens.push_back(normalize(clear_denominators(f), ord));
  gens.push_back(normalize(clear_denominators(g), ord));
  gens.push_back(normalize({Exps{1, 1, 1}, Exps{0, 0, 0}}, ord));  // x*y*u + 1

  std::vector<NPoly> basis = buchberger_engine(std::move(gens), ord);
  return staircase_count(basis, ord);
}

}  // namespace sdbb
