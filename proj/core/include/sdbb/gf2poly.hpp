#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace sdbb {

// Translation monomial x^ex * y^ey; exponents may be negative.
struct Monomial {
  int ex = 0;
  int ey = 0;

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

// Bivariate Laurent polynomial over GF(2): a finite set of monomials, each
// with coefficient 1. Stored sorted by (ex, ey) so that printing and hashing
// are canonical. Addition is symmetric difference of the term sets.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  explicit LaurentPoly(std::vector<Monomial> terms);

  static LaurentPoly zero() { return LaurentPoly(); }
  static LaurentPoly one() { return LaurentPoly({Monomial{0, 0}}); }
  static LaurentPoly monomial(int ex, int ey) { return LaurentPoly({Monomial{ex, ey}}); }

  const std::vector<Monomial>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  bool contains(const Monomial& m) const;

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator*(const LaurentPoly& o) const;

  // Smallest exponents appearing over all terms; identity (0,0) for the
  // zero polynomial.
  Monomial min_exponents() const;

  std::string to_string() const;

 private:
  std::vector<Monomial> terms_;  // sorted, unique
};

// Syntax error in the polynomial grammar; offset is the byte position of
// the offending character in the input.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " (at byte " + std::to_string(offset) + ")"),
        offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

// Grammar: poly := term ('+' term)*; term := factor ('*' factor)*;
// factor := '1' | ('x'|'y') ('^' signed-integer)?. Whitespace is ignored.
LaurentPoly parse_poly(const std::string& text);

// x^n y^m -> x^-n y^-m applied to every term.
LaurentPoly antipode(const LaurentPoly& p);

inline LaurentPoly poly_add(const LaurentPoly& p, const LaurentPoly& q) { return p + q; }
inline LaurentPoly poly_mul(const LaurentPoly& p, const LaurentPoly& q) { return p * q; }

}  // namespace sdbb
