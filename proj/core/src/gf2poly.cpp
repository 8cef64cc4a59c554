#include "sdbb/gf2poly.hpp"

#include <algorithm>
#include <cctype>

namespace sdbb {

namespace {

// Sort and cancel duplicate pairs mod 2.
std::vector<Monomial> normalize(std::vector<Monomial> terms) {
  std::sort(terms.begin(), terms.end());
  std::vector<Monomial> out;
  out.reserve(terms.size());
  std::size_t i = 0;
  while (i < terms.size()) {
    std::size_t j = i;
    while (j < terms.size() && terms[j] == terms[i]) ++j;
    if ((j - i) % 2 == 1) out.push_back(terms[i]);
    i = j;
  }
  return out;
}

}  // namespace

LaurentPoly::LaurentPoly(std::vector<Monomial> terms) : terms_(normalize(std::move(terms))) {}

bool LaurentPoly::contains(const Monomial& m) const {
  return std::binary_search(terms_.begin(), terms_.end(), m);
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  std::vector<Monomial> merged;
  merged.reserve(terms_.size() + o.terms_.size());
  std::set_symmetric_difference(terms_.begin(), terms_.end(),
                                o.terms_.begin(), o.terms_.end(),
                                std::back_inserter(merged));
  LaurentPoly r;
  r.terms_ = std::move(merged);
  return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  std::vector<Monomial> prod;
  prod.reserve(terms_.size() * o.terms_.size());
  for (const Monomial& a : terms_)
    for (const Monomial& b : o.terms_)
      prod.push_back(Monomial{a.ex + b.ex, a.ey + b.ey});
  return LaurentPoly(std::move(prod));
}

Monomial LaurentPoly::min_exponents() const {
  Monomial m{0, 0};
  bool first = true;
  for (const Monomial& t : terms_) {
    if (first) {
      m = t;
      first = false;
    } else {
      m.ex = std::min(m.ex, t.ex);
      m.ey = std::min(m.ey, t.ey);
    }
  }
  return m;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first_term = true;
  for (const Monomial& t : terms_) {
    if (!first_term) out += "+";
    first_term = false;
    if (t.ex == 0 && t.ey == 0) {
      out += "1";
      continue;
    }
    bool need_star = false;
    if (t.ex != 0) {
      out += "x";
      if (t.ex != 1) out += "^" + std::to_string(t.ex);
      need_star = true;
    }
    if (t.ey != 0) {
      if (need_star) out += "*";
      out += "y";
      if (t.ey != 1) out += "^" + std::to_string(t.ey);
    }
  }
  return out;
}

LaurentPoly antipode(const LaurentPoly& p) {
  std::vector<Monomial> terms;
  terms.reserve(p.terms().size());
  for (const Monomial& t : p.terms()) terms.push_back(Monomial{-t.ex, -t.ey});
  return LaurentPoly(std::move(terms));
}

namespace {

struct Parser {
  const std::string& s;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool at_end() {
    skip_ws();
    return pos >= s.size();
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }

  int parse_signed_int() {
    skip_ws();
    std::size_t start = pos;
    bool neg = false;
    if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) {
      neg = s[pos] == '-';
      ++pos;
    }
    if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
      throw ParseError("expected integer exponent", pos);
    long long v = 0;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      v = v * 10 + (s[pos] - '0');
      if (v > 1000000) throw ParseError("exponent out of range", start);
      ++pos;
    }
    if (pos < s.size() && s[pos] == '.')
      throw ParseError("non-integer exponent", pos);
    return int(neg ? -v : v);
  }

  Monomial parse_factor() {
    skip_ws();
    if (pos >= s.size()) throw ParseError("expected factor", pos);
    char c = s[pos];
    if (c == '1') {
      ++pos;
      return Monomial{0, 0};
    }
    if (c != 'x' && c != 'y')
      throw ParseError("expected '1', 'x' or 'y'", pos);
    ++pos;
    int e = 1;
    skip_ws();
    if (pos < s.size() && s[pos] == '^') {
      ++pos;
      e = parse_signed_int();
    }
    return c == 'x' ? Monomial{e, 0} : Monomial{0, e};
  }

  Monomial parse_term() {
    Monomial m = parse_factor();
    while (peek() == '*') {
      ++pos;  // consume '*'
      Monomial f = parse_factor();
      m.ex += f.ex;
      m.ey += f.ey;
    }
    return m;
  }

  LaurentPoly parse() {
    std::vector<Monomial> terms;
    terms.push_back(parse_term());
    while (peek() == '+') {
      ++pos;
      terms.push_back(parse_term());
    }
    if (!at_end()) throw ParseError("unexpected character", pos);
    return LaurentPoly(std::move(terms));
  }
};

}  // namespace

LaurentPoly parse_poly(const std::string& text) {
  Parser p{text};
  return p.parse();
}

}  // namespace sdbb
