#include "sdbb/bitmat.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace sdbb {

std::size_t BitVec::weight() const {
  std::size_t w = 0;
  for (std::uint64_t x : words_) w += std::popcount(x);
  return w;
}

bool BitVec::is_zero() const {
  for (std::uint64_t x : words_) if (x) return false;
  return true;
}

bool BitVec::dot(const BitVec& a, const BitVec& b) {
  std::uint64_t acc = 0;
  std::size_t nw = std::min(a.words_.size(), b.words_.size());
  for (std::size_t w = 0; w < nw; ++w) acc ^= a.words_[w] & b.words_[w];
  return std::popcount(acc) & 1;
}

std::string BitVec::to_hex() const {
  static const char* digits = "0123456789abcdef";
  std::size_t ndig = (nbits_ + 3) / 4;
  std::vector<int> nib(ndig, 0);
  for (std::size_t c = 0; c < nbits_; ++c)
    if (get(c)) nib[c / 4] |= 1 << (3 - int(c % 4));  // column 0 = MSB of its nibble
  std::string out(ndig, '0');
  for (std::size_t i = 0; i < ndig; ++i) out[i] = digits[nib[i]];
  return out;
}

BitVec BitVec::from_hex(const std::string& hex, std::size_t nbits) {
  BitVec v(nbits);
  for (std::size_t dig = 0; dig < hex.size(); ++dig) {
    char ch = hex[dig];
    int val;
    if (ch >= '0' && ch <= '9') val = ch - '0';
    else if (ch >= 'a' && ch <= 'f') val = ch - 'a' + 10;
    else if (ch >= 'A' && ch <= 'F') val = ch - 'A' + 10;
    else throw std::invalid_argument("bad hex digit");
    for (int bit = 0; bit < 4; ++bit) {
      std::size_t c = dig * 4 + std::size_t(3 - bit);
      if ((val >> bit) & 1) {
        if (c >= nbits) throw std::invalid_argument("hex string sets padding bits");
        v.set(c, true);
      }
    }
  }
  return v;
}

void BitMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  std::uint64_t* ra = row(a);
  std::uint64_t* rb = row(b);
  for (std::size_t w = 0; w < words_; ++w) std::swap(ra[w], rb[w]);
}

void BitMatrix::append_row(const BitVec& v) {
  if (rows_ == 0 && cols_ == 0) {
    cols_ = v.size();
    words_ = cols_ ? (cols_ + 63) / 64 : 1;
  }
  if (v.size() != cols_) throw std::invalid_argument("append_row: size mismatch");
  data_.resize((rows_ + 1) * words_, 0);
  std::copy(v.words().begin(), v.words().end(), data_.begin() + rows_ * words_);
  ++rows_;
}

BitVec BitMatrix::get_row(std::size_t r) const {
  BitVec v(cols_);
  std::copy(row(r), row(r) + words_, v.words().begin());
  return v;
}

void BitMatrix::set_row(std::size_t r, const BitVec& v) {
  if (v.size() != cols_) throw std::invalid_argument("set_row: size mismatch");
  std::copy(v.words().begin(), v.words().end(), row(r));
}

std::size_t BitMatrix::row_weight(std::size_t r) const {
  std::size_t w = 0;
  const std::uint64_t* p = row(r);
  for (std::size_t i = 0; i < words_; ++i) w += std::popcount(p[i]);
  return w;
}

std::vector<std::size_t> BitMatrix::rref() {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
    std::size_t sel = r;
    while (sel < rows_ && !get(sel, c)) ++sel;
    if (sel == rows_) continue;
    swap_rows(sel, r);
    for (std::size_t i = 0; i < rows_; ++i)
      if (i != r && get(i, c)) xor_row_into(r, i);
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::size_t BitMatrix::rank() const {
  BitMatrix copy = *this;
  return copy.rref().size();
}

BitMatrix BitMatrix::kernel() const {
  BitMatrix red = *this;
  std::vector<std::size_t> pivots = red.rref();
  std::vector<bool> is_pivot(cols_, false);
  for (std::size_t p : pivots) is_pivot[p] = true;

  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < cols_; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);

  BitMatrix ker(free_cols.size(), cols_);
  for (std::size_t i = 0; i < free_cols.size(); ++i) {
    std::size_t fc = free_cols[i];
    ker.set(i, fc, true);
    // pivot row p has leading 1 at pivots[p]; solve that coordinate
    for (std::size_t p = 0; p < pivots.size(); ++p)
      if (red.get(p, fc)) ker.set(i, pivots[p], true);
  }
  return ker;
}

BitMatrix BitMatrix::mul_transpose(const BitMatrix& a, const BitMatrix& b) {
  if (a.cols_ != b.cols_) throw std::invalid_argument("mul_transpose: col mismatch");
  BitMatrix out(a.rows_, b.rows_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    const std::uint64_t* ra = a.row(i);
    for (std::size_t j = 0; j < b.rows_; ++j) {
      const std::uint64_t* rb = b.row(j);
      std::uint64_t acc = 0;
      for (std::size_t w = 0; w < a.words_; ++w) acc ^= ra[w] & rb[w];
      if (std::popcount(acc) & 1) out.set(i, j, true);
    }
  }
  return out;
}

BitMatrix BitMatrix::inverse() const {
  if (rows_ != cols_) throw std::invalid_argument("inverse: not square");
  std::size_t n = rows_;
  BitMatrix work(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c)
      if (get(r, c)) work.set(r, c, true);
    work.set(r, n + r, true);
  }
  std::vector<std::size_t> pivots = work.rref();
  if (pivots.size() != n || pivots[n - 1] != n - 1)
    throw std::invalid_argument("inverse: matrix is singular");
  BitMatrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      if (work.get(r, n + c)) inv.set(r, c, true);
  return inv;
}

bool BitMatrix::is_zero() const {
  for (std::uint64_t x : data_) if (x) return false;
  return true;
}

bool BitMatrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (get(r, c) != (r == c)) return false;
  return true;
}

std::vector<std::string> BitMatrix::to_hex_rows() const {
  std::vector<std::string> out;
  out.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out.push_back(get_row(r).to_hex());
  return out;
}

BitVec reduce_against_rref(const BitMatrix& rref, const std::vector<std::size_t>& pivots,
                           BitVec v) {
  for (std::size_t p = 0; p < pivots.size(); ++p) {
    if (v.get(pivots[p])) {
      const std::uint64_t* r = rref.row(p);
      for (std::size_t w = 0; w < rref.words_per_row(); ++w) v.words()[w] ^= r[w];
    }
  }
  return v;
}

bool in_rowspace(const BitMatrix& rref, const std::vector<std::size_t>& pivots,
                 const BitVec& v) {
  return reduce_against_rref(rref, pivots, v).is_zero();
}

}  // namespace sdbb
