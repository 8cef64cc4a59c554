#pragma once

#include <cstdint>
#include <cstddef>
#include <string>
#include <vector>

namespace sdbb {

// Dense bit-packed vector over GF(2). Bit c lives in word c/64 at bit c%64.
class BitVec {
 public:
  BitVec() = default;
  explicit BitVec(std::size_t nbits)
      : nbits_(nbits), words_((nbits + 63) / 64, 0) {}

  std::size_t size() const { return nbits_; }
  bool get(std::size_t c) const {
    return (words_[c >> 6] >> (c & 63)) & 1u;
  }
  void set(std::size_t c, bool v) {
    std::uint64_t m = std::uint64_t(1) << (c & 63);
    if (v) words_[c >> 6] |= m; else words_[c >> 6] &= ~m;
  }
  void flip(std::size_t c) { words_[c >> 6] ^= std::uint64_t(1) << (c & 63); }

  void operator^=(const BitVec& o) {
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= o.words_[w];
  }
  std::size_t weight() const;
  bool is_zero() const;
  bool operator==(const BitVec& o) const {
    return nbits_ == o.nbits_ && words_ == o.words_;
  }

  // Parity of the overlap |a AND b|; the GF(2) inner product.
  static bool dot(const BitVec& a, const BitVec& b);

  const std::vector<std::uint64_t>& words() const { return words_; }
  std::vector<std::uint64_t>& words() { return words_; }

  // Hex encoding with column 0 as the most significant bit of the first
  // digit; trailing bits of the last nibble are zero padding.
  std::string to_hex() const;
  static BitVec from_hex(const std::string& hex, std::size_t nbits);

 private:
  std::size_t nbits_ = 0;
  std::vector<std::uint64_t> words_;
};

// Row-major bit-packed binary matrix with the row operations needed for
// GF(2) Gaussian elimination.
class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), words_(cols ? (cols + 63) / 64 : 1),
        data_(rows * words_, 0) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t words_per_row() const { return words_; }

  bool get(std::size_t r, std::size_t c) const {
    return (data_[r * words_ + (c >> 6)] >> (c & 63)) & 1u;
  }
  void set(std::size_t r, std::size_t c, bool v) {
    std::uint64_t m = std::uint64_t(1) << (c & 63);
    if (v) data_[r * words_ + (c >> 6)] |= m;
    else data_[r * words_ + (c >> 6)] &= ~m;
  }
  void flip(std::size_t r, std::size_t c) {
    data_[r * words_ + (c >> 6)] ^= std::uint64_t(1) << (c & 63);
  }

  const std::uint64_t* row(std::size_t r) const { return &data_[r * words_]; }
  std::uint64_t* row(std::size_t r) { return &data_[r * words_]; }

  void xor_row_into(std::size_t src, std::size_t dst) {
    const std::uint64_t* s = row(src);
    std::uint64_t* d = row(dst);
    for (std::size_t w = 0; w < words_; ++w) d[w] ^= s[w];
  }
  void swap_rows(std::size_t a, std::size_t b);
  void append_row(const BitVec& v);

  BitVec get_row(std::size_t r) const;
  void set_row(std::size_t r, const BitVec& v);
  std::size_t row_weight(std::size_t r) const;

  bool operator==(const BitMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }

  // In-place reduced row echelon form; returns the pivot column of each of
  // the leading rank(rows) rows.
  std::vector<std::size_t> rref();
  std::size_t rank() const;

  // Basis of the right null space, one kernel vector per row.
  BitMatrix kernel() const;

  // A * B^T: entry (i,j) is the GF(2) inner product of row i of A with
  // row j of B.
  static BitMatrix mul_transpose(const BitMatrix& a, const BitMatrix& b);

  // Inverse of a square invertible matrix; throws std::invalid_argument if
  // singular.
  BitMatrix inverse() const;

  bool is_zero() const;
  bool is_identity() const;

  std::vector<std::string> to_hex_rows() const;

 private:
  std::size_t rows_ = 0, cols_ = 0, words_ = 1;
  std::vector<std::uint64_t> data_;
};

// Reduces v against rows of a matrix already in RREF (with the given pivot
// columns); the remainder is v modulo the row space.
BitVec reduce_against_rref(const BitMatrix& rref, const std::vector<std::size_t>& pivots,
                           BitVec v);

// Membership test in the row space of an RREF matrix.
bool in_rowspace(const BitMatrix& rref, const std::vector<std::size_t>& pivots,
                 const BitVec& v);

}  // namespace sdbb
