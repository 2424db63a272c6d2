#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace gmbqc {

// Dense bit vector over GF(2), packed into 64-bit words.
class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(std::size_t n) : n_(n), words_((n + 63) / 64, 0) {}

  std::size_t size() const { return n_; }

  bool get(std::size_t i) const {
    return (words_[i >> 6] >> (i & 63)) & 1u;
  }
  void set(std::size_t i, bool b) {
    if (b) {
      words_[i >> 6] |= uint64_t(1) << (i & 63);
    } else {
      words_[i >> 6] &= ~(uint64_t(1) << (i & 63));
    }
  }
  void flip(std::size_t i) { words_[i >> 6] ^= uint64_t(1) << (i & 63); }

  BitVector& operator^=(const BitVector& o);
  friend BitVector operator^(BitVector a, const BitVector& b) {
    a ^= b;
    return a;
  }

  // Parity of the AND, i.e. the GF(2) inner product.
  bool dot(const BitVector& o) const;
  std::size_t popcount() const;
  bool is_zero() const;
  // Index of the first set bit, or npos.
  std::size_t first_set() const;

  bool operator==(const BitVector& o) const {
    return n_ == o.n_ && words_ == o.words_;
  }
  bool operator<(const BitVector& o) const;  // lexicographic on bits

  std::string to_string() const;  // "0110..." for debugging and reports

 private:
  std::size_t n_ = 0;
  std::vector<uint64_t> words_;
};

// Dense GF(2) matrix, row-major.
class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows, BitVector(cols)) {}

  static BitMatrix identity(std::size_t n);
  static BitMatrix from_rows(std::vector<BitVector> rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  bool get(std::size_t r, std::size_t c) const { return data_[r].get(c); }
  void set(std::size_t r, std::size_t c, bool b) { data_[r].set(c, b); }
  const BitVector& row(std::size_t r) const { return data_[r]; }
  BitVector& row(std::size_t r) { return data_[r]; }
  void append_row(const BitVector& v);

  BitVector mul(const BitVector& x) const;  // M * x
  BitMatrix mul(const BitMatrix& o) const;  // M * O
  BitMatrix transposed() const;
  BitMatrix operator^(const BitMatrix& o) const;

  std::size_t rank() const;

  // Basis of {x : M x = 0}. Gaussian elimination with leftmost pivots;
  // basis vectors are emitted in increasing free-column order.
  std::vector<BitVector> kernel() const;

  // Solution set of M x = b as particular + span(kernel), or nullopt if
  // inconsistent. Throws on dimension mismatch.
  struct AffineSolution {
    BitVector particular;
    std::vector<BitVector> kernel_basis;
  };
  std::optional<AffineSolution> solve_affine(const BitVector& b) const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<BitVector> data_;
};

// Reduce a set of vectors to an RREF basis (deterministic, leftmost pivots).
std::vector<BitVector> rref_basis(std::vector<BitVector> vecs);

// Express v in the span of an RREF basis; nullopt if not in the span.
std::optional<BitVector> span_coordinates(const std::vector<BitVector>& basis,
                                          const BitVector& v);

}  // namespace gmbqc
