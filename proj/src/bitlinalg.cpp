#include "gmbqc/bitlinalg.hpp"

#include <algorithm>
#include <bit>

#include "gmbqc/errors.hpp"

namespace gmbqc {

BitVector& BitVector::operator^=(const BitVector& o) {
  if (n_ != o.n_) throw InvariantError("BitVector xor: length mismatch");
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= o.words_[i];
  return *this;
}

bool BitVector::dot(const BitVector& o) const {
  if (n_ != o.n_) throw InvariantError("BitVector dot: length mismatch");
  uint64_t acc = 0;
  for (std::size_t i = 0; i < words_.size(); ++i)
    acc ^= words_[i] & o.words_[i];
  return std::popcount(acc) & 1;
}

std::size_t BitVector::popcount() const {
  std::size_t c = 0;
  for (uint64_t w : words_) c += std::popcount(w);
  return c;
}

bool BitVector::is_zero() const {
  for (uint64_t w : words_)
    if (w) return false;
  return true;
}

std::size_t BitVector::first_set() const {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i]) return i * 64 + std::countr_zero(words_[i]);
  return static_cast<std::size_t>(-1);
}

bool BitVector::operator<(const BitVector& o) const {
  if (n_ != o.n_) return n_ < o.n_;
  for (std::size_t i = 0; i < n_; ++i) {
    bool a = get(i), b = o.get(i);
    if (a != b) return b;  // 0 before 1
  }
  return false;
}

std::string BitVector::to_string() const {
  std::string s(n_, '0');
  for (std::size_t i = 0; i < n_; ++i)
    if (get(i)) s[i] = '1';
  return s;
}

BitMatrix BitMatrix::identity(std::size_t n) {
  BitMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
  return m;
}

BitMatrix BitMatrix::from_rows(std::vector<BitVector> rows, std::size_t cols) {
  BitMatrix m;
  m.rows_ = rows.size();
  m.cols_ = cols;
  for (const auto& r : rows)
    if (r.size() != cols) throw InvariantError("BitMatrix: ragged rows");
  m.data_ = std::move(rows);
  return m;
}

void BitMatrix::append_row(const BitVector& v) {
  if (rows_ == 0 && cols_ == 0) cols_ = v.size();
  if (v.size() != cols_) throw InvariantError("BitMatrix: row width mismatch");
  data_.push_back(v);
  ++rows_;
}

BitVector BitMatrix::mul(const BitVector& x) const {
  if (x.size() != cols_) throw InvariantError("BitMatrix mul: size mismatch");
  BitVector y(rows_);
  for (std::size_t r = 0; r < rows_; ++r) y.set(r, data_[r].dot(x));
  return y;
}

BitMatrix BitMatrix::mul(const BitMatrix& o) const {
  if (cols_ != o.rows_) throw InvariantError("BitMatrix mul: size mismatch");
  BitMatrix result(rows_, o.cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t k = 0; k < cols_; ++k)
      if (data_[r].get(k)) result.data_[r] ^= o.data_[k];
  return result;
}

BitMatrix BitMatrix::transposed() const {
  BitMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (get(r, c)) t.set(c, r, true);
  return t;
}

BitMatrix BitMatrix::operator^(const BitMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw InvariantError("BitMatrix xor: shape mismatch");
  BitMatrix m = *this;
  for (std::size_t r = 0; r < rows_; ++r) m.data_[r] ^= o.data_[r];
  return m;
}

namespace {

// Row echelon form in place. Returns pivot column per eliminated row.
std::vector<std::size_t> eliminate(std::vector<BitVector>& rows,
                                   std::size_t cols) {
  std::vector<std::size_t> pivot_cols;
  std::size_t next_row = 0;
  for (std::size_t c = 0; c < cols && next_row < rows.size(); ++c) {
    std::size_t p = next_row;
    while (p < rows.size() && !rows[p].get(c)) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[next_row], rows[p]);
    for (std::size_t r = 0; r < rows.size(); ++r)
      if (r != next_row && rows[r].get(c)) rows[r] ^= rows[next_row];
    pivot_cols.push_back(c);
    ++next_row;
  }
  return pivot_cols;
}

}  // namespace

std::size_t BitMatrix::rank() const {
  auto rows = data_;
  return eliminate(rows, cols_).size();
}

std::vector<BitVector> BitMatrix::kernel() const {
  auto rows = data_;
  auto pivots = eliminate(rows, cols_);
  std::vector<bool> is_pivot(cols_, false);
  for (auto c : pivots) is_pivot[c] = true;

  std::vector<BitVector> basis;
  for (std::size_t f = 0; f < cols_; ++f) {
    if (is_pivot[f]) continue;
    BitVector v(cols_);
    v.set(f, true);
    for (std::size_t r = 0; r < pivots.size(); ++r)
      if (rows[r].get(f)) v.set(pivots[r], true);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<BitMatrix::AffineSolution> BitMatrix::solve_affine(
    const BitVector& b) const {
  if (b.size() != rows_) throw InvariantError("solve_affine: rhs length mismatch");
  // Augment with b as an extra column and eliminate.
  std::vector<BitVector> aug;
  aug.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    BitVector row(cols_ + 1);
    for (std::size_t c = 0; c < cols_; ++c)
      if (get(r, c)) row.set(c, true);
    row.set(cols_, b.get(r));
    aug.push_back(std::move(row));
  }
  auto pivots = eliminate(aug, cols_);
  // Inconsistent iff some remaining row is (0 ... 0 | 1).
  for (std::size_t r = pivots.size(); r < aug.size(); ++r)
    if (aug[r].get(cols_)) return std::nullopt;

  BitVector particular(cols_);
  for (std::size_t r = 0; r < pivots.size(); ++r)
    if (aug[r].get(cols_)) particular.set(pivots[r], true);
  return AffineSolution{std::move(particular), kernel()};
}

std::vector<BitVector> rref_basis(std::vector<BitVector> vecs) {
  if (vecs.empty()) return vecs;
  std::size_t cols = vecs[0].size();
  auto pivots = eliminate(vecs, cols);
  vecs.resize(pivots.size());
  return vecs;
}

std::optional<BitVector> span_coordinates(const std::vector<BitVector>& basis,
                                          const BitVector& v) {
  BitVector coords(basis.size());
  BitVector rem = v;
  // Greedy reduction; relies on basis being in RREF (distinct pivots).
  for (std::size_t i = 0; i < basis.size(); ++i) {
    std::size_t p = basis[i].first_set();
    if (p == static_cast<std::size_t>(-1)) continue;
    if (rem.get(p)) {
      rem ^= basis[i];
      coords.set(i, true);
    }
  }
  if (!rem.is_zero()) return std::nullopt;
  return coords;
}

}  // namespace gmbqc
