#include "rqcs/bit_matrix.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <numeric>
#include <stdexcept>

#include "rqcs/xof.hpp"

namespace rqcs {

bool BitVector::is_zero() const {
  for (uint64_t w : w_)
    if (w) return false;
  return true;
}

size_t BitVector::popcount() const {
  size_t n = 0;
  for (uint64_t w : w_) n += std::popcount(w);
  return n;
}

BitVector& BitVector::operator^=(const BitVector& o) {
  if (size_ != o.size_) throw std::invalid_argument("BitVector size mismatch");
  for (size_t i = 0; i < w_.size(); ++i) w_[i] ^= o.w_[i];
  return *this;
}

void BitMatrix::xor_row_into(size_t src, size_t dst) {
  uint64_t* d = w_.data() + dst * stride_;
  const uint64_t* s = w_.data() + src * stride_;
  for (size_t i = 0; i < stride_; ++i) d[i] ^= s[i];
}

void BitMatrix::swap_rows(size_t a, size_t b) {
  if (a == b) return;
  std::swap_ranges(w_.begin() + a * stride_, w_.begin() + (a + 1) * stride_,
                   w_.begin() + b * stride_);
}

int BitMatrix::leading_bit(size_t r) const {
  const uint64_t* row = w_.data() + r * stride_;
  for (size_t i = 0; i < stride_; ++i)
    if (row[i]) return static_cast<int>(i * 64 + std::countr_zero(row[i]));
  return -1;
}

BitVector BitMatrix::row(size_t r) const {
  BitVector v(cols_);
  for (size_t c = 0; c < cols_; ++c)
    if (get(r, c)) v.set(c, true);
  return v;
}

void BitMatrix::set_row(size_t r, const BitVector& v) {
  if (v.size() != cols_) throw std::invalid_argument("row size mismatch");
  auto src = v.words();
  std::copy(src.begin(), src.end(), w_.begin() + r * stride_);
}

BitMatrix BitMatrix::transposed() const {
  BitMatrix t(cols_, rows_);
  for (size_t r = 0; r < rows_; ++r) {
    const uint64_t* row = w_.data() + r * stride_;
    for (size_t i = 0; i < stride_; ++i) {
      uint64_t w = row[i];
      while (w) {
        const int k = std::countr_zero(w);
        w &= w - 1;
        t.set(i * 64 + k, r, true);
      }
    }
  }
  return t;
}

BitVector BitMatrix::mul(const BitVector& x) const {
  if (x.size() != cols_) throw std::invalid_argument("matrix/vector size mismatch");
  BitVector y(rows_);
  auto xw = x.words();
  for (size_t r = 0; r < rows_; ++r) {
    const uint64_t* row = w_.data() + r * stride_;
    uint64_t acc = 0;
    for (size_t i = 0; i < stride_; ++i) acc ^= row[i] & xw[i];
    y.set(r, std::popcount(acc) & 1);
  }
  return y;
}

BitMatrix BitMatrix::identity(size_t n) {
  BitMatrix m(n, n);
  for (size_t i = 0; i < n; ++i) m.set(i, i, true);
  return m;
}

BitMatrix BitMatrix::random(size_t rows, size_t cols, RandomStream& rng) {
  BitMatrix m(rows, cols);
  const uint64_t mask =
      (cols & 63) ? (uint64_t{1} << (cols & 63)) - 1 : ~uint64_t{0};
  for (size_t r = 0; r < rows; ++r) {
    auto row = m.row_words(r);
    for (auto& w : row) w = rng.u64();
    if (!row.empty()) row.back() &= mask;
  }
  return m;
}

Rref rref(BitMatrix m) {
  const size_t rows = m.rows();
  std::vector<size_t> pivcol;
  size_t np = 0;
  for (size_t r = 0; r < rows; ++r) {
    // Pivot rows stay mutually reduced, so one pass over them reduces row r.
    for (size_t p = 0; p < np; ++p)
      if (m.get(r, pivcol[p])) m.xor_row_into(p, r);
    const int lead = m.leading_bit(r);
    if (lead < 0) continue;
    m.swap_rows(np, r);
    for (size_t p = 0; p < np; ++p)
      if (m.get(p, static_cast<size_t>(lead))) m.xor_row_into(np, p);
    pivcol.push_back(static_cast<size_t>(lead));
    ++np;
  }
  // Canonical order: pivot rows sorted by pivot column.
  for (size_t i = 0; i < np; ++i) {
    size_t best = i;
    for (size_t j = i + 1; j < np; ++j)
      if (pivcol[j] < pivcol[best]) best = j;
    if (best != i) {
      m.swap_rows(i, best);
      std::swap(pivcol[i], pivcol[best]);
    }
  }
  return Rref{std::move(m), std::move(pivcol), np};
}

size_t rank(const BitMatrix& m) { return rref(m).rank; }

std::optional<LinearSolution> solve(const BitMatrix& a, const BitVector& b) {
  const size_t rows = a.rows(), cols = a.cols();
  if (b.size() != rows) throw std::invalid_argument("rhs size mismatch");
  BitMatrix aug(rows, cols + 1);
  for (size_t r = 0; r < rows; ++r) {
    auto dst = aug.row_words(r);
    auto src = a.row_words(r);
    std::copy(src.begin(), src.end(), dst.begin());
    if (b.get(r)) aug.set(r, cols, true);
  }
  Rref red = rref(std::move(aug));
  std::vector<char> is_pivot(cols, 0);
  for (size_t c : red.pivot_cols) {
    if (c == cols) return std::nullopt;  // pivot in the augmented column
    is_pivot[c] = 1;
  }

  LinearSolution sol;
  sol.particular = BitVector(cols);
  for (size_t p = 0; p < red.rank; ++p)
    if (red.mat.get(p, cols)) sol.particular.set(red.pivot_cols[p], true);

  std::vector<size_t> free_cols;
  for (size_t c = 0; c < cols; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  sol.kernel = BitMatrix(free_cols.size(), cols);
  for (size_t k = 0; k < free_cols.size(); ++k) {
    const size_t fc = free_cols[k];
    sol.kernel.set(k, fc, true);
    for (size_t p = 0; p < red.rank; ++p)
      if (red.mat.get(p, fc)) sol.kernel.set(k, red.pivot_cols[p], true);
  }
  return sol;
}

}  // namespace rqcs
