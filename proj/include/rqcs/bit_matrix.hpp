#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace rqcs {

class RandomStream;

// Dense vector over F_2, bit-packed into 64-bit words.
class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(size_t size) : size_(size), w_((size + 63) / 64, 0) {}

  size_t size() const { return size_; }
  bool get(size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1; }
  void set(size_t i, bool v) {
    const uint64_t bit = uint64_t{1} << (i & 63);
    if (v)
      w_[i >> 6] |= bit;
    else
      w_[i >> 6] &= ~bit;
  }
  void flip(size_t i) { w_[i >> 6] ^= uint64_t{1} << (i & 63); }
  bool is_zero() const;
  size_t popcount() const;

  BitVector& operator^=(const BitVector& o);
  bool operator==(const BitVector& o) const = default;

  std::span<const uint64_t> words() const { return w_; }

 private:
  size_t size_ = 0;
  std::vector<uint64_t> w_;
};

// Dense row-major matrix over F_2, rows bit-packed.
class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(size_t rows, size_t cols)
      : rows_(rows), cols_(cols), stride_((cols + 63) / 64), w_(rows * stride_, 0) {}

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }

  bool get(size_t r, size_t c) const {
    return (w_[r * stride_ + (c >> 6)] >> (c & 63)) & 1;
  }
  void set(size_t r, size_t c, bool v) {
    const uint64_t bit = uint64_t{1} << (c & 63);
    if (v)
      w_[r * stride_ + (c >> 6)] |= bit;
    else
      w_[r * stride_ + (c >> 6)] &= ~bit;
  }

  std::span<uint64_t> row_words(size_t r) { return {w_.data() + r * stride_, stride_}; }
  std::span<const uint64_t> row_words(size_t r) const {
    return {w_.data() + r * stride_, stride_};
  }

  void xor_row_into(size_t src, size_t dst);  // row dst ^= row src
  void swap_rows(size_t a, size_t b);
  // Column index of the first set bit in row r, or -1 if the row is zero.
  int leading_bit(size_t r) const;

  BitVector row(size_t r) const;
  void set_row(size_t r, const BitVector& v);

  BitMatrix transposed() const;
  BitVector mul(const BitVector& x) const;  // this * x, x.size() == cols

  bool operator==(const BitMatrix& o) const = default;

  static BitMatrix identity(size_t n);
  static BitMatrix random(size_t rows, size_t cols, RandomStream& rng);

 private:
  size_t rows_ = 0, cols_ = 0, stride_ = 0;
  std::vector<uint64_t> w_;
};

// Reduced row echelon form: the first `rank` rows of `mat` are the canonical
// reduced basis (pivot columns strictly increasing, each pivot the only set
// bit in its column among basis rows), remaining rows zero.
struct Rref {
  BitMatrix mat;
  std::vector<size_t> pivot_cols;  // ascending, size == rank
  size_t rank = 0;
};

Rref rref(BitMatrix m);

size_t rank(const BitMatrix& m);

// Full solution set of A x = b.
struct LinearSolution {
  BitVector particular;  // one solution
  BitMatrix kernel;      // rows span the null space of A
};

// nullopt when the system is inconsistent.
std::optional<LinearSolution> solve(const BitMatrix& a, const BitVector& b);

}  // namespace rqcs
