#pragma once

#include <span>
#include <vector>

#include "rqcs/bit_matrix.hpp"
#include "rqcs/field.hpp"
#include "rqcs/subspace.hpp"

namespace rqcs {

class RandomStream;

// Vector over F_{2^m} of fixed length n.  All coordinates share one field.
class RankVector {
 public:
  RankVector() = default;
  RankVector(const Field& field, size_t n);
  RankVector(const Field& field, std::vector<FieldElement> coords);

  const Field& field() const { return *field_; }
  size_t size() const { return coords_.size(); }
  const FieldElement& operator[](size_t i) const { return coords_[i]; }
  FieldElement& operator[](size_t i) { return coords_[i]; }
  std::span<const FieldElement> coords() const { return coords_; }

  RankVector operator+(const RankVector& o) const;
  bool operator==(const RankVector& o) const;
  bool operator!=(const RankVector& o) const { return !(*this == o); }
  bool is_zero() const;

 private:
  const Field* field_ = nullptr;
  std::vector<FieldElement> coords_;
};

// m x n matrix over F_2 whose column j holds the coefficients of v_j.
BitMatrix unfold(const RankVector& v);
RankVector fold(const Field& field, const BitMatrix& m);

// Rank weight: F_2 rank of unfold(v); equals dim(support(v)).
size_t rank_weight(const RankVector& v);

// F_2-span of the coordinates.
Subspace support(const RankVector& v);

// v = e_hat * E with e_hat the canonical support basis and E in F_2^{w x n}
// of full row rank w (coordinates of each v_j over the basis).
struct SupportDecomposition {
  std::vector<FieldElement> basis;  // length w
  BitMatrix coords;                 // w x n
};

// Throws std::invalid_argument on the zero vector.
SupportDecomposition support_decompose(const RankVector& v);

// Sum_i coords[i][j] * basis[i] per coordinate j.
RankVector recompose(const Field& field, std::span<const FieldElement> basis,
                     const BitMatrix& coords, size_t n);

// Uniform vector of exact rank weight w (rejection sampling on both the
// support basis and the coordinate matrix).  Requires 0 <= w <= min(m, n).
RankVector sample_rank_vector(const Field& field, size_t n, size_t w,
                              RandomStream& rng);

// n independent uniform field elements.
RankVector sample_uniform_vector(const Field& field, size_t n, RandomStream& rng);

}  // namespace rqcs
