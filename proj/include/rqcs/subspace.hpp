#pragma once

#include <span>
#include <vector>

#include "rqcs/bit_matrix.hpp"
#include "rqcs/field.hpp"

namespace rqcs {

// F_2-linear subspace of F_{2^m}, held as the canonical reduced-echelon
// basis of its elements viewed as m-bit vectors.  Two Subspace objects over
// the same field compare equal iff they are the same space.
class Subspace {
 public:
  // The zero subspace.
  explicit Subspace(const Field& field);

  static Subspace from_generators(const Field& field,
                                  std::span<const FieldElement> gens);

  const Field& field() const { return *field_; }
  size_t dim() const { return basis_.rows(); }
  std::vector<FieldElement> basis() const;
  // Pivot coordinate of each basis element, ascending.
  std::span<const size_t> pivot_cols() const { return pivot_cols_; }

  bool contains(const FieldElement& x) const;
  bool contains(const Subspace& other) const;

  // { gamma * u : u in this }; gamma must be nonzero.
  Subspace scaled(const FieldElement& gamma) const;

  friend Subspace intersect(const Subspace& u, const Subspace& v);
  friend Subspace sum(const Subspace& u, const Subspace& v);

  bool operator==(const Subspace& o) const {
    return field_ == o.field_ && basis_ == o.basis_;
  }

 private:
  const Field* field_;
  BitMatrix basis_;  // dim x m, reduced echelon, no zero rows
  std::vector<size_t> pivot_cols_;
};

Subspace intersect(const Subspace& u, const Subspace& v);
Subspace sum(const Subspace& u, const Subspace& v);

}  // namespace rqcs
