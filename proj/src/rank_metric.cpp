#include "rqcs/rank_metric.hpp"

#include <stdexcept>

#include "rqcs/xof.hpp"

namespace rqcs {

RankVector::RankVector(const Field& field, size_t n)
    : field_(&field), coords_(n, field.zero()) {}

RankVector::RankVector(const Field& field, std::vector<FieldElement> coords)
    : field_(&field), coords_(std::move(coords)) {
  for (const auto& c : coords_)
    if (&c.field() != field_) throw FieldError("coordinate from a different field");
}

RankVector RankVector::operator+(const RankVector& o) const {
  if (field_ != o.field_ || size() != o.size())
    throw FieldError("adding incompatible vectors");
  RankVector r = *this;
  for (size_t i = 0; i < r.coords_.size(); ++i) r.coords_[i] += o.coords_[i];
  return r;
}

bool RankVector::operator==(const RankVector& o) const {
  return field_ == o.field_ && coords_ == o.coords_;
}

bool RankVector::is_zero() const {
  for (const auto& c : coords_)
    if (!c.is_zero()) return false;
  return true;
}

BitMatrix unfold(const RankVector& v) {
  const int m = v.field().degree();
  BitMatrix out(m, v.size());
  for (size_t j = 0; j < v.size(); ++j)
    for (int i = 0; i < m; ++i)
      if (v[j].bit(i)) out.set(i, j, true);
  return out;
}

RankVector fold(const Field& field, const BitMatrix& m) {
  if (m.rows() != static_cast<size_t>(field.degree()))
    throw std::invalid_argument("matrix height must equal the field degree");
  std::vector<FieldElement> coords;
  coords.reserve(m.cols());
  for (size_t j = 0; j < m.cols(); ++j) {
    std::array<uint64_t, kElementWords> limbs{};
    for (size_t i = 0; i < m.rows(); ++i)
      if (m.get(i, j)) limbs[i >> 6] |= uint64_t{1} << (i & 63);
    coords.push_back(field.from_limbs(limbs));
  }
  return RankVector(field, std::move(coords));
}

size_t rank_weight(const RankVector& v) { return support(v).dim(); }

Subspace support(const RankVector& v) {
  return Subspace::from_generators(v.field(), v.coords());
}

SupportDecomposition support_decompose(const RankVector& v) {
  const Subspace s = support(v);
  const size_t w = s.dim();
  if (w == 0) throw std::invalid_argument("zero vector has no support basis");
  SupportDecomposition d{s.basis(), BitMatrix(w, v.size())};
  const auto pivots = s.pivot_cols();
  // The basis is reduced echelon, so the coefficient of basis[i] in v_j is
  // just bit pivots[i] of v_j.
  for (size_t j = 0; j < v.size(); ++j)
    for (size_t i = 0; i < w; ++i)
      if (v[j].bit(static_cast<int>(pivots[i]))) d.coords.set(i, j, true);
  return d;
}

RankVector recompose(const Field& field, std::span<const FieldElement> basis,
                     const BitMatrix& coords, size_t n) {
  if (coords.rows() != basis.size() || coords.cols() != n)
    throw std::invalid_argument("coordinate matrix shape mismatch");
  RankVector v(field, n);
  for (size_t j = 0; j < n; ++j)
    for (size_t i = 0; i < basis.size(); ++i)
      if (coords.get(i, j)) v[j] += basis[i];
  return v;
}

RankVector sample_rank_vector(const Field& field, size_t n, size_t w,
                              RandomStream& rng) {
  const size_t m = static_cast<size_t>(field.degree());
  if (w > m || w > n)
    throw std::invalid_argument("requested rank exceeds min(m, n)");
  if (w == 0) return RankVector(field, n);

  std::vector<FieldElement> basis(w, field.zero());
  for (;;) {
    for (auto& b : basis) b = field.sample(rng);
    if (Subspace::from_generators(field, basis).dim() == w) break;
  }
  for (;;) {
    BitMatrix coords = BitMatrix::random(w, n, rng);
    if (rank(coords) == w) return recompose(field, basis, coords, n);
  }
}

RankVector sample_uniform_vector(const Field& field, size_t n, RandomStream& rng) {
  std::vector<FieldElement> coords;
  coords.reserve(n);
  for (size_t i = 0; i < n; ++i) coords.push_back(field.sample(rng));
  return RankVector(field, std::move(coords));
}

}  // namespace rqcs
