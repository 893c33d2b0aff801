#include "rqcs/subspace.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace rqcs {

namespace {

// Copy element coefficient bits into matrix row r (cols = field degree).
void write_element_row(BitMatrix& m, size_t r, const FieldElement& e, size_t col0 = 0) {
  for (int w = 0; w < kElementWords; ++w) {
    uint64_t word = e.limbs()[w];
    while (word) {
      const int k = std::countr_zero(word);
      word &= word - 1;
      m.set(r, col0 + w * 64 + k, true);
    }
  }
}

FieldElement element_from_row(const Field& f, const BitMatrix& m, size_t r,
                              size_t col0 = 0) {
  std::array<uint64_t, kElementWords> limbs{};
  for (int i = 0; i < f.degree(); ++i)
    if (m.get(r, col0 + i)) limbs[i >> 6] |= uint64_t{1} << (i & 63);
  return f.from_limbs(limbs);
}

}  // namespace

Subspace::Subspace(const Field& field)
    : field_(&field), basis_(0, field.degree()) {}

Subspace Subspace::from_generators(const Field& field,
                                   std::span<const FieldElement> gens) {
  BitMatrix m(gens.size(), field.degree());
  for (size_t i = 0; i < gens.size(); ++i) {
    if (&gens[i].field() != &field)
      throw FieldError("generator from a different field");
    write_element_row(m, i, gens[i]);
  }
  Rref r = rref(std::move(m));
  Subspace s(field);
  s.basis_ = BitMatrix(r.rank, field.degree());
  for (size_t i = 0; i < r.rank; ++i) {
    auto dst = s.basis_.row_words(i);
    auto src = r.mat.row_words(i);
    std::copy(src.begin(), src.end(), dst.begin());
  }
  s.pivot_cols_ = std::move(r.pivot_cols);
  return s;
}

std::vector<FieldElement> Subspace::basis() const {
  std::vector<FieldElement> out;
  out.reserve(basis_.rows());
  for (size_t i = 0; i < basis_.rows(); ++i)
    out.push_back(element_from_row(*field_, basis_, i));
  return out;
}

bool Subspace::contains(const FieldElement& x) const {
  if (&x.field() != field_) throw FieldError("membership test across fields");
  auto limbs = x.limbs();
  for (size_t p = 0; p < basis_.rows(); ++p) {
    const size_t c = pivot_cols_[p];
    if ((limbs[c >> 6] >> (c & 63)) & 1) {
      auto row = basis_.row_words(p);
      for (size_t w = 0; w < row.size() && w < limbs.size(); ++w) limbs[w] ^= row[w];
    }
  }
  for (uint64_t w : limbs)
    if (w) return false;
  return true;
}

bool Subspace::contains(const Subspace& other) const {
  if (field_ != other.field_) throw FieldError("membership test across fields");
  for (const FieldElement& e : other.basis())
    if (!contains(e)) return false;
  return true;
}

Subspace Subspace::scaled(const FieldElement& gamma) const {
  if (&gamma.field() != field_) throw FieldError("scale by element of another field");
  if (gamma.is_zero()) throw FieldError("scaling a subspace by zero");
  std::vector<FieldElement> gens = basis();
  for (auto& g : gens) g = g * gamma;
  return from_generators(*field_, gens);
}

// Zassenhaus: row-reduce [U | U; V | 0].  Rows whose pivot lands in the
// right half have zero left half, and their right halves span U ∩ V.
Subspace intersect(const Subspace& u, const Subspace& v) {
  if (u.field_ != v.field_) throw FieldError("intersecting subspaces of different fields");
  const Field& f = *u.field_;
  const size_t m = f.degree();
  BitMatrix z(u.basis_.rows() + v.basis_.rows(), 2 * m);
  const auto ub = u.basis();
  const auto vb = v.basis();
  for (size_t i = 0; i < ub.size(); ++i) {
    write_element_row(z, i, ub[i], 0);
    write_element_row(z, i, ub[i], m);
  }
  for (size_t i = 0; i < vb.size(); ++i)
    write_element_row(z, ub.size() + i, vb[i], 0);
  Rref r = rref(std::move(z));
  std::vector<FieldElement> gens;
  for (size_t p = 0; p < r.rank; ++p)
    if (r.pivot_cols[p] >= m)
      gens.push_back(element_from_row(f, r.mat, p, m));
  return Subspace::from_generators(f, gens);
}

Subspace sum(const Subspace& u, const Subspace& v) {
  if (u.field_ != v.field_) throw FieldError("summing subspaces of different fields");
  std::vector<FieldElement> gens = u.basis();
  const auto vb = v.basis();
  gens.insert(gens.end(), vb.begin(), vb.end());
  return Subspace::from_generators(*u.field_, gens);
}

}  // namespace rqcs
