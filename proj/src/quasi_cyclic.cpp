#include "rqcs/quasi_cyclic.hpp"

namespace rqcs {

RankVector rot_product(const RankVector& a, const RankVector& b) {
  if (&a.field() != &b.field() || a.size() != b.size())
    throw FieldError("rot product of incompatible vectors");
  const size_t n = a.size();
  RankVector c(a.field(), n);
  for (size_t i = 0; i < n; ++i) {
    if (a[i].is_zero()) continue;
    for (size_t j = 0; j < n; ++j) {
      if (b[j].is_zero()) continue;
      size_t k = i + j;
      if (k >= n) k -= n;
      c[k] += a[i] * b[j];
    }
  }
  return c;
}

std::vector<RankVector> rot(const RankVector& b) {
  const size_t n = b.size();
  std::vector<RankVector> rows;
  rows.reserve(n);
  for (size_t r = 0; r < n; ++r) {
    RankVector row(b.field(), n);
    for (size_t c = 0; c < n; ++c) row[c] = b[(r + n - c) % n];
    rows.push_back(std::move(row));
  }
  return rows;
}

std::pair<RankVector, RankVector> pair_product(const RankVector& a,
                                               const RankVector& b,
                                               const RankVector& c) {
  return {rot_product(a, c), rot_product(b, c)};
}

}  // namespace rqcs
