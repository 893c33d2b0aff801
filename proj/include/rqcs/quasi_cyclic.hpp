#pragma once

#include <utility>

#include "rqcs/rank_metric.hpp"

namespace rqcs {

// Cyclic convolution over F_{2^m}: (a . b)_k = sum_{i+j = k mod n} a_i b_j.
// Commutative; a . e_0 = a (e_0 = (1, 0, ..., 0)).
RankVector rot_product(const RankVector& a, const RankVector& b);

// Circulant matrix of b as an n x n array of field elements, first column b:
// rot(b)[r][c] = b_{(r - c) mod n}, returned row-by-row.  a . b equals the
// vector-matrix product a * rot(b)^T.
std::vector<RankVector> rot(const RankVector& b);

// (a . c, b . c): one step of multiplying the stacked pair (a, b) by a
// circulant, used by both signing and verification.
std::pair<RankVector, RankVector> pair_product(const RankVector& a,
                                               const RankVector& b,
                                               const RankVector& c);

}  // namespace rqcs
