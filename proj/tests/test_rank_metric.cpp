#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "oracle_helpers.hpp"
#include "rqcs/rank_metric.hpp"
#include "rqcs/xof.hpp"

using namespace rqcs;

TEST_CASE("unfold lays coordinates out as columns; fold undoes it") {
  const Field& f = Field::standard(3);
  RankVector v(f, 2);
  v[0] = f.one();
  v[1] = f.monomial(1);
  const BitMatrix m = unfold(v);
  CHECK(m.rows() == 3);
  CHECK(m.cols() == 2);
  CHECK(m.get(0, 0));
  CHECK(m.get(1, 1));
  CHECK(m.get(0, 1) == false);
  CHECK(fold(f, m) == v);

  const Field& f10 = Field::standard(10);
  RandomStream rng(std::string("fold"), "test");
  for (int i = 0; i < 500; ++i) {
    const RankVector r = sample_uniform_vector(f10, 7, rng);
    CHECK(fold(f10, unfold(r)) == r);
  }
  CHECK(unfold(RankVector(f10, 4)) == BitMatrix(10, 4));
}

TEST_CASE("rank weight equals brute-force span dimension") {
  const Field& f = Field::standard(10);
  RandomStream rng(std::string("rank"), "test");
  CHECK(rank_weight(RankVector(f, 7)) == 0);
  for (int i = 0; i < 1000; ++i) {
    const RankVector v = sample_uniform_vector(f, 7, rng);
    const auto span = oracle::span_of(v);
    CHECK(rank_weight(v) == oracle::rank_from_span_size(span.size()));
    CHECK(rank_weight(v) == support(v).dim());
  }
  // A constant nonzero vector has rank 1.
  RankVector c(f, 5);
  for (size_t j = 0; j < 5; ++j) c[j] = f.monomial(3);
  CHECK(rank_weight(c) == 1);
}

TEST_CASE("support decomposition round trips and is canonical") {
  const Field& f = Field::standard(10);
  RandomStream rng(std::string("decompose"), "test");

  // Frozen single-basis case: v = (c, 0, c).
  const FieldElement c = f.monomial(4) + f.one();
  RankVector v(f, 3);
  v[0] = c;
  v[2] = c;
  const SupportDecomposition d = support_decompose(v);
  REQUIRE(d.basis.size() == 1);
  CHECK(d.basis[0] == c);
  CHECK(d.coords.get(0, 0));
  CHECK_FALSE(d.coords.get(0, 1));
  CHECK(d.coords.get(0, 2));
  CHECK(recompose(f, d.basis, d.coords, 3) == v);

  CHECK_THROWS_AS(support_decompose(RankVector(f, 3)), std::invalid_argument);

  for (int i = 0; i < 500; ++i) {
    const size_t w = 1 + rng.below(4);
    const RankVector r = sample_rank_vector(f, 7, w, rng);
    const SupportDecomposition dd = support_decompose(r);
    CHECK(dd.basis.size() == w);
    CHECK(rank(dd.coords) == w);
    CHECK(recompose(f, dd.basis, dd.coords, 7) == r);
    // The basis spans exactly the support.
    const Subspace s = support(r);
    for (const auto& b : dd.basis) CHECK(s.contains(b));
    CHECK(Subspace::from_generators(f, dd.basis) == s);
  }
}

TEST_CASE("exact-rank sampling hits the requested weight every time") {
  const Field& f = Field::standard(10);
  RandomStream rng(std::string("exact-rank"), "test");
  for (int i = 0; i < 1000; ++i) {
    const size_t w = rng.below(4);
    const RankVector v = sample_rank_vector(f, 7, w, rng);
    CHECK(rank_weight(v) == w);
    CHECK(v.size() == 7);
  }
  CHECK(sample_rank_vector(f, 7, 0, rng).is_zero());
  CHECK(rank_weight(sample_rank_vector(f, 7, 7, rng)) == 7);       // min(m, n) = 7
  CHECK_THROWS_AS(sample_rank_vector(f, 7, 8, rng), std::invalid_argument);
  CHECK_THROWS_AS(sample_rank_vector(f, 12, 11, rng), std::invalid_argument);
}

TEST_CASE("sampling is deterministic in the seed and domain") {
  const Field& f = Field::standard(12);
  RandomStream a(std::string("seed-1"), "domain-a");
  RandomStream b(std::string("seed-1"), "domain-a");
  RandomStream c(std::string("seed-1"), "domain-b");
  const RankVector va = sample_rank_vector(f, 10, 3, a);
  const RankVector vb = sample_rank_vector(f, 10, 3, b);
  const RankVector vc = sample_rank_vector(f, 10, 3, c);
  CHECK(va == vb);
  CHECK(va != vc);
}

TEST_CASE("rank weight is invariant under permutation and scaling") {
  const Field& f = Field::standard(10);
  RandomStream rng(std::string("invariance"), "test");
  for (int i = 0; i < 300; ++i) {
    const RankVector v = sample_rank_vector(f, 8, 1 + rng.below(5), rng);

    std::vector<FieldElement> shuffled(v.coords().begin(), v.coords().end());
    for (size_t j = shuffled.size(); j > 1; --j)
      std::swap(shuffled[j - 1], shuffled[rng.below(j)]);
    CHECK(rank_weight(RankVector(f, shuffled)) == rank_weight(v));

    FieldElement gamma = f.sample(rng);
    while (gamma.is_zero()) gamma = f.sample(rng);
    std::vector<FieldElement> scaled;
    for (size_t j = 0; j < v.size(); ++j) scaled.push_back(v[j] * gamma);
    CHECK(rank_weight(RankVector(f, scaled)) == rank_weight(v));

    const RankVector u = sample_rank_vector(f, 8, 1 + rng.below(5), rng);
    CHECK(rank_weight(u + v) <= rank_weight(u) + rank_weight(v));
  }
}
