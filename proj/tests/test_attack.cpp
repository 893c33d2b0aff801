#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rqcs/attack.hpp"
#include "rqcs/xof.hpp"

using namespace rqcs;

namespace {

std::vector<uint8_t> bytes(const std::string& s) {
  return std::vector<uint8_t>(s.begin(), s.end());
}

// Self-signing oracle over a fixed keypair with deterministic messages.
SignatureSource honest_source(const Params& p, const KeyPair& kp,
                              RandomStream& rng) {
  return [&p, &kp, &rng]() {
    std::array<uint8_t, 16> msg;
    rng.fill(msg);
    return sign(p, kp.sk, kp.pk, msg, rng);
  };
}

// Coefficients of the planted secret over the canonical basis of its own
// support (valid whenever span(alpha) == Supp(v)).
BitMatrix coords_over(const Subspace& space, const RankVector& v) {
  const auto pivots = space.pivot_cols();
  BitMatrix e(space.dim(), v.size());
  for (size_t j = 0; j < v.size(); ++j)
    for (size_t i = 0; i < space.dim(); ++i)
      if (v[j].bit(static_cast<int>(pivots[i]))) e.set(i, j, true);
  return e;
}

}  // namespace

TEST_CASE("single-scalar support recovery is exact") {
  // w = 1, w_g = 1, r = 0: u = x.g with g = gamma e_0 recovers Supp(x) on
  // the nose.
  const Field& f = Field::standard(10);
  const size_t n = 6;
  const FieldElement c = f.monomial(3) + f.one();
  const FieldElement gamma = f.monomial(7);
  RankVector x(f, n), g(f, n);
  x[0] = c;
  x[4] = c;
  g[0] = gamma;
  const RankVector u = rot_product(x, g);
  REQUIRE_FALSE(u.is_zero());
  const Subspace rec = recover_support(u, g);
  CHECK(rec.dim() == 1);
  CHECK(rec == support(x));
  CHECK_THROWS_AS(recover_support(u, RankVector(f, n)), std::invalid_argument);
}

TEST_CASE("honest signatures at deployed parameters expose the supports") {
  const Params p = Params::standard("rqcs-1");
  RandomStream rng(std::string("step1-real"), "test");
  const KeyPair kp = keygen(p, rng);
  const Signature sig = sign(p, kp.sk, kp.pk, bytes("step 1 probe"), rng);
  const Subspace fx = recover_support(sig.u1, sig.g);
  const Subspace fy = recover_support(sig.u2, sig.g);
  CHECK(fx.dim() == 5);
  CHECK(fy.dim() == 5);
  CHECK(fx == support(kp.sk.x));
  CHECK(fy == support(kp.sk.y));
}

TEST_CASE("support recovery always contains the secret support when the "
          "response support is full") {
  // When dim Supp(u1) = w*w_g + w_r the recovered space provably contains
  // Supp(x); smaller response supports can lose it (handled by retries).
  const Params p = Params::custom(12, 10, 2, 2, 2);
  RandomStream rng(std::string("step1-conditional"), "test");
  int full = 0;
  for (int i = 0; i < 300; ++i) {
    const KeyPair kp = keygen(p, rng);
    const Signature sig = sign(p, kp.sk, kp.pk, bytes(std::to_string(i)), rng);
    if (rank_weight(sig.u1) != size_t(p.weight_bound())) continue;
    ++full;
    CHECK(recover_support(sig.u1, sig.g).contains(support(kp.sk.x)));
  }
  CHECK(full > 150);  // the full-support case dominates
}

TEST_CASE("step 1 can miss at toy parameters, which the retry loop absorbs") {
  // At small (m, n) the response support occasionally degenerates and the
  // recovered space is not Supp(x); the attack detects this (wrong dimension
  // or an inconsistent system) and retries with a fresh signature.
  const Params p = Params::custom(12, 10, 2, 2, 2);
  RandomStream rng(std::string("toy-miss"), "test");
  bool found = false;
  for (int i = 0; i < 500 && !found; ++i) {
    const KeyPair kp = keygen(p, rng);
    const Signature sig = sign(p, kp.sk, kp.pk, bytes(std::to_string(i)), rng);
    const Subspace rec = recover_support(sig.u1, sig.g);
    if (!(rec == support(kp.sk.x))) found = true;
  }
  CHECK(found);
}

TEST_CASE("a bad first signature costs exactly one retry") {
  const Params p = Params::custom(20, 16, 3, 3, 3);
  const Field& f = p.field();
  RandomStream rng(std::string("retry-once"), "test");
  const KeyPair kp = keygen(p, rng);
  int calls = 0;
  const SignatureSource source = [&]() {
    if (++calls == 1) {
      // Full-rank noise: the scaled-support intersection cannot have
      // dimension w, so the first attempt is rejected in step 1.
      Signature sig;
      sig.g = sample_rank_vector(f, p.n(), p.w_g(), rng);
      sig.u1 = sample_rank_vector(f, p.n(), 16, rng);
      sig.u2 = sample_rank_vector(f, p.n(), 16, rng);
      return sig;
    }
    std::array<uint8_t, 16> msg;
    rng.fill(msg);
    return sign(p, kp.sk, kp.pk, msg, rng);
  };
  const AttackReport report = recover_key(p, kp.pk, source, 10, &kp.sk);
  REQUIRE(report.success);
  CHECK(report.signatures_consumed == 2);
  CHECK(report.retries == 1);
  CHECK(is_equivalent_key(p, kp.pk, report.recovered));
}

TEST_CASE("the linearized system is consistent exactly for correct supports") {
  const Params p = Params::custom(12, 10, 2, 2, 2);
  const Field& f = p.field();
  RandomStream rng(std::string("system"), "test");

  KeyPair kp = keygen(p, rng);
  Signature sig = sign(p, kp.sk, kp.pk, bytes("probe"), rng);
  // Fix a seed state where step 1 lands exactly (the generic case).
  while (!(recover_support(sig.u1, sig.g) == support(kp.sk.x)) ||
         !(recover_support(sig.u2, sig.g) == support(kp.sk.y))) {
    kp = keygen(p, rng);
    sig = sign(p, kp.sk, kp.pk, bytes("probe"), rng);
  }
  const Subspace fx = recover_support(sig.u1, sig.g);
  const Subspace fy = recover_support(sig.u2, sig.g);
  const auto alpha = fx.basis();
  const auto beta = fy.basis();

  SUBCASE("shape: nm equations, 2wn unknowns, overdetermined") {
    const SupportSystem sys = build_support_system(p, kp.pk, alpha, beta);
    CHECK(sys.a.rows() == size_t(p.n() * p.m()));
    CHECK(sys.a.cols() == size_t(2 * p.w() * p.n()));
    CHECK(sys.a.rows() > sys.a.cols());
    CHECK(sys.b.size() == sys.a.rows());
  }

  SUBCASE("the planted key solves the assembled system") {
    REQUIRE(fx == support(kp.sk.x));
    REQUIRE(fy == support(kp.sk.y));
    const BitMatrix xe = coords_over(fx, kp.sk.x);
    const BitMatrix ye = coords_over(fy, kp.sk.y);
    BitVector planted(2 * p.w() * p.n());
    for (int i = 0; i < p.w(); ++i)
      for (int j = 0; j < p.n(); ++j) {
        if (xe.get(i, j)) planted.set(i * p.n() + j, true);
        if (ye.get(i, j)) planted.set((p.w() + i) * p.n() + j, true);
      }
    const SupportSystem sys = build_support_system(p, kp.pk, alpha, beta);
    CHECK(sys.a.mul(planted) == sys.b);
  }

  SUBCASE("solving returns an equivalent key") {
    const auto mats = solve_support_matrices(p, kp.pk, alpha, beta);
    REQUIRE(mats.has_value());
    const SecretKey cand{recompose(f, alpha, mats->first, p.n()),
                         recompose(f, beta, mats->second, p.n())};
    CHECK(is_equivalent_key(p, kp.pk, cand));
    CHECK(kp.pk.s == cand.x + rot_product(kp.pk.h, cand.y));
  }

  SUBCASE("wrong supports are rejected as inconsistent") {
    const RankVector junk1 = sample_rank_vector(f, p.n(), p.w(), rng);
    const RankVector junk2 = sample_rank_vector(f, p.n(), p.w(), rng);
    const auto wrong_alpha = support(junk1).basis();
    const auto wrong_beta = support(junk2).basis();
    CHECK_FALSE(solve_support_matrices(p, kp.pk, wrong_alpha, wrong_beta).has_value());
  }
}

TEST_CASE("full recovery on a small instance, end to end") {
  const Params p = Params::custom(20, 16, 3, 3, 3);
  RandomStream rng(std::string("recover-small"), "test");
  const KeyPair kp = keygen(p, rng);
  RandomStream oracle_rng(std::string("recover-small-oracle"), "test");
  const AttackReport report =
      recover_key(p, kp.pk, honest_source(p, kp, oracle_rng), 10, &kp.sk);
  REQUIRE(report.success);
  CHECK(is_equivalent_key(p, kp.pk, report.recovered));
  CHECK((report.equivalent_or_exact == "exact" ||
         report.equivalent_or_exact == "equivalent"));
  CHECK(report.signatures_consumed >= 1);
  CHECK(report.signatures_consumed <= 10);
  CHECK(report.retries == report.signatures_consumed - 1);
  CHECK(report.step1_seconds >= 0);
  CHECK(report.step2_seconds >= 0);
  CHECK(report.total_seconds >= report.step1_seconds + report.step2_seconds);

  // The recovered key forges: fresh message, honest verifier.
  RandomStream forge_rng(std::string("forge"), "test");
  const auto msg = bytes("forged with the recovered key");
  const Signature forged = forge(p, report.recovered, kp.pk, msg, forge_rng);
  CHECK(verify(p, kp.pk, msg, forged).ok);
}

TEST_CASE("a garbage oracle exhausts the retry budget") {
  const Params p = Params::custom(12, 10, 2, 2, 2);
  const Field& f = p.field();
  RandomStream rng(std::string("garbage"), "test");
  const KeyPair kp = keygen(p, rng);
  const SignatureSource junk = [&]() {
    Signature sig;
    sig.g = sample_rank_vector(f, p.n(), p.w_g(), rng);
    sig.u1 = sample_rank_vector(f, p.n(), 10, rng);  // full-rank noise
    sig.u2 = sample_rank_vector(f, p.n(), 10, rng);
    return sig;
  };
  const AttackReport report = recover_key(p, kp.pk, junk, 10, &kp.sk);
  CHECK_FALSE(report.success);
  CHECK(report.signatures_consumed == 10);
  CHECK(report.retries == 9);
  CHECK(report.equivalent_or_exact.empty());
  CHECK_THROWS_AS(recover_key(p, kp.pk, junk, 0), std::invalid_argument);
}

TEST_CASE("random keys of the right weight do not forge") {
  const Params p = Params::custom(20, 16, 3, 3, 3);
  RandomStream rng(std::string("nonkey"), "test");
  const KeyPair kp = keygen(p, rng);
  const SecretKey impostor{sample_rank_vector(p.field(), p.n(), p.w(), rng),
                           sample_rank_vector(p.field(), p.n(), p.w(), rng)};
  CHECK_FALSE(is_equivalent_key(p, kp.pk, impostor));
  const auto msg = bytes("should not verify");
  const Signature forged = forge(p, impostor, kp.pk, msg, rng);
  CHECK_FALSE(verify(p, kp.pk, msg, forged).ok);
}
