#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rqcs/scheme.hpp"
#include "rqcs/xof.hpp"

using namespace rqcs;

namespace {

std::vector<uint8_t> bytes(const std::string& s) {
  return std::vector<uint8_t>(s.begin(), s.end());
}

}  // namespace

TEST_CASE("the three deployed instances carry the published numbers") {
  const Params p1 = Params::standard("rqcs-1");
  CHECK(p1.m() == 89);
  CHECK(p1.n() == 67);
  CHECK(p1.w() == 5);
  CHECK(p1.w_r() == 5);
  CHECK(p1.w_g() == 5);
  CHECK(p1.claimed_security() == 128);
  CHECK(p1.weight_bound() == 30);

  const Params p2 = Params::standard("rqcs-2");
  CHECK(p2.m() == 121);
  CHECK(p2.n() == 97);
  CHECK(p2.w() == 6);
  CHECK(p2.claimed_security() == 192);

  const Params p3 = Params::standard("rqcs-3");
  CHECK(p3.m() == 139);
  CHECK(p3.n() == 101);
  CHECK(p3.w() == 6);
  CHECK(p3.claimed_security() == 256);

  CHECK_THROWS_AS(Params::standard("rqcs-9"), ParamError);
}

TEST_CASE("parameter validation names the violated constraint") {
  // w*w_g + w_r = 3*2+2 = 8 >= min(10, 7) = 7.
  CHECK_THROWS_WITH_AS(Params::custom(10, 7, 3, 2, 2),
                       doctest::Contains("min(m, n)"), ParamError);
  // m = 10 <= 2w = 10.
  CHECK_THROWS_WITH_AS(Params::custom(10, 8, 5, 0, 1),
                       doctest::Contains("exceed 2*w"), ParamError);
  CHECK_THROWS_AS(Params::custom(12, 10, 2, 2, 0), ParamError);   // w_g < 1
  CHECK_THROWS_AS(Params::custom(12, 0, 2, 2, 2), ParamError);    // n < 1
  CHECK(Params::custom(12, 10, 2, 2, 2).weight_bound() == 6);     // accepted
  CHECK(Params::custom(12, 10, 2, 0, 2).w_r() == 0);              // w_r may be 0
}

TEST_CASE("keygen satisfies the key equation with exact-weight secrets") {
  const Params p = Params::custom(20, 16, 3, 3, 3);
  RandomStream rng(std::string("keygen"), "test");
  for (int i = 0; i < 50; ++i) {
    const KeyPair kp = keygen(p, rng);
    CHECK(rank_weight(kp.sk.x) == 3);
    CHECK(rank_weight(kp.sk.y) == 3);
    CHECK(kp.pk.s == kp.sk.x + rot_product(kp.pk.h, kp.sk.y));
    CHECK(kp.pk.h.size() == 16);
  }
  // Deterministic in the stream.
  RandomStream r1(std::string("kg-det"), "test");
  RandomStream r2(std::string("kg-det"), "test");
  const KeyPair a = keygen(p, r1), b = keygen(p, r2);
  CHECK(a.sk == b.sk);
  CHECK(a.pk == b.pk);
}

TEST_CASE("challenge derivation is deterministic, rank-exact, and sensitive") {
  const Params p = Params::custom(12, 10, 2, 2, 2);
  RandomStream rng(std::string("hash"), "test");
  for (int i = 0; i < 200; ++i) {
    const RankVector I = sample_uniform_vector(p.field(), p.n(), rng);
    const auto msg = bytes("message " + std::to_string(i));
    const RankVector g = hash_to_rank_vector(p, I, msg);
    CHECK(rank_weight(g) == 2);
    CHECK(hash_to_rank_vector(p, I, msg) == g);

    auto flipped = msg;
    flipped[0] ^= 1;
    CHECK(hash_to_rank_vector(p, I, flipped) != g);

    RankVector I2 = I;
    I2[0] += p.field().one();
    CHECK(hash_to_rank_vector(p, I2, msg) != g);
  }
}

TEST_CASE("sign/verify round trip accepts and stays under the weight bound") {
  for (const Params& p : {Params::custom(12, 10, 2, 2, 2), Params::standard("rqcs-1")}) {
    RandomStream rng("roundtrip-" + p.instance(), "test");
    const KeyPair kp = keygen(p, rng);
    for (int i = 0; i < (p.instance() == "custom" ? 100 : 10); ++i) {
      const auto msg = bytes("round trip " + std::to_string(i));
      const Signature sig = sign(p, kp.sk, kp.pk, msg, rng);
      CHECK(rank_weight(sig.u1) <= size_t(p.weight_bound()));
      CHECK(rank_weight(sig.u2) <= size_t(p.weight_bound()));
      CHECK(rank_weight(sig.g) == size_t(p.w_g()));
      const VerifyResult v = verify(p, kp.pk, msg, sig);
      CHECK_MESSAGE(v.ok, v.reason);
    }
  }
}

TEST_CASE("signing draws r1 then r2; the commitment algebra checks out") {
  // Replaying the signer's stream exposes r1, r2 and pins the documented
  // draw order; then u1 - x.g = r1, u2 - y.g = r2, and the verifier's
  // reconstruction u1 + h.u2 + s.g equals r1 + h.r2.
  const Params p = Params::custom(12, 10, 2, 2, 2);
  RandomStream kg(std::string("algebra-kg"), "test");
  const KeyPair kp = keygen(p, kg);
  RandomStream sig_rng(std::string("algebra-sign"), "test");
  RandomStream replay(std::string("algebra-sign"), "test");
  const Signature sig = sign(p, kp.sk, kp.pk, bytes("m"), sig_rng);
  const RankVector r1 = sample_rank_vector(p.field(), p.n(), p.w_r(), replay);
  const RankVector r2 = sample_rank_vector(p.field(), p.n(), p.w_r(), replay);
  CHECK(sig.u1 + rot_product(kp.sk.x, sig.g) == r1);
  CHECK(sig.u2 + rot_product(kp.sk.y, sig.g) == r2);
  const RankVector lhs =
      sig.u1 + rot_product(kp.pk.h, sig.u2) + rot_product(kp.pk.s, sig.g);
  CHECK(lhs == r1 + rot_product(kp.pk.h, r2));
}

TEST_CASE("degenerate nonce weight w_r = 0 still round trips") {
  const Params p = Params::custom(12, 10, 2, 0, 2);
  RandomStream rng(std::string("wr0"), "test");
  const KeyPair kp = keygen(p, rng);
  const auto msg = bytes("zero nonce");
  const Signature sig = sign(p, kp.sk, kp.pk, msg, rng);
  // With r = 0 the response is exactly (x.g, y.g).
  CHECK(sig.u1 == rot_product(kp.sk.x, sig.g));
  CHECK(sig.u2 == rot_product(kp.sk.y, sig.g));
  CHECK(verify(p, kp.pk, msg, sig).ok);
}

TEST_CASE("verification rejects tampering with a reason") {
  const Params p = Params::custom(12, 10, 2, 2, 2);
  RandomStream rng(std::string("reject"), "test");
  const KeyPair kp = keygen(p, rng);
  const auto msg = bytes("the genuine message");
  const Signature sig = sign(p, kp.sk, kp.pk, msg, rng);
  REQUIRE(verify(p, kp.pk, msg, sig).ok);

  SUBCASE("flipped message bit") {
    auto other = msg;
    other[3] ^= 0x20;
    const VerifyResult v = verify(p, kp.pk, other, sig);
    CHECK_FALSE(v.ok);
    CHECK(v.reason == "challenge mismatch");
  }
  SUBCASE("u1 replaced by a full-rank vector trips the weight bound") {
    Signature bad = sig;
    bad.u1 = sample_rank_vector(p.field(), p.n(), 10, rng);  // rank 10 > 6
    const VerifyResult v = verify(p, kp.pk, msg, bad);
    CHECK_FALSE(v.ok);
    CHECK(v.reason == "u1 rank weight exceeds bound");
  }
  SUBCASE("u2 over the bound") {
    Signature bad = sig;
    bad.u2 = sample_rank_vector(p.field(), p.n(), 10, rng);
    const VerifyResult v = verify(p, kp.pk, msg, bad);
    CHECK_FALSE(v.ok);
    CHECK(v.reason == "u2 rank weight exceeds bound");
  }
  SUBCASE("signature under a different key") {
    RandomStream rng2(std::string("reject-other"), "test");
    const KeyPair other = keygen(p, rng2);
    CHECK_FALSE(verify(p, other.pk, msg, sig).ok);
  }
  SUBCASE("malformed sizes") {
    Signature bad = sig;
    bad.u1 = RankVector(p.field(), 9);
    const VerifyResult v = verify(p, kp.pk, msg, bad);
    CHECK_FALSE(v.ok);
    CHECK(v.reason == "malformed signature or key: wrong length or field");
  }
}
