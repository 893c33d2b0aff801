#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "rqcs/quasi_cyclic.hpp"
#include "rqcs/rank_metric.hpp"

namespace rqcs {

class RandomStream;

struct ParamError : std::runtime_error {
  explicit ParamError(const std::string& msg) : std::runtime_error(msg) {}
};

// Parameter set for the signature scheme over F_{2^m}, code length n,
// secret-key weight w, nonce weight w_r, challenge weight w_g.  Validated on
// construction: w*w_g + w_r < min(m, n) keeps honest signatures under the
// verification bound with room for the support to stay proper, and m > 2w
// makes the key equation overdetermined.
class Params {
 public:
  static Params standard(const std::string& instance);  // rqcs-1 / rqcs-2 / rqcs-3
  static Params custom(int m, int n, int w, int w_r, int w_g,
                       const Field* field = nullptr, int claimed_security = 0);
  // Fully explicit variant used by deserialization; validates like custom.
  static Params make(std::string instance, int claimed_security, int m, int n,
                     int w, int w_r, int w_g, const Field& field);

  static std::vector<std::string> standard_instances();

  const std::string& instance() const { return instance_; }
  int claimed_security() const { return claimed_security_; }
  const Field& field() const { return *field_; }
  int m() const { return m_; }
  int n() const { return n_; }
  int w() const { return w_; }
  int w_r() const { return w_r_; }
  int w_g() const { return w_g_; }
  // Verification bound on the rank weight of u_1 and u_2.
  int weight_bound() const { return w_ * w_g_ + w_r_; }

  bool operator==(const Params& o) const;

 private:
  Params() = default;
  std::string instance_;
  int claimed_security_ = 0;
  const Field* field_ = nullptr;
  int m_ = 0, n_ = 0, w_ = 0, w_r_ = 0, w_g_ = 0;
};

struct SecretKey {
  RankVector x, y;  // both of rank weight w
  bool operator==(const SecretKey& o) const { return x == o.x && y == o.y; }
};

struct PublicKey {
  RankVector h;  // uniform
  RankVector s;  // x + h . y
  bool operator==(const PublicKey& o) const { return h == o.h && s == o.s; }
};

struct KeyPair {
  SecretKey sk;
  PublicKey pk;
};

struct Signature {
  RankVector g;   // challenge, rank weight w_g
  RankVector u1;  // x . g + r1
  RankVector u2;  // y . g + r2
  bool operator==(const Signature& o) const = default;
};

struct VerifyResult {
  bool ok;
  std::string reason;  // empty when ok
};

// Draws h, then x, then y from rng.
KeyPair keygen(const Params& params, RandomStream& rng);

// Deterministic challenge: a rank-w_g vector derived from (params, I, msg)
// through the XOF.  Same inputs give the same g on every platform.
RankVector hash_to_rank_vector(const Params& params, const RankVector& i_vec,
                               std::span<const uint8_t> msg);

// Draws r1 then r2 from rng, each of exact rank w_r.
Signature sign(const Params& params, const SecretKey& sk, const PublicKey& pk,
               std::span<const uint8_t> msg, RandomStream& rng);

// Checks the weight bounds on u1, u2, then the challenge recomputation
// g == H(u1 + h . u2 - s . g, msg).
VerifyResult verify(const Params& params, const PublicKey& pk,
                    std::span<const uint8_t> msg, const Signature& sig);

}  // namespace rqcs
