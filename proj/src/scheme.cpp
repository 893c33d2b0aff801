#include "rqcs/scheme.hpp"

#include <algorithm>

#include "rqcs/xof.hpp"

namespace rqcs {

namespace {

struct InstanceDef {
  const char* name;
  int claimed_security, m, n, w, w_r, w_g;
};

constexpr InstanceDef kInstances[] = {
    {"rqcs-1", 128, 89, 67, 5, 5, 5},
    {"rqcs-2", 192, 121, 97, 6, 6, 6},
    {"rqcs-3", 256, 139, 101, 6, 6, 6},
};

void append_le32(std::vector<uint8_t>& out, uint32_t v) {
  for (int i = 0; i < 4; ++i) out.push_back(static_cast<uint8_t>(v >> (8 * i)));
}

void append_le64(std::vector<uint8_t>& out, uint64_t v) {
  for (int i = 0; i < 8; ++i) out.push_back(static_cast<uint8_t>(v >> (8 * i)));
}

}  // namespace

Params Params::make(std::string instance, int claimed_security, int m, int n,
                    int w, int w_r, int w_g, const Field& field) {
  if (field.degree() != m)
    throw ParamError("field degree " + std::to_string(field.degree()) +
                     " does not match m=" + std::to_string(m));
  if (n < 1) throw ParamError("n must be positive");
  if (w < 0 || w_r < 0) throw ParamError("weights must be nonnegative");
  if (w_g < 1) throw ParamError("w_g must be at least 1");
  const int bound = w * w_g + w_r;
  const int mn = std::min(m, n);
  if (bound >= mn)
    throw ParamError("w*w_g + w_r = " + std::to_string(bound) +
                     " must be below min(m, n) = " + std::to_string(mn));
  if (m <= 2 * w)
    throw ParamError("m = " + std::to_string(m) + " must exceed 2*w = " +
                     std::to_string(2 * w));
  if (w_g > mn)
    throw ParamError("w_g exceeds min(m, n)");
  Params p;
  p.instance_ = std::move(instance);
  p.claimed_security_ = claimed_security;
  p.field_ = &field;
  p.m_ = m;
  p.n_ = n;
  p.w_ = w;
  p.w_r_ = w_r;
  p.w_g_ = w_g;
  return p;
}

Params Params::standard(const std::string& instance) {
  for (const auto& d : kInstances)
    if (instance == d.name)
      return make(d.name, d.claimed_security, d.m, d.n, d.w, d.w_r, d.w_g,
                  Field::standard(d.m));
  throw ParamError("unknown instance '" + instance +
                   "' (expected rqcs-1, rqcs-2 or rqcs-3)");
}

Params Params::custom(int m, int n, int w, int w_r, int w_g, const Field* field,
                      int claimed_security) {
  const Field& f = field ? *field : Field::standard(m);
  return make("custom", claimed_security, m, n, w, w_r, w_g, f);
}

std::vector<std::string> Params::standard_instances() {
  std::vector<std::string> out;
  for (const auto& d : kInstances) out.emplace_back(d.name);
  return out;
}

bool Params::operator==(const Params& o) const {
  return instance_ == o.instance_ && claimed_security_ == o.claimed_security_ &&
         field_ == o.field_ && m_ == o.m_ && n_ == o.n_ && w_ == o.w_ &&
         w_r_ == o.w_r_ && w_g_ == o.w_g_;
}

KeyPair keygen(const Params& params, RandomStream& rng) {
  const Field& f = params.field();
  KeyPair kp;
  kp.pk.h = sample_uniform_vector(f, params.n(), rng);
  kp.sk.x = sample_rank_vector(f, params.n(), params.w(), rng);
  kp.sk.y = sample_rank_vector(f, params.n(), params.w(), rng);
  kp.pk.s = kp.sk.x + rot_product(kp.pk.h, kp.sk.y);
  return kp;
}

RankVector hash_to_rank_vector(const Params& params, const RankVector& i_vec,
                               std::span<const uint8_t> msg) {
  if (&i_vec.field() != &params.field() ||
      i_vec.size() != static_cast<size_t>(params.n()))
    throw ParamError("hash input vector does not match the parameters");
  std::vector<uint8_t> input;
  append_le32(input, static_cast<uint32_t>(params.m()));
  append_le32(input, static_cast<uint32_t>(params.n()));
  append_le32(input, static_cast<uint32_t>(params.w()));
  append_le32(input, static_cast<uint32_t>(params.w_r()));
  append_le32(input, static_cast<uint32_t>(params.w_g()));
  const std::string mod = params.field().modulus_hex();
  input.insert(input.end(), mod.begin(), mod.end());
  append_le64(input, i_vec.size() * params.field().element_bytes());
  for (size_t j = 0; j < i_vec.size(); ++j) {
    const auto bytes = i_vec[j].to_bytes();
    input.insert(input.end(), bytes.begin(), bytes.end());
  }
  input.insert(input.end(), msg.begin(), msg.end());
  RandomStream stream(input, "rqcs.hash-to-rank");
  return sample_rank_vector(params.field(), params.n(), params.w_g(), stream);
}

Signature sign(const Params& params, const SecretKey& sk, const PublicKey& pk,
               std::span<const uint8_t> msg, RandomStream& rng) {
  const Field& f = params.field();
  const size_t n = params.n();
  const RankVector r1 = sample_rank_vector(f, n, params.w_r(), rng);
  const RankVector r2 = sample_rank_vector(f, n, params.w_r(), rng);
  const RankVector i_vec = r1 + rot_product(pk.h, r2);
  Signature sig;
  sig.g = hash_to_rank_vector(params, i_vec, msg);
  sig.u1 = rot_product(sk.x, sig.g) + r1;
  sig.u2 = rot_product(sk.y, sig.g) + r2;
  return sig;
}

VerifyResult verify(const Params& params, const PublicKey& pk,
                    std::span<const uint8_t> msg, const Signature& sig) {
  const Field& f = params.field();
  const size_t n = params.n();
  for (const RankVector* v : {&sig.g, &sig.u1, &sig.u2, &pk.h, &pk.s}) {
    if (v->size() != n || &v->field() != &f)
      return {false, "malformed signature or key: wrong length or field"};
  }
  const size_t bound = params.weight_bound();
  if (rank_weight(sig.u1) > bound)
    return {false, "u1 rank weight exceeds bound"};
  if (rank_weight(sig.u2) > bound)
    return {false, "u2 rank weight exceeds bound"};
  // In characteristic 2, u1 + h . u2 - s . g = u1 + h . u2 + s . g.
  const RankVector i_vec =
      sig.u1 + rot_product(pk.h, sig.u2) + rot_product(pk.s, sig.g);
  if (hash_to_rank_vector(params, i_vec, msg) != sig.g)
    return {false, "challenge mismatch"};
  return {true, ""};
}

}  // namespace rqcs
