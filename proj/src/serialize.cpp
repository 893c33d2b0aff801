#include "rqcs/serialize.hpp"

#include <fstream>

#include "rqcs/quasi_cyclic.hpp"
#include "rqcs/xof.hpp"

namespace rqcs {

namespace {

using nlohmann::json;

const json& require(const json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end())
    throw SerializeError(std::string("missing field '") + key + "'");
  return *it;
}

int require_int(const json& j, const char* key) {
  const json& v = require(j, key);
  if (!v.is_number_integer())
    throw SerializeError(std::string("field '") + key + "' must be an integer");
  return v.get<int>();
}

std::string require_str(const json& j, const char* key) {
  const json& v = require(j, key);
  if (!v.is_string())
    throw SerializeError(std::string("field '") + key + "' must be a string");
  return v.get<std::string>();
}

}  // namespace

json params_to_json(const Params& params) {
  return json{{"instance", params.instance()},
              {"claimed_security", params.claimed_security()},
              {"q", 2},
              {"m", params.m()},
              {"n", params.n()},
              {"w", params.w()},
              {"w_r", params.w_r()},
              {"w_g", params.w_g()},
              {"modulus", params.field().modulus_hex()}};
}

Params params_from_json(const json& j) {
  if (require_int(j, "q") != 2)
    throw SerializeError("only q = 2 is supported");
  const int m = require_int(j, "m");
  const Field& field = Field::from_hex(m, require_str(j, "modulus"));
  return Params::make(require_str(j, "instance"), require_int(j, "claimed_security"),
                      m, require_int(j, "n"), require_int(j, "w"),
                      require_int(j, "w_r"), require_int(j, "w_g"), field);
}

json rank_vector_to_json(const RankVector& v) {
  json arr = json::array();
  for (size_t i = 0; i < v.size(); ++i) arr.push_back(v[i].to_hex());
  return arr;
}

RankVector rank_vector_from_json(const Field& field, size_t n, const json& j) {
  if (!j.is_array() || j.size() != n)
    throw SerializeError("vector must be an array of " + std::to_string(n) +
                         " hex strings");
  std::vector<FieldElement> coords;
  coords.reserve(n);
  for (const auto& e : j) {
    if (!e.is_string()) throw SerializeError("vector entries must be hex strings");
    try {
      coords.push_back(field.from_hex(e.get<std::string>()));
    } catch (const std::invalid_argument& ex) {
      throw SerializeError(std::string("bad coordinate encoding: ") + ex.what());
    } catch (const FieldError& ex) {
      throw SerializeError(std::string("bad coordinate encoding: ") + ex.what());
    }
  }
  return RankVector(field, std::move(coords));
}

json public_key_to_json(const Params& params, const PublicKey& pk) {
  json j = params_to_json(params);
  j["public_key"] = {{"h", rank_vector_to_json(pk.h)},
                     {"s", rank_vector_to_json(pk.s)}};
  return j;
}

json keypair_to_json(const Params& params, const KeyPair& kp) {
  json j = public_key_to_json(params, kp.pk);
  j["secret_key"] = {{"x", rank_vector_to_json(kp.sk.x)},
                     {"y", rank_vector_to_json(kp.sk.y)}};
  return j;
}

LoadedKey key_from_json(const json& j) {
  LoadedKey out{params_from_json(j), {}, std::nullopt};
  const Field& f = out.params.field();
  const size_t n = out.params.n();
  const json& pk = require(j, "public_key");
  out.pk.h = rank_vector_from_json(f, n, require(pk, "h"));
  out.pk.s = rank_vector_from_json(f, n, require(pk, "s"));
  if (auto it = j.find("secret_key"); it != j.end()) {
    SecretKey sk;
    sk.x = rank_vector_from_json(f, n, require(*it, "x"));
    sk.y = rank_vector_from_json(f, n, require(*it, "y"));
    if (out.pk.s != sk.x + rot_product(out.pk.h, sk.y))
      throw SerializeError("secret key does not match the public key");
    out.sk = std::move(sk);
  }
  return out;
}

json signature_to_json(const Params& params, const Signature& sig) {
  json j = params_to_json(params);
  j["signature"] = {{"g", rank_vector_to_json(sig.g)},
                    {"u1", rank_vector_to_json(sig.u1)},
                    {"u2", rank_vector_to_json(sig.u2)}};
  return j;
}

LoadedSignature signature_from_json(const json& j) {
  LoadedSignature out{params_from_json(j), {}};
  const Field& f = out.params.field();
  const size_t n = out.params.n();
  const json& sig = require(j, "signature");
  out.sig.g = rank_vector_from_json(f, n, require(sig, "g"));
  out.sig.u1 = rank_vector_from_json(f, n, require(sig, "u1"));
  out.sig.u2 = rank_vector_from_json(f, n, require(sig, "u2"));
  return out;
}

json report_to_json(const AttackReport& report) {
  return json{{"instance", report.instance},
              {"success", report.success},
              {"retries", report.retries},
              {"signatures_consumed", report.signatures_consumed},
              {"step1_seconds", report.step1_seconds},
              {"step2_seconds", report.step2_seconds},
              {"total_seconds", report.total_seconds},
              {"equivalent_or_exact", report.equivalent_or_exact}};
}

AttackReport report_from_json(const json& j) {
  AttackReport r;
  r.instance = require_str(j, "instance");
  const json& s = require(j, "success");
  if (!s.is_boolean()) throw SerializeError("field 'success' must be a boolean");
  r.success = s.get<bool>();
  r.retries = require_int(j, "retries");
  r.signatures_consumed = require_int(j, "signatures_consumed");
  r.step1_seconds = require(j, "step1_seconds").get<double>();
  r.step2_seconds = require(j, "step2_seconds").get<double>();
  r.total_seconds = require(j, "total_seconds").get<double>();
  r.equivalent_or_exact = require_str(j, "equivalent_or_exact");
  return r;
}

std::string canonical_dump(const json& j) {
  return j.dump(2) + "\n";
}

void write_json_file(const std::filesystem::path& path, const json& j) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw SerializeError("cannot open " + path.string() + " for writing");
  out << canonical_dump(j);
  if (!out) throw SerializeError("failed writing " + path.string());
}

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw SerializeError("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::exception& ex) {
    throw SerializeError("invalid JSON in " + path.string() + ": " + ex.what());
  }
}

}  // namespace rqcs
