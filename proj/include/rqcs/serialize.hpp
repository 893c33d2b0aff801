#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include <json.hpp>

#include "rqcs/attack.hpp"
#include "rqcs/scheme.hpp"

namespace rqcs {

struct SerializeError : std::runtime_error {
  explicit SerializeError(const std::string& msg) : std::runtime_error(msg) {}
};

// All files share one envelope carrying the full parameter set (including
// the modulus, so a file is self-describing) plus a payload.  Vectors are
// arrays of ceil(m/8)-byte little-endian hex strings, one per coordinate.

nlohmann::json params_to_json(const Params& params);
Params params_from_json(const nlohmann::json& j);

nlohmann::json rank_vector_to_json(const RankVector& v);
RankVector rank_vector_from_json(const Field& field, size_t n,
                                 const nlohmann::json& j);

// Keypair or public-key file: envelope + "public_key" {h, s} and, when
// present, "secret_key" {x, y}.  Loading validates s = x + h . y when the
// secret key is included.
nlohmann::json keypair_to_json(const Params& params, const KeyPair& kp);
nlohmann::json public_key_to_json(const Params& params, const PublicKey& pk);

struct LoadedKey {
  Params params;
  PublicKey pk;
  std::optional<SecretKey> sk;
};
LoadedKey key_from_json(const nlohmann::json& j);

nlohmann::json signature_to_json(const Params& params, const Signature& sig);

struct LoadedSignature {
  Params params;
  Signature sig;
};
LoadedSignature signature_from_json(const nlohmann::json& j);

nlohmann::json report_to_json(const AttackReport& report);
AttackReport report_from_json(const nlohmann::json& j);

// Canonical text form: sorted keys, two-space indent, trailing newline.
// Writing the parse of a canonical file reproduces it byte for byte.
std::string canonical_dump(const nlohmann::json& j);

void write_json_file(const std::filesystem::path& path, const nlohmann::json& j);
nlohmann::json read_json_file(const std::filesystem::path& path);

}  // namespace rqcs
