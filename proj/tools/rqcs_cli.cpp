// Command-line front end: key generation, signing, verification, the
// key-recovery attack, and the attack benchmark.  Results go to files as
// canonical JSON; errors go to stderr as one-line JSON with exit code 2;
// "the signature is bad" / "the attack failed" exit with code 1.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rqcs/attack.hpp"
#include "rqcs/bench.hpp"
#include "rqcs/serialize.hpp"
#include "rqcs/xof.hpp"

namespace {

using nlohmann::json;
using namespace rqcs;

std::vector<uint8_t> read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw SerializeError("cannot open " + path);
  return std::vector<uint8_t>(std::istreambuf_iterator<char>(in),
                              std::istreambuf_iterator<char>());
}

// --seed as hex; absent means a fresh random seed (echoed so runs can be
// reproduced).
std::vector<uint8_t> resolve_seed(const std::string& seed_hex) {
  if (!seed_hex.empty()) return hex_to_bytes(seed_hex);
  std::random_device rd;
  std::vector<uint8_t> seed(16);
  for (auto& b : seed) b = static_cast<uint8_t>(rd());
  return seed;
}

struct ParamsFlags {
  std::string instance = "rqcs-1";
  int m = 0, n = 0, w = 0, w_r = 0, w_g = 0, claimed_security = 0;
  std::string modulus_hex;

  void attach(CLI::App* cmd) {
    cmd->add_option("--instance", instance,
                    "rqcs-1, rqcs-2, rqcs-3 or custom (with --m/--n/--w/--w-r/--w-g)")
        ->capture_default_str();
    cmd->add_option("--m", m, "extension degree (custom instance)");
    cmd->add_option("--n", n, "code length (custom instance)");
    cmd->add_option("--w", w, "secret key rank weight (custom instance)");
    cmd->add_option("--w-r", w_r, "nonce rank weight (custom instance)");
    cmd->add_option("--w-g", w_g, "challenge rank weight (custom instance)");
    cmd->add_option("--modulus", modulus_hex,
                    "field modulus, hex, little-endian bit order (custom instance; "
                    "defaults to the pinned modulus for m)");
    cmd->add_option("--claimed-security", claimed_security,
                    "claimed security level label (custom instance)");
  }

  Params resolve() const {
    if (instance != "custom") return Params::standard(instance);
    if (m == 0 || n == 0 || w == 0 || w_g == 0)
      throw ParamError("custom instance needs --m, --n, --w, --w-r, --w-g");
    const Field* field =
        modulus_hex.empty() ? nullptr : &Field::from_hex(m, modulus_hex);
    return Params::custom(m, n, w, w_r, w_g, field, claimed_security);
  }
};

int cmd_params_list() {
  for (const auto& name : Params::standard_instances()) {
    const Params p = Params::standard(name);
    std::printf("%-8s q=2 m=%-3d n=%-3d w=%d w_r=%d w_g=%d claimed %d-bit\n",
                p.instance().c_str(), p.m(), p.n(), p.w(), p.w_r(), p.w_g(),
                p.claimed_security());
  }
  return 0;
}

int cmd_params_show(const ParamsFlags& flags) {
  std::cout << canonical_dump(params_to_json(flags.resolve()));
  return 0;
}

int cmd_keygen(const ParamsFlags& flags, const std::string& seed_hex,
               const std::string& out, const std::string& pk_out) {
  const Params params = flags.resolve();
  const auto seed = resolve_seed(seed_hex);
  RandomStream rng(seed, "rqcs.keygen");
  const KeyPair kp = keygen(params, rng);
  write_json_file(out, keypair_to_json(params, kp));
  if (!pk_out.empty()) write_json_file(pk_out, public_key_to_json(params, kp.pk));
  std::cout << json{{"instance", params.instance()},
                    {"seed", bytes_to_hex(seed)},
                    {"keypair", out}}
                   .dump()
            << "\n";
  return 0;
}

int cmd_sign(const std::string& sk_path, const std::string& pk_path,
             const std::string& msg_path, const std::string& out,
             const std::string& seed_hex) {
  const LoadedKey sk_file = key_from_json(read_json_file(sk_path));
  if (!sk_file.sk)
    throw SerializeError(sk_path + " holds no secret key");
  const LoadedKey pk_file = key_from_json(read_json_file(pk_path));
  if (!(sk_file.params == pk_file.params))
    throw SerializeError("--sk and --pk files use different parameters");
  if (!(sk_file.pk == pk_file.pk))
    throw SerializeError("--sk and --pk files hold different public keys");
  const auto msg = read_file(msg_path);
  const auto seed = resolve_seed(seed_hex);
  RandomStream rng(seed, "rqcs.sign");
  const Signature sig =
      sign(sk_file.params, *sk_file.sk, pk_file.pk, msg, rng);
  write_json_file(out, signature_to_json(sk_file.params, sig));
  std::cout << json{{"signed", out}, {"seed", bytes_to_hex(seed)}}.dump() << "\n";
  return 0;
}

int cmd_verify(const std::string& pk_path, const std::string& msg_path,
               const std::string& sig_path) {
  const LoadedKey key = key_from_json(read_json_file(pk_path));
  const LoadedSignature ls = signature_from_json(read_json_file(sig_path));
  if (!(key.params == ls.params))
    throw SerializeError("--pk and --sig files use different parameters");
  const auto msg = read_file(msg_path);
  const VerifyResult res = verify(key.params, key.pk, msg, ls.sig);
  if (res.ok) {
    std::cout << json{{"ok", true}}.dump() << "\n";
    return 0;
  }
  std::cout << json{{"ok", false}, {"reason", res.reason}}.dump() << "\n";
  return 1;
}

int cmd_attack(const std::string& pk_path, const std::string& target_sk_path,
               bool have_instance, const ParamsFlags& flags,
               const std::string& oracle, int max_retries,
               const std::string& seed_hex, const std::string& out,
               const std::string& recovered_out) {
  if (oracle != "self")
    throw ParamError("only the self-signing oracle is available (--oracle self)");

  Params params = Params::standard("rqcs-1");
  PublicKey pk;
  SecretKey oracle_sk;
  const auto seed = resolve_seed(seed_hex);
  if (!pk_path.empty()) {
    // Attack a key from disk; the oracle key comes from --target-sk.
    if (target_sk_path.empty())
      throw ParamError("--pk needs --target-sk to power the self-signing oracle");
    const LoadedKey pk_file = key_from_json(read_json_file(pk_path));
    const LoadedKey sk_file = key_from_json(read_json_file(target_sk_path));
    if (!sk_file.sk) throw SerializeError(target_sk_path + " holds no secret key");
    if (!(pk_file.params == sk_file.params))
      throw SerializeError("--pk and --target-sk files use different parameters");
    if (!(pk_file.pk == sk_file.pk))
      throw SerializeError("--pk and --target-sk files hold different public keys");
    params = pk_file.params;
    pk = pk_file.pk;
    oracle_sk = *sk_file.sk;
  } else if (have_instance) {
    // Self-contained demo: generate the victim keypair, then break it.
    params = flags.resolve();
    RandomStream key_rng(derive_seed(seed, "keygen"), "rqcs.keygen");
    KeyPair kp = keygen(params, key_rng);
    pk = kp.pk;
    oracle_sk = kp.sk;
  } else {
    throw ParamError("give either --pk with --target-sk, or --instance");
  }

  RandomStream oracle_rng(derive_seed(seed, "oracle"), "rqcs.oracle");
  const SignatureSource source = [&]() {
    std::array<uint8_t, 32> msg;
    oracle_rng.fill(msg);
    return sign(params, oracle_sk, pk, msg, oracle_rng);
  };
  const AttackReport report =
      recover_key(params, pk, source, max_retries, &oracle_sk);
  if (!out.empty()) write_json_file(out, report_to_json(report));
  if (report.success && !recovered_out.empty()) {
    const KeyPair recovered{report.recovered, pk};
    write_json_file(recovered_out, keypair_to_json(params, recovered));
  }
  std::cout << canonical_dump(report_to_json(report));
  return report.success ? 0 : 1;
}

int cmd_bench(const std::string& instances, const ParamsFlags& flags, int trials,
              const std::string& seed_hex, int jobs, int max_retries,
              const std::string& csv_path, const std::string& json_path) {
  std::vector<Params> targets;
  if (instances == "all") {
    for (const auto& name : Params::standard_instances())
      targets.push_back(Params::standard(name));
  } else {
    std::string rest = instances;
    while (!rest.empty()) {
      const size_t comma = rest.find(',');
      const std::string name = rest.substr(0, comma);
      rest = comma == std::string::npos ? "" : rest.substr(comma + 1);
      if (name == "custom") {
        ParamsFlags custom = flags;
        custom.instance = "custom";
        targets.push_back(custom.resolve());
      } else if (!name.empty()) {
        targets.push_back(Params::standard(name));
      }
    }
  }
  if (targets.empty()) throw ParamError("no instances selected");

  const auto seed = resolve_seed(seed_hex);
  std::vector<BenchRow> rows;
  for (const Params& p : targets) {
    std::fprintf(stderr, "benchmarking %s: %d trials...\n", p.instance().c_str(),
                 trials);
    rows.push_back(bench_instance(p, trials, seed, jobs, max_retries));
  }
  const std::string csv = bench_csv(rows);
  std::cout << csv;
  if (!csv_path.empty()) {
    std::ofstream f(csv_path, std::ios::binary);
    if (!f) throw SerializeError("cannot open " + csv_path);
    f << csv;
  }
  if (!json_path.empty()) write_json_file(json_path, bench_to_json(rows));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"rank quasi-cyclic signatures, and the key-recovery attack on them"};
  app.require_subcommand(1);

  auto* params_cmd = app.add_subcommand("params", "inspect parameter sets");
  params_cmd->require_subcommand(1);
  params_cmd->add_subcommand("list", "list the built-in instances");
  auto* show_cmd = params_cmd->add_subcommand("show", "print one instance as JSON");
  ParamsFlags show_flags;
  show_flags.attach(show_cmd);

  auto* keygen_cmd = app.add_subcommand("keygen", "generate a keypair");
  ParamsFlags keygen_flags;
  keygen_flags.attach(keygen_cmd);
  std::string keygen_seed, keygen_out, keygen_pk_out;
  keygen_cmd->add_option("--seed", keygen_seed, "hex seed (random if omitted)");
  keygen_cmd->add_option("--out", keygen_out, "keypair file")->required();
  keygen_cmd->add_option("--pk-out", keygen_pk_out, "also write a public-only file");

  auto* sign_cmd = app.add_subcommand("sign", "sign a message file");
  std::string sign_sk, sign_pk, sign_msg, sign_out, sign_seed;
  sign_cmd->add_option("--sk", sign_sk, "keypair file with the secret key")->required();
  sign_cmd->add_option("--pk", sign_pk, "public key file")->required();
  sign_cmd->add_option("--msg", sign_msg, "message file")->required();
  sign_cmd->add_option("--out", sign_out, "signature file")->required();
  sign_cmd->add_option("--seed", sign_seed, "hex seed (random if omitted)");

  auto* verify_cmd = app.add_subcommand("verify", "verify a signature file");
  std::string verify_pk, verify_msg, verify_sig;
  verify_cmd->add_option("--pk", verify_pk, "public key file")->required();
  verify_cmd->add_option("--msg", verify_msg, "message file")->required();
  verify_cmd->add_option("--sig", verify_sig, "signature file")->required();

  auto* attack_cmd = app.add_subcommand("attack", "recover the secret key");
  std::string attack_pk, attack_sk, attack_oracle = "self", attack_seed, attack_out,
              attack_recovered;
  int attack_retries = 10;
  ParamsFlags attack_flags;
  attack_cmd->add_option("--pk", attack_pk, "public key file to attack");
  attack_cmd->add_option("--target-sk", attack_sk,
                         "keypair file powering the self-signing oracle");
  auto* attack_instance_opt = attack_cmd->add_option(
      "--instance", attack_flags.instance,
      "self-contained demo: generate this instance's keypair and break it");
  attack_cmd->add_option("--m", attack_flags.m, "extension degree (custom)");
  attack_cmd->add_option("--n", attack_flags.n, "code length (custom)");
  attack_cmd->add_option("--w", attack_flags.w, "secret weight (custom)");
  attack_cmd->add_option("--w-r", attack_flags.w_r, "nonce weight (custom)");
  attack_cmd->add_option("--w-g", attack_flags.w_g, "challenge weight (custom)");
  attack_cmd->add_option("--modulus", attack_flags.modulus_hex, "field modulus (custom)");
  attack_cmd->add_option("--claimed-security", attack_flags.claimed_security,
                         "claimed security label (custom)");
  attack_cmd->add_option("--oracle", attack_oracle, "signature source (only: self)")
      ->capture_default_str();
  attack_cmd->add_option("--max-retries", attack_retries,
                         "signature budget for the attack")
      ->capture_default_str();
  attack_cmd->add_option("--seed", attack_seed, "hex seed (random if omitted)");
  attack_cmd->add_option("--out", attack_out, "attack report file");
  attack_cmd->add_option("--recovered-out", attack_recovered,
                         "write the recovered key as a keypair file");

  auto* bench_cmd = app.add_subcommand("bench", "benchmark the attack");
  std::string bench_instances = "all", bench_seed, bench_csv_path, bench_json_path;
  int bench_trials = 100, bench_jobs = 1, bench_retries = 10;
  ParamsFlags bench_flags;
  bench_cmd
      ->add_option("--instances", bench_instances,
                   "all, or a comma list of rqcs-1/rqcs-2/rqcs-3/custom")
      ->capture_default_str();
  bench_cmd->add_option("--m", bench_flags.m, "extension degree (custom)");
  bench_cmd->add_option("--n", bench_flags.n, "code length (custom)");
  bench_cmd->add_option("--w", bench_flags.w, "secret weight (custom)");
  bench_cmd->add_option("--w-r", bench_flags.w_r, "nonce weight (custom)");
  bench_cmd->add_option("--w-g", bench_flags.w_g, "challenge weight (custom)");
  bench_cmd->add_option("--modulus", bench_flags.modulus_hex, "field modulus (custom)");
  bench_cmd->add_option("--trials", bench_trials, "experiments per instance")
      ->capture_default_str();
  bench_cmd->add_option("--seed", bench_seed, "hex master seed (random if omitted)");
  bench_cmd->add_option("--jobs", bench_jobs, "worker threads")->capture_default_str();
  bench_cmd->add_option("--max-retries", bench_retries,
                        "signature budget per attack")
      ->capture_default_str();
  bench_cmd->add_option("--csv", bench_csv_path, "write the table as CSV");
  bench_cmd->add_option("--json", bench_json_path, "write the table as JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    std::cerr << json{{"error", e.what()}}.dump() << "\n";
    return 2;
  }

  try {
    if (params_cmd->parsed()) {
      if (params_cmd->get_subcommand("list")->parsed()) return cmd_params_list();
      return cmd_params_show(show_flags);
    }
    if (keygen_cmd->parsed())
      return cmd_keygen(keygen_flags, keygen_seed, keygen_out, keygen_pk_out);
    if (sign_cmd->parsed())
      return cmd_sign(sign_sk, sign_pk, sign_msg, sign_out, sign_seed);
    if (verify_cmd->parsed()) return cmd_verify(verify_pk, verify_msg, verify_sig);
    if (attack_cmd->parsed())
      return cmd_attack(attack_pk, attack_sk, attack_instance_opt->count() > 0,
                        attack_flags, attack_oracle, attack_retries, attack_seed,
                        attack_out, attack_recovered);
    if (bench_cmd->parsed())
      return cmd_bench(bench_instances, bench_flags, bench_trials, bench_seed,
                       bench_jobs, bench_retries, bench_csv_path, bench_json_path);
  } catch (const std::exception& e) {
    std::cerr << json{{"error", e.what()}}.dump() << "\n";
    return 2;
  }
  return 2;
}
