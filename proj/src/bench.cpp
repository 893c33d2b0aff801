#include "rqcs/bench.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <thread>

#include "rqcs/attack.hpp"
#include "rqcs/xof.hpp"

namespace rqcs {

TrialResult run_attack_trial(const Params& params, std::span<const uint8_t> trial_seed,
                             int max_retries) {
  RandomStream key_rng(derive_seed(trial_seed, "keygen"), "rqcs.keygen");
  const KeyPair kp = keygen(params, key_rng);
  RandomStream oracle_rng(derive_seed(trial_seed, "oracle"), "rqcs.oracle");
  const SignatureSource source = [&]() {
    std::array<uint8_t, 32> msg;
    oracle_rng.fill(msg);
    return sign(params, kp.sk, kp.pk, msg, oracle_rng);
  };
  const AttackReport report = recover_key(params, kp.pk, source, max_retries, &kp.sk);
  return {report.success, report.total_seconds, report.retries};
}

BenchRow bench_instance(const Params& params, int trials,
                        std::span<const uint8_t> master_seed, int jobs,
                        int max_retries) {
  if (trials < 1) throw std::invalid_argument("trials must be >= 1");
  std::vector<TrialResult> results(trials);
  std::atomic<int> next{0};
  auto worker = [&]() {
    for (;;) {
      const int i = next.fetch_add(1);
      if (i >= trials) return;
      const auto seed =
          derive_seed(master_seed, params.instance() + "/trial/" + std::to_string(i));
      results[i] = run_attack_trial(params, seed, max_retries);
    }
  };
  const int nthreads = std::clamp(jobs, 1, trials);
  if (nthreads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(nthreads);
    for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  BenchRow row;
  row.instance = params.instance();
  row.m = params.m();
  row.n = params.n();
  row.w = params.w();
  row.claimed_security = params.claimed_security();
  row.trials = trials;
  std::vector<double> ok_seconds;
  double retry_sum = 0;
  for (const auto& r : results) {
    retry_sum += r.retries;
    if (r.success) ok_seconds.push_back(r.seconds);
  }
  row.success_rate = static_cast<double>(ok_seconds.size()) / trials;
  row.mean_retries = retry_sum / trials;
  if (!ok_seconds.empty()) {
    double sum = 0;
    for (double s : ok_seconds) sum += s;
    row.mean_kra_seconds = sum / ok_seconds.size();
    std::sort(ok_seconds.begin(), ok_seconds.end());
    const size_t k = ok_seconds.size();
    row.median_kra_seconds =
        k % 2 ? ok_seconds[k / 2] : (ok_seconds[k / 2 - 1] + ok_seconds[k / 2]) / 2;
  }
  return row;
}

std::string bench_csv(std::span<const BenchRow> rows) {
  std::string out =
      "instance,q,m,n,w,claimed_security,mean_kra_seconds,median_kra_seconds,"
      "success_rate,mean_retries,trials\n";
  char line[256];
  for (const auto& r : rows) {
    std::snprintf(line, sizeof(line), "%s,%d,%d,%d,%d,%d,%.6f,%.6f,%.4f,%.3f,%d\n",
                  r.instance.c_str(), r.q, r.m, r.n, r.w, r.claimed_security,
                  r.mean_kra_seconds, r.median_kra_seconds, r.success_rate,
                  r.mean_retries, r.trials);
    out += line;
  }
  return out;
}

nlohmann::json bench_to_json(std::span<const BenchRow> rows) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : rows)
    arr.push_back({{"instance", r.instance},
                   {"q", r.q},
                   {"m", r.m},
                   {"n", r.n},
                   {"w", r.w},
                   {"claimed_security", r.claimed_security},
                   {"trials", r.trials},
                   {"success_rate", r.success_rate},
                   {"mean_kra_seconds", r.mean_kra_seconds},
                   {"median_kra_seconds", r.median_kra_seconds},
                   {"mean_retries", r.mean_retries}});
  return arr;
}

}  // namespace rqcs
