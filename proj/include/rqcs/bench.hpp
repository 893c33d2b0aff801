#pragma once

#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "rqcs/scheme.hpp"

namespace rqcs {

struct TrialResult {
  bool success = false;
  double seconds = 0;  // wall time of the key recovery
  int retries = 0;
};

// One self-contained experiment: deterministically generate a keypair and a
// signing oracle from trial_seed, then run the key recovery against them.
TrialResult run_attack_trial(const Params& params, std::span<const uint8_t> trial_seed,
                             int max_retries = 10);

struct BenchRow {
  std::string instance;
  int q = 2, m = 0, n = 0, w = 0, claimed_security = 0;
  int trials = 0;
  double success_rate = 0;
  double mean_kra_seconds = 0;    // over successful trials
  double median_kra_seconds = 0;  // over successful trials
  double mean_retries = 0;        // over all trials
};

// trials independent experiments with per-trial seeds derived from
// master_seed; jobs > 1 runs them on that many threads.
BenchRow bench_instance(const Params& params, int trials,
                        std::span<const uint8_t> master_seed, int jobs = 1,
                        int max_retries = 10);

std::string bench_csv(std::span<const BenchRow> rows);
nlohmann::json bench_to_json(std::span<const BenchRow> rows);

}  // namespace rqcs
