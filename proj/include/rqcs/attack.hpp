#pragma once

#include <functional>
#include <optional>
#include <utility>

#include "rqcs/scheme.hpp"
#include "rqcs/subspace.hpp"

namespace rqcs {

// Candidate support of the secret vector behind u: writing the challenge
// support as <gamma_1, ..., gamma_{w_g}>, returns the intersection of the
// scaled supports gamma_i^{-1} . Supp(u).  For an honest signature this
// contains Supp(x) (resp. Supp(y)); generically it equals it.
Subspace recover_support(const RankVector& u, const RankVector& g);

struct SupportSystem {
  BitMatrix a;  // (n*m) x ((|alpha| + |beta|) * n)
  BitVector b;  // n*m
};

// Linearization of s = x' + h . y' over F_2 with x' constrained to the span
// of alpha coordinate-wise and y' to the span of beta: unknowns are the bit
// matrices X (|alpha| x n, laid out row-major first) and Y (|beta| x n).
SupportSystem build_support_system(const Params& params, const PublicKey& pk,
                                   std::span<const FieldElement> alpha,
                                   std::span<const FieldElement> beta);

// Solves the system; nullopt when inconsistent (wrong candidate supports).
std::optional<std::pair<BitMatrix, BitMatrix>> solve_support_matrices(
    const Params& params, const PublicKey& pk,
    std::span<const FieldElement> alpha, std::span<const FieldElement> beta);

// True iff (x', y') satisfies the public key equation with weight at most w.
bool is_equivalent_key(const Params& params, const PublicKey& pk,
                       const SecretKey& candidate);

struct AttackReport {
  std::string instance;
  bool success = false;
  int retries = 0;              // signatures consumed beyond the first
  int signatures_consumed = 0;
  double step1_seconds = 0;     // support recovery, summed over attempts
  double step2_seconds = 0;     // linear solve, summed over attempts
  double total_seconds = 0;     // wall time of the whole recovery
  std::string equivalent_or_exact;  // "exact" or "equivalent"; empty on failure
  SecretKey recovered;              // meaningful only when success
};

using SignatureSource = std::function<Signature()>;

// Full key recovery: pull signatures from the source, recover candidate
// supports from (u1, g) and (u2, g), and solve the public key equation over
// them.  Retries on a support of the wrong dimension or an inconsistent
// system, up to max_retries signatures in total.  If `planted` is given the
// report distinguishes an exact recovery from an equivalent one.
AttackReport recover_key(const Params& params, const PublicKey& pk,
                         const SignatureSource& source, int max_retries = 10,
                         const SecretKey* planted = nullptr);

// Signing with a recovered key: valid signatures without ever seeing sk.
Signature forge(const Params& params, const SecretKey& recovered,
                const PublicKey& pk, std::span<const uint8_t> msg,
                RandomStream& rng);

}  // namespace rqcs
