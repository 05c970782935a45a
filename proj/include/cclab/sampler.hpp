#pragma once

#include <cstdint>
#include <utility>

#include "cclab/counts.hpp"
#include "cclab/partition.hpp"
#include "cclab/rng.hpp"

namespace cclab {

/// Tuning of the product measure on partition pairs: each frequency
/// X_k^{+/-} is an independent geometric with P(X = j) = q^{kj} (1 - q^k).
/// q is chosen so the random total size N concentrates near n, and
/// frequencies above k_max are truncated to zero with total-variation
/// cost below tail_eps.
struct BoltzmannParams {
    std::int64_t n = 0;
    double q = 0.0;
    double log_q = 0.0;
    double tail_eps = 0.0;
    std::int64_t k_max = 0;
};

/// q = exp(-pi / sqrt(3 n)); real-valued n so the inversion identities can
/// be probed directly.
double boltzmann_q(double n);

/// Single-partition tuning q = exp(-pi / sqrt(6 n)) (one geometric family
/// instead of two), used by the partition-only shape mode.
double partition_q(double n);

/// Exact truncation tail sum_{k>K} 2 q^k / (1 - q^k), evaluated through the
/// Lambert-series identity sum_j 2 q^{j(K+1)} / (1 - q^j).
double frequency_tail(double q, std::int64_t k_cut);

/// Build params for target size n: k_max is the least K whose truncation
/// tail is below tail_eps, so the truncated sampler is within tail_eps of
/// the full product measure in total variation.
BoltzmannParams make_params(std::int64_t n, double tail_eps = 1e-12);

/// Mean and variance of N under the tuned measure:
///   mu    = sum_k 2 k q^k / (1 - q^k)
///   sigma^2 = sum_k 2 k^2 q^k / (1 - q^k)^2
/// Values are partial sums to k_max; the exact dropped tails are reported
/// alongside and stay below tail_eps * n.
struct SizeMoments {
    double mean = 0.0;
    double variance = 0.0;
    double mean_tail = 0.0;
    double variance_tail = 0.0;
};

SizeMoments size_moments(const BoltzmannParams& params);

/// Fully converged moment sums at a raw q in (0,1), for direct checks.
double mean_size_at_q(double q);
double variance_size_at_q(double q);

/// One draw of the frequency vector: for k = 1..k_max draw X_k^+ then
/// X_k^- by inverse CDF (j = floor(log U / (k log q))). If abort_above >= 0
/// the draw stops early once the running size exceeds it (the caller is
/// rejecting on N anyway); the returned vector then reports the partial
/// size, which is already > abort_above.
FrequencyVector sample_boltzmann(const BoltzmannParams& params, Pcg64& rng,
                                 std::int64_t abort_above = -1);

/// Single random partition under the one-sided product measure with
/// q = partition_q(n), truncated at the analogous k_max.
Partition sample_partition(std::int64_t n, Pcg64& rng, double tail_eps = 1e-12);

/// Exact point mass of the event {N = n} under the tuned measure:
///   p2(n) q_n^n prod_k (1 - q_n^k)^2,
/// evaluated in the log domain with a bounded product tail. Needs p2 in the
/// table. This is the number that adjudicates the local limit constant.
double local_limit_exact(std::int64_t n, const CountTable& table);

/// sum_k log(1 - q^k), converged.
double log_euler_product(double q);

/// Default rejection budget: 100 x the (48 n^3)^{1/4} local-limit scale.
std::int64_t default_rejection_budget(std::int64_t n);

struct UniformPairSample {
    Partition minus;
    Partition plus;
    std::int64_t trials = 0;
};

/// Exact uniform sample over partition pairs with |minus| + |plus| = n:
/// repeat Boltzmann draws until N = n. Throws BudgetExceededError (carrying
/// the trial count) once `budget` trials are spent; budget < 0 means the
/// default budget.
UniformPairSample sample_uniform_pair(std::int64_t n, Pcg64& rng,
                                      const BoltzmannParams& params,
                                      std::int64_t budget = -1);
UniformPairSample sample_uniform_pair(std::int64_t n, Pcg64& rng,
                                      std::int64_t budget = -1);

} // namespace cclab
