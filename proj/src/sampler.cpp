#include "cclab/sampler.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <tuple>

#include "cclab/errors.hpp"

namespace cclab {

namespace {

constexpr double kPi = std::numbers::pi;

// Geometric tail sums via the Lambert-series rearrangement
//   sum_{k>K} f(k) q^k/(1-q^k)-type terms = sum_j sum_{k>K} f(k) q^{jk},
// where the inner sums have closed forms. Each evaluation is exact up to
// double roundoff; the j-loop stops once q^{j(K+1)} underflows the sum.

double tail_k_xk(double x, std::int64_t k_cut) {
    // sum_{k>K} k x^k = x^{K+1} [ (K+1)/(1-x) + x/(1-x)^2 ]
    const double k1 = static_cast<double>(k_cut + 1);
    const double xk = std::exp(k1 * std::log(x));
    return xk * (k1 / (1.0 - x) + x / ((1.0 - x) * (1.0 - x)));
}

double tail_k2_xk(double x, std::int64_t k_cut) {
    // sum_{k>K} k^2 x^k = x^{K+1} [ (K+1)^2/(1-x) + 2(K+1)x/(1-x)^2 + x(1+x)/(1-x)^3 ]
    const double k1 = static_cast<double>(k_cut + 1);
    const double xk = std::exp(k1 * std::log(x));
    const double om = 1.0 - x;
    return xk * (k1 * k1 / om + 2.0 * k1 * x / (om * om) + x * (1.0 + x) / (om * om * om));
}

} // namespace

double boltzmann_q(double n) {
    if (!(n > 0.0)) throw InvalidInputError("boltzmann_q: n must be positive");
    return std::exp(-kPi / std::sqrt(3.0 * n));
}

double partition_q(double n) {
    if (!(n > 0.0)) throw InvalidInputError("partition_q: n must be positive");
    return std::exp(-kPi / std::sqrt(6.0 * n));
}

double frequency_tail(double q, std::int64_t k_cut) {
    double acc = 0.0;
    const double log_q = std::log(q);
    for (std::int64_t j = 1;; ++j) {
        const double e = static_cast<double>(j) * static_cast<double>(k_cut + 1) * log_q;
        if (e < -745.0) break;
        const double qj = std::exp(static_cast<double>(j) * log_q);
        const double term = 2.0 * std::exp(e) / (1.0 - qj);
        acc += term;
        if (term < acc * 1e-18) break;
    }
    return acc;
}

BoltzmannParams make_params(std::int64_t n, double tail_eps) {
    if (n < 1) throw InvalidInputError("make_params: n must be >= 1");
    if (!(tail_eps > 0.0 && tail_eps < 1.0))
        throw InvalidInputError("make_params: tail_eps must be in (0,1)");
    BoltzmannParams p;
    p.n = n;
    p.q = boltzmann_q(static_cast<double>(n));
    p.log_q = -kPi / std::sqrt(3.0 * static_cast<double>(n));
    p.tail_eps = tail_eps;

    std::int64_t lo = 1, hi = 2;
    while (frequency_tail(p.q, hi) >= tail_eps) hi *= 2;
    while (lo < hi) {
        const std::int64_t mid = lo + (hi - lo) / 2;
        if (frequency_tail(p.q, mid) < tail_eps)
            hi = mid;
        else
            lo = mid + 1;
    }
    p.k_max = lo;
    return p;
}

namespace {

// Exact dropped tails of the moment sums past k_cut.
std::pair<double, double> moment_tails(double log_q, std::int64_t k_cut) {
    double mean_tail = 0.0, var_tail = 0.0;
    for (std::int64_t j = 1;; ++j) {
        if (static_cast<double>(j) * static_cast<double>(k_cut + 1) * log_q < -745.0) break;
        const double qj = std::exp(static_cast<double>(j) * log_q);
        const double t_mean = 2.0 * tail_k_xk(qj, k_cut);
        const double t_var = 2.0 * static_cast<double>(j) * tail_k2_xk(qj, k_cut);
        mean_tail += t_mean;
        var_tail += t_var;
        if (t_mean + t_var < 1e-18 * (mean_tail + var_tail + 1e-300)) break;
    }
    return {mean_tail, var_tail};
}

} // namespace

SizeMoments size_moments(const BoltzmannParams& params) {
    const double q = params.q;
    SizeMoments m;
    // The moment sums run at least to the sampler cutoff, then keep going
    // until their own dropped tail sits below tail_eps * n (at small n the
    // factor k makes the mean tail the binding constraint, not the TV one).
    const double tail_budget = params.tail_eps * static_cast<double>(params.n);
    std::int64_t k_cut = params.k_max;
    while (moment_tails(params.log_q, k_cut).first >= tail_budget) k_cut += 16;
    double qk = 1.0;
    for (std::int64_t k = 1; k <= k_cut; ++k) {
        // re-anchor q^k periodically against multiplicative drift
        qk = (k & 1023) == 0 ? std::exp(static_cast<double>(k) * params.log_q) : qk * q;
        const double om = 1.0 - qk;
        const double kk = static_cast<double>(k);
        m.mean += 2.0 * kk * qk / om;
        m.variance += 2.0 * kk * kk * qk / (om * om);
    }
    std::tie(m.mean_tail, m.variance_tail) = moment_tails(params.log_q, k_cut);
    return m;
}

double mean_size_at_q(double q) {
    if (!(q > 0.0 && q < 1.0)) throw InvalidInputError("mean_size_at_q: q must be in (0,1)");
    double acc = 0.0, qk = 1.0;
    for (std::int64_t k = 1;; ++k) {
        qk *= q;
        const double term = 2.0 * static_cast<double>(k) * qk / (1.0 - qk);
        acc += term;
        if (term < acc * 1e-17 && k > 8) break;
    }
    return acc;
}

double variance_size_at_q(double q) {
    if (!(q > 0.0 && q < 1.0))
        throw InvalidInputError("variance_size_at_q: q must be in (0,1)");
    double acc = 0.0, qk = 1.0;
    for (std::int64_t k = 1;; ++k) {
        qk *= q;
        const double om = 1.0 - qk;
        const double term = 2.0 * static_cast<double>(k) * static_cast<double>(k) * qk / (om * om);
        acc += term;
        if (term < acc * 1e-17 && k > 8) break;
    }
    return acc;
}

FrequencyVector sample_boltzmann(const BoltzmannParams& params, Pcg64& rng,
                                 std::int64_t abort_above) {
    FrequencyVector f;
    std::int64_t total = 0;
    double qk = 1.0;
    for (std::int64_t k = 1; k <= params.k_max; ++k) {
        qk = (k & 1023) == 0 ? std::exp(static_cast<double>(k) * params.log_q) : qk * params.q;
        const double u_plus = rng.uniform_open01();
        const double u_minus = rng.uniform_open01();
        std::int64_t xp = 0, xm = 0;
        if (u_plus <= qk)
            xp = static_cast<std::int64_t>(std::log(u_plus) / (static_cast<double>(k) * params.log_q));
        if (u_minus <= qk)
            xm = static_cast<std::int64_t>(std::log(u_minus) / (static_cast<double>(k) * params.log_q));
        if (xp != 0 || xm != 0) {
            f.entries.push_back({k, xp, xm});
            total += k * (xp + xm);
            if (abort_above >= 0 && total > abort_above) break;
        }
    }
    return f;
}

Partition sample_partition(std::int64_t n, Pcg64& rng, double tail_eps) {
    if (n < 1) throw InvalidInputError("sample_partition: n must be >= 1");
    const double q = partition_q(static_cast<double>(n));
    const double log_q = -kPi / std::sqrt(6.0 * static_cast<double>(n));
    std::int64_t lo = 1, hi = 2;
    while (frequency_tail(q, hi) >= 2.0 * tail_eps) hi *= 2;
    while (lo < hi) {
        const std::int64_t mid = lo + (hi - lo) / 2;
        if (frequency_tail(q, mid) < 2.0 * tail_eps)
            hi = mid;
        else
            lo = mid + 1;
    }
    std::vector<std::int64_t> parts;
    double qk = 1.0;
    for (std::int64_t k = 1; k <= lo; ++k) {
        qk = (k & 1023) == 0 ? std::exp(static_cast<double>(k) * log_q) : qk * q;
        const double u = rng.uniform_open01();
        if (u <= qk) {
            const auto x =
                static_cast<std::int64_t>(std::log(u) / (static_cast<double>(k) * log_q));
            for (std::int64_t i = 0; i < x; ++i) parts.push_back(k);
        }
    }
    std::reverse(parts.begin(), parts.end());
    return Partition::from_sorted_unchecked(std::move(parts));
}

double log_euler_product(double q) {
    if (!(q > 0.0 && q < 1.0))
        throw InvalidInputError("log_euler_product: q must be in (0,1)");
    double acc = 0.0, qk = 1.0;
    for (std::int64_t k = 1;; ++k) {
        qk *= q;
        acc += std::log1p(-qk);
        if (qk < 1e-22) break;
    }
    return acc;
}

double local_limit_exact(std::int64_t n, const CountTable& table) {
    if (n < 1 || n > table.n_max || table.p2.empty())
        throw InvalidInputError("local_limit_exact: p2 not filled to n");
    const double q = boltzmann_q(static_cast<double>(n));
    const double log_q = -kPi / std::sqrt(3.0 * static_cast<double>(n));
    return std::exp(log_big(table.p2[n]) + static_cast<double>(n) * log_q +
                    2.0 * log_euler_product(q));
}

std::int64_t default_rejection_budget(std::int64_t n) {
    const double scale = std::pow(48.0 * std::pow(static_cast<double>(n), 3.0), 0.25);
    return 100 * static_cast<std::int64_t>(std::ceil(scale));
}

UniformPairSample sample_uniform_pair(std::int64_t n, Pcg64& rng,
                                      const BoltzmannParams& params, std::int64_t budget) {
    if (n < 1) throw InvalidInputError("sample_uniform_pair: n must be >= 1");
    if (budget < 0) budget = default_rejection_budget(n);
    for (std::int64_t trial = 1; trial <= budget; ++trial) {
        FrequencyVector f = sample_boltzmann(params, rng, n);
        if (f.total_size() == n) {
            auto [minus, plus] = frequencies_to_partitions(f);
            return UniformPairSample{std::move(minus), std::move(plus), trial};
        }
    }
    throw BudgetExceededError("sample_uniform_pair: no acceptance within " +
                                  std::to_string(budget) + " trials at n = " +
                                  std::to_string(n),
                              budget);
}

UniformPairSample sample_uniform_pair(std::int64_t n, Pcg64& rng, std::int64_t budget) {
    return sample_uniform_pair(n, rng, make_params(n), budget);
}

} // namespace cclab
