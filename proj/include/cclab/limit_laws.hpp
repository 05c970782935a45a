#pragma once

#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "cclab/counts.hpp"
#include "cclab/rng.hpp"
#include "cclab/stats.hpp"

namespace cclab {

/// Standard Gumbel CDF e^{-e^{-x}}; the marginal limit of each side's
/// normalized length (equivalently, by conjugation, largest part).
double gumbel_cdf(double x);

/// Joint limit of the two normalized side lengths: independent product
/// e^{-(e^{-x} + e^{-y})}.
double joint_perimeter_cdf(double x, double y);

/// Logistic CDF 1/(1 + e^{-x}); the limit of the normalized tilt.
double logistic_cdf(double x);

/// CDF of the sum of two independent standard Gumbel variables:
///   F(x) = 2 a K_1(2 a),  a = e^{-x/2},
/// with K_1 the modified Bessel function of the second kind. Equivalently
/// a * integral e^{-t} e^{-2 a cosh t} dt over the real line; the two
/// evaluation routes agree to 1e-8 and both are exposed.
double length_sum_cdf(double x);
double length_sum_cdf_quadrature(double x);

/// Detail record for the q-Pochhammer inequality sweep.
struct PochhammerBoundsDetail {
    std::int64_t trials = 0;
    std::int64_t bound1_violations = 0;
    std::int64_t bound2_violations = 0;
    double max_ratio_constant = 0.0; // max |R-1| / (tau (1 + e^{-2x} + e^{-2y}))
    double worst_tau = 0.0, worst_x = 0.0, worst_y = 0.0;
};

/// Randomized numeric check of three q-Pochhammer perimeter estimates with
/// tau in (0, 0.3], x,y in [-1, 5], q = e^{-tau}:
///   (1) (tau e^{-y} q; q)_inf <= e^{-q e^{-y}}
///   (2) product form: (..x..)(..y..) <= e^{-q(e^{-x} + e^{-y})}
///   (3) the mass ratio R against tau^2 e^{-(x+y)} e^{-(e^{-x}+e^{-y})}
///       deviates from 1 by at most C tau (1 + e^{-2x} + e^{-2y}); the
///       fitted C is the report statistic.
/// Failures are reported, never thrown.
GoFReport check_pochhammer_bounds(std::int64_t trials, Pcg64& rng,
                                  double ratio_constant_threshold = 5.0,
                                  PochhammerBoundsDetail* detail = nullptr);

/// Exact mixture weights w_k = p(k) p(n-k) / p2(n) of the two-sided model
/// conditioned on the plus side carrying k, plus the Gaussian scale
/// sigma_hat = (3/(4 pi^2))^{1/4} n^{3/4} they concentrate at.
struct MixtureWeights {
    std::int64_t n = 0;
    std::vector<mpq_class> weights; // index k = 0..n, exact, sums to 1
    double sigma_hat = 0.0;

    double weight_as_double(std::int64_t k) const;
    /// Exact sum of weights with |k - n/2| > z_cut, as a double.
    double tail_mass(double z_cut) const;
};

MixtureWeights mixture_weights(std::int64_t n, const CountTable& table);

} // namespace cclab
