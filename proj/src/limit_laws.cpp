#include "cclab/limit_laws.hpp"

#include <cmath>
#include <numbers>

#include "cclab/errors.hpp"
#include "cclab/special.hpp"

namespace cclab {

namespace {
constexpr double kPi = std::numbers::pi;

// log (z; q)_inf for 0 <= z < 1 by direct log1p summation.
double log_qp(double z, double q) {
    double acc = 0.0;
    double zqj = z;
    while (zqj > 1e-18) {
        acc += std::log1p(-zqj);
        zqj *= q;
    }
    return acc;
}
} // namespace

double gumbel_cdf(double x) { return std::exp(-std::exp(-x)); }

double joint_perimeter_cdf(double x, double y) {
    return std::exp(-(std::exp(-x) + std::exp(-y)));
}

double logistic_cdf(double x) { return 1.0 / (1.0 + std::exp(-x)); }

double length_sum_cdf(double x) {
    const double a = std::exp(-0.5 * x);
    if (a < 1e-8) return 1.0;            // 2aK1(2a) = 1 + O(a^2 ln a)
    if (2.0 * a > 1400.0) return 0.0;    // e^{-2a} underflows
    return 2.0 * a * std::cyl_bessel_k(1.0, 2.0 * a);
}

double length_sum_cdf_quadrature(double x) {
    const double a = std::exp(-0.5 * x);
    if (a < 1e-8) return 1.0;
    if (2.0 * a > 1400.0) return 0.0;
    const auto integrand = [a](double t) { return std::exp(-t - 2.0 * a * std::cosh(t)); };
    // Expand the window until both endpoints are dead, then re-check with a
    // wider window for stability.
    double t_hi = 2.0;
    while (integrand(t_hi) > 1e-18) t_hi += 1.0;
    double t_lo = -2.0;
    while (integrand(t_lo) > 1e-18) t_lo -= 1.0;
    const double v1 = a * integrate_adaptive(integrand, t_lo, t_hi, 1e-13);
    const double v2 = a * integrate_adaptive(integrand, t_lo - 4.0, t_hi + 4.0, 1e-13);
    if (std::fabs(v1 - v2) > 1e-9)
        throw NonConvergenceError("length_sum_cdf_quadrature: window instability");
    return v2;
}

GoFReport check_pochhammer_bounds(std::int64_t trials, Pcg64& rng,
                                  double ratio_constant_threshold,
                                  PochhammerBoundsDetail* detail) {
    if (trials < 1) throw InvalidInputError("check_pochhammer_bounds: trials must be >= 1");
    PochhammerBoundsDetail d;
    d.trials = trials;
    // Strict inequalities hold with margin ~ tau q e^{-y}/2 at worst; the
    // 1e-12 slack only absorbs float roundoff, far below that margin.
    const double slack = 1e-12;
    for (std::int64_t i = 0; i < trials; ++i) {
        const double tau = 0.3 * rng.uniform_open01();
        const double x = -1.0 + 6.0 * rng.uniform01();
        const double y = -1.0 + 6.0 * rng.uniform01();
        const double q = std::exp(-tau);
        const double ex = std::exp(-x), ey = std::exp(-y);
        const double l_y = log_qp(tau * ey * q, q);
        const double l_x = log_qp(tau * ex * q, q);
        if (l_y > -q * ey + slack) ++d.bound1_violations;
        if (l_x + l_y > -q * (ex + ey) + slack) ++d.bound2_violations;
        const double ratio = std::exp(l_x + l_y + ex + ey);
        const double c = std::fabs(ratio - 1.0) / (tau * (1.0 + ex * ex + ey * ey));
        if (c > d.max_ratio_constant) {
            d.max_ratio_constant = c;
            d.worst_tau = tau;
            d.worst_x = x;
            d.worst_y = y;
        }
    }
    if (detail) *detail = d;
    GoFReport r;
    r.test = "pochhammer-bounds";
    r.statistic = d.max_ratio_constant;
    r.n_samples = trials;
    r.threshold = ratio_constant_threshold;
    r.pass = d.bound1_violations == 0 && d.bound2_violations == 0 &&
             d.max_ratio_constant <= ratio_constant_threshold;
    return r;
}

double MixtureWeights::weight_as_double(std::int64_t k) const {
    return weights[static_cast<std::size_t>(k)].get_d();
}

double MixtureWeights::tail_mass(double z_cut) const {
    mpq_class acc(0);
    const double half = static_cast<double>(n) / 2.0;
    for (std::int64_t k = 0; k <= n; ++k) {
        if (std::fabs(static_cast<double>(k) - half) > z_cut)
            acc += weights[static_cast<std::size_t>(k)];
    }
    return acc.get_d();
}

MixtureWeights mixture_weights(std::int64_t n, const CountTable& table) {
    if (n < 1 || n > table.n_max || table.p.empty() || table.p2.empty())
        throw InvalidInputError("mixture_weights: table not filled to n");
    MixtureWeights w;
    w.n = n;
    w.sigma_hat = std::pow(3.0 / (4.0 * kPi * kPi), 0.25) *
                  std::pow(static_cast<double>(n), 0.75);
    w.weights.reserve(static_cast<std::size_t>(n) + 1);
    for (std::int64_t k = 0; k <= n; ++k) {
        mpq_class q(table.p[k] * table.p[n - k], table.p2[n]);
        q.canonicalize();
        w.weights.push_back(std::move(q));
    }
    return w;
}

} // namespace cclab
