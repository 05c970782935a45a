#include "cclab/shape.hpp"

#include <cassert>
#include <cmath>
#include <numbers>

#include "cclab/errors.hpp"

namespace cclab {

namespace {
constexpr double kPi = std::numbers::pi;

// Tick position in half-units (so everything stays integer-exact):
// 2 g_plus(i) = 2(l - #{parts > i}) + 1, and the minus side mirrored.
std::int64_t tick2_plus(const Partition& p, std::int64_t i) {
    return 2 * (p.length() - p.parts_greater_than(static_cast<double>(i))) + 1;
}
} // namespace

FittingConstants fit_constants(const StatSummary& summary, std::int64_t n) {
    FittingConstants fc;
    fc.a_plus = normalize_perimeter(summary.len_plus, n);
    fc.a_minus = normalize_perimeter(summary.len_minus, n);
    fc.c_plus = std::exp(-fc.a_plus);
    fc.c_minus = std::exp(-fc.a_minus);
    return fc;
}

Profile build_profile(const ConcaveComposition& comp) {
    const std::int64_t n = comp.total();
    if (n < 1) throw InvalidInputError("build_profile: total size must be >= 1");
    const double rt = std::sqrt(static_cast<double>(n));

    Profile prof;
    prof.n = n;
    prof.center = comp.center;

    std::int64_t area2 = 2 * comp.center; // running area in half-units

    // Minus side, leftmost step first: height i spans (g(i), g(i-1)].
    for (std::int64_t i = comp.minus.largest(); i >= 1; --i) {
        const std::int64_t hi2 = -tick2_plus(comp.minus, i - 1);
        const std::int64_t lo2 = -tick2_plus(comp.minus, i);
        if (hi2 > lo2) {
            prof.steps.push_back({static_cast<double>(lo2) / (2.0 * rt),
                                  static_cast<double>(hi2) / (2.0 * rt),
                                  static_cast<double>(i) / rt});
            area2 += i * (hi2 - lo2);
        }
    }
    prof.steps.push_back({-0.5 / rt, 0.5 / rt, static_cast<double>(comp.center) / rt});
    for (std::int64_t i = 1; i <= comp.plus.largest(); ++i) {
        const std::int64_t lo2 = tick2_plus(comp.plus, i - 1);
        const std::int64_t hi2 = tick2_plus(comp.plus, i);
        if (hi2 > lo2) {
            prof.steps.push_back({static_cast<double>(lo2) / (2.0 * rt),
                                  static_cast<double>(hi2) / (2.0 * rt),
                                  static_cast<double>(i) / rt});
            area2 += i * (hi2 - lo2);
        }
    }
    // The column areas account for every box exactly.
    assert(area2 == 2 * n);
    (void)area2;
    return prof;
}

double boundary_x_plus(const Partition& plus, std::int64_t n, double y) {
    const double rt = std::sqrt(static_cast<double>(n));
    const double g = static_cast<double>(plus.length()) -
                     static_cast<double>(plus.parts_greater_than(y * rt)) + 0.5;
    return g / rt;
}

double boundary_x_minus(const Partition& minus, std::int64_t n, double y) {
    return -boundary_x_plus(minus, n, y);
}

namespace {

double curve_abscissa(std::int64_t n, double a_side, double y) {
    if (!(y > 0.0)) throw InvalidInputError("limit_curve: y must be positive");
    const double scale = std::sqrt(3.0 * static_cast<double>(n)) / kPi;
    return (std::sqrt(3.0) / kPi) *
           (std::log(scale) + std::log1p(-std::exp(-kPi * y / std::sqrt(3.0))) + a_side);
}

} // namespace

std::vector<std::pair<double, double>> limit_curve_plus(std::int64_t n,
                                                        const FittingConstants& fc,
                                                        std::span<const double> y_grid) {
    std::vector<std::pair<double, double>> out;
    out.reserve(y_grid.size());
    for (double y : y_grid) out.emplace_back(curve_abscissa(n, fc.a_plus, y), y);
    return out;
}

std::vector<std::pair<double, double>> limit_curve_minus(std::int64_t n,
                                                         const FittingConstants& fc,
                                                         std::span<const double> y_grid) {
    std::vector<std::pair<double, double>> out;
    out.reserve(y_grid.size());
    for (double y : y_grid) out.emplace_back(-curve_abscissa(n, fc.a_minus, y), y);
    return out;
}

double temperley_x(double y) {
    if (!(y > 0.0)) throw InvalidInputError("temperley_x: y must be positive");
    return -(std::sqrt(6.0) / kPi) * std::log1p(-std::exp(-kPi * y / std::sqrt(6.0)));
}

double shape_sup_deviation(const Partition& minus, const Partition& plus, std::int64_t n,
                           std::span<const double> y_grid) {
    const double a_plus = normalize_perimeter(plus.length(), n);
    const double a_minus = normalize_perimeter(minus.length(), n);
    double sup = 0.0;
    for (double y : y_grid) {
        const double dev_p =
            std::fabs(boundary_x_plus(plus, n, y) - curve_abscissa(n, a_plus, y));
        const double dev_m =
            std::fabs(boundary_x_minus(minus, n, y) + curve_abscissa(n, a_minus, y));
        sup = std::max({sup, dev_p, dev_m});
    }
    return sup;
}

} // namespace cclab
