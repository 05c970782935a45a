#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "cclab/partition.hpp"
#include "cclab/stats.hpp"

namespace cclab {

/// Per-sample fitting constants C_+/- = e^{-A_+/-}, where A_+/- is the
/// normalized perimeter of the corresponding side. They translate each
/// branch of the limit curve to the realized side length.
struct FittingConstants {
    double c_plus = 1.0;
    double c_minus = 1.0;
    double a_plus = 0.0; // -ln c_plus
    double a_minus = 0.0;
};

FittingConstants fit_constants(const StatSummary& summary, std::int64_t n);

/// One step of the normalized graphical representation.
struct ProfileStep {
    double x_lo = 0.0;
    double x_hi = 0.0;
    double y = 0.0;
};

/// Normalized graphical representation G~_v of a concave composition:
/// column heights against positions, both shrunk by sqrt(n), so the area
/// under the steps (including the central cell) is exactly 1.
///
/// Tick positions come from g_{lambda^+/-}(y) = +/-(l - x_lambda(y) + 1/2)
/// with x_lambda(y) the number of parts exceeding y; the step of height i
/// spans the interval between consecutive ticks, right-continuous at edges.
struct Profile {
    std::int64_t n = 0;
    std::int64_t center = 0;
    std::vector<ProfileStep> steps; // left to right, central cell included
    std::vector<std::pair<double, double>> limit_plus;  // optional overlay
    std::vector<std::pair<double, double>> limit_minus; // optional overlay
};

Profile build_profile(const ConcaveComposition& comp);

/// Normalized boundary abscissa of one side at height y (in units of
/// sqrt(n)): g_{lambda^+/-}(y sqrt(n)) / sqrt(n). Positive side returns a
/// positive coordinate, negative side a negative one.
double boundary_x_plus(const Partition& plus, std::int64_t n, double y);
double boundary_x_minus(const Partition& minus, std::int64_t n, double y);

/// The two branches of the finite-n limit curve in normalized coordinates:
///   x(y) = +/- (sqrt(3)/pi) [ ln(sqrt(3n)/pi) + ln(1 - e^{-pi y/sqrt(3)}) + A_{+/-} ]
/// so that as y -> infinity each branch ends at the realized normalized
/// side length. y must be positive.
std::vector<std::pair<double, double>> limit_curve_plus(std::int64_t n,
                                                        const FittingConstants& fc,
                                                        std::span<const double> y_grid);
std::vector<std::pair<double, double>> limit_curve_minus(std::int64_t n,
                                                         const FittingConstants& fc,
                                                         std::span<const double> y_grid);

/// Temperley's single-partition limit curve e^{-pi x/sqrt6} + e^{-pi y/sqrt6} = 1
/// solved for x at height y > 0.
double temperley_x(double y);

/// Sup over the y-grid, over both sides, of the horizontal deviation
/// between the realized boundary and the limit curve fitted with this
/// sample's own constants.
double shape_sup_deviation(const Partition& minus, const Partition& plus, std::int64_t n,
                           std::span<const double> y_grid);

} // namespace cclab
