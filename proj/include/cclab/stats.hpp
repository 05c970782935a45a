#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "cclab/partition.hpp"

namespace cclab {

/// The observables of a concave composition.
///
/// length counts the central part, so it is len_minus + len_plus + 1.
/// tilt follows the sign convention len_plus - len_minus; the limit-law
/// normalization below takes the opposite difference explicitly, so both
/// conventions stay visible and no silent sign flip can creep in.
/// largest_part is 0 when both sides are empty, making the half-perimeter
/// of the bare central part 1 (its length alone).
struct StatSummary {
    std::int64_t len_minus = 0;
    std::int64_t len_plus = 0;
    std::int64_t length = 0;
    std::int64_t tilt = 0;
    std::int64_t largest_part = 0;
    std::int64_t half_perimeter = 0;
    std::int64_t size_minus = 0;
    std::int64_t size_plus = 0;
};

StatSummary summarize(const ConcaveComposition& comp);

/// Inverse of the perimeter scaling f_n(x) = (sqrt(3n)/pi) (x + ln(sqrt(3n)/pi)):
/// maps a one-sided length l to x = pi l / sqrt(3n) - ln(sqrt(3n)/pi).
double normalize_perimeter(std::int64_t l, std::int64_t n);

/// Linear tilt scaling x = pi t / sqrt(3n), applied to len_minus - len_plus.
double normalize_tilt(std::int64_t t, std::int64_t n);

/// Normalization of the two-sided length sum l = len_minus + len_plus
/// (central part excluded): x = pi l / sqrt(3n) - 2 ln(sqrt(3n)/pi).
/// Each side concentrates at (sqrt(3n)/pi) ln(sqrt(3n)/pi), so the sum is
/// centered at twice that.
double normalize_length_sum(std::int64_t l, std::int64_t n);

/// Right-continuous empirical CDF over a sorted copy of the samples.
class EmpiricalCDF {
public:
    explicit EmpiricalCDF(std::vector<double> samples);

    double operator()(double x) const;
    std::int64_t size() const { return static_cast<std::int64_t>(sorted_.size()); }
    const std::vector<double>& sorted() const { return sorted_; }

private:
    std::vector<double> sorted_;
};

/// Outcome of a goodness-of-fit check; pass <=> statistic <= threshold.
struct GoFReport {
    std::string test;
    double statistic = 0.0;
    std::int64_t n_samples = 0;
    double threshold = 0.0;
    bool pass = false;
};

/// Two-sided Kolmogorov-Smirnov sup-distance, evaluated exactly at the
/// jump points of the ECDF.
GoFReport ks_distance(const EmpiricalCDF& ecdf, const std::function<double(double)>& cdf,
                      double threshold, const std::string& name = "ks");

/// Pearson chi-square of observed counts against expected cell
/// probabilities (which must sum to 1).
GoFReport chi_square(const std::vector<std::int64_t>& observed,
                     const std::vector<double>& expected_probs, double threshold,
                     const std::string& name = "chi-square");

} // namespace cclab
