#include "cclab/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "cclab/errors.hpp"

namespace cclab {

namespace {
constexpr double kPi = std::numbers::pi;
}

StatSummary summarize(const ConcaveComposition& comp) {
    StatSummary s;
    s.len_minus = comp.minus.length();
    s.len_plus = comp.plus.length();
    s.length = s.len_minus + s.len_plus + 1;
    s.tilt = s.len_plus - s.len_minus;
    s.largest_part = std::max(comp.minus.largest(), comp.plus.largest());
    s.half_perimeter = s.length + s.largest_part;
    s.size_minus = comp.minus.size();
    s.size_plus = comp.plus.size();
    return s;
}

double normalize_perimeter(std::int64_t l, std::int64_t n) {
    if (n < 1) throw InvalidInputError("normalize_perimeter: n must be >= 1");
    const double scale = std::sqrt(3.0 * static_cast<double>(n)) / kPi;
    return static_cast<double>(l) / scale - std::log(scale);
}

double normalize_tilt(std::int64_t t, std::int64_t n) {
    if (n < 1) throw InvalidInputError("normalize_tilt: n must be >= 1");
    return kPi * static_cast<double>(t) / std::sqrt(3.0 * static_cast<double>(n));
}

double normalize_length_sum(std::int64_t l, std::int64_t n) {
    if (n < 1) throw InvalidInputError("normalize_length_sum: n must be >= 1");
    const double scale = std::sqrt(3.0 * static_cast<double>(n)) / kPi;
    return static_cast<double>(l) / scale - 2.0 * std::log(scale);
}

EmpiricalCDF::EmpiricalCDF(std::vector<double> samples) : sorted_(std::move(samples)) {
    if (sorted_.empty()) throw InvalidInputError("EmpiricalCDF: empty sample");
    std::sort(sorted_.begin(), sorted_.end());
}

double EmpiricalCDF::operator()(double x) const {
    const auto it = std::upper_bound(sorted_.begin(), sorted_.end(), x);
    return static_cast<double>(it - sorted_.begin()) / static_cast<double>(sorted_.size());
}

GoFReport ks_distance(const EmpiricalCDF& ecdf, const std::function<double(double)>& cdf,
                      double threshold, const std::string& name) {
    const auto& xs = ecdf.sorted();
    const double m = static_cast<double>(xs.size());
    double d = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double f = cdf(xs[i]);
        // gap above (ECDF jumps to (i+1)/m at x_i) and gap below (limit i/m)
        d = std::max(d, (static_cast<double>(i) + 1.0) / m - f);
        d = std::max(d, f - static_cast<double>(i) / m);
    }
    GoFReport r;
    r.test = name;
    r.statistic = d;
    r.n_samples = ecdf.size();
    r.threshold = threshold;
    r.pass = d <= threshold;
    return r;
}

GoFReport chi_square(const std::vector<std::int64_t>& observed,
                     const std::vector<double>& expected_probs, double threshold,
                     const std::string& name) {
    if (observed.empty() || observed.size() != expected_probs.size())
        throw InvalidInputError("chi_square: observed/expected size mismatch");
    std::int64_t m = 0;
    for (auto o : observed) m += o;
    if (m <= 0) throw InvalidInputError("chi_square: empty sample");
    double stat = 0.0;
    for (std::size_t i = 0; i < observed.size(); ++i) {
        const double expect = static_cast<double>(m) * expected_probs[i];
        if (expect <= 0.0) throw InvalidInputError("chi_square: nonpositive expected cell");
        const double diff = static_cast<double>(observed[i]) - expect;
        stat += diff * diff / expect;
    }
    GoFReport r;
    r.test = name;
    r.statistic = stat;
    r.n_samples = m;
    r.threshold = threshold;
    r.pass = stat <= threshold;
    return r;
}

} // namespace cclab
