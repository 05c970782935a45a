#include "cclab/counts.hpp"

#include <cmath>
#include <numbers>

#include "cclab/errors.hpp"
#include "cclab/series.hpp"

namespace cclab {

namespace {

void check_limit(std::int64_t n_max, std::int64_t limit) {
    if (n_max < 0) throw InvalidInputError("count table: n_max must be >= 0");
    if (n_max > limit)
        throw ResourceLimitError("count table: n_max " + std::to_string(n_max) +
                                 " exceeds the configured limit " + std::to_string(limit));
}

} // namespace

CountTable partition_counts(std::int64_t n_max, std::int64_t limit) {
    check_limit(n_max, limit);
    SeriesPoly s = SeriesPoly::one(n_max);
    for (std::int64_t k = 1; k <= n_max; ++k) s.divide_one_minus(k);
    CountTable t;
    t.n_max = n_max;
    t.p = s.coeffs();
    return t;
}

void pair_counts(CountTable& table) {
    if (static_cast<std::int64_t>(table.p.size()) != table.n_max + 1)
        throw InvalidInputError("pair_counts: p column must be filled first");
    table.p2.assign(static_cast<std::size_t>(table.n_max) + 1, BigCount(0));
    for (std::int64_t n = 0; n <= table.n_max; ++n) {
        BigCount acc = 0;
        for (std::int64_t k = 0; k <= n; ++k) acc += table.p[k] * table.p[n - k];
        table.p2[n] = acc;
    }
}

void concave_counts(CountTable& table) {
    const std::int64_t n_max = table.n_max;
    table.v.assign(static_cast<std::size_t>(n_max) + 1, BigCount(0));
    // Sweep the central part downward, keeping S = prod_{k>c} (1-q^k)^{-2}
    // truncated at n_max. At c = n_max the product is 1; stepping c down by
    // one absorbs (1 - q^{c+1})^{-2}, i.e. two prefix strides.
    SeriesPoly s = SeriesPoly::one(n_max);
    for (std::int64_t c = n_max; c >= 0; --c) {
        for (std::int64_t m = c; m <= n_max; ++m) table.v[m] += s.coeff(m - c);
        if (c >= 1) {
            s.divide_one_minus(c);
            s.divide_one_minus(c);
        }
    }
}

CountTable make_count_table(std::int64_t n_max, std::int64_t limit) {
    CountTable t = partition_counts(n_max, limit);
    pair_counts(t);
    concave_counts(t);
    return t;
}

double vn_asymptotic_log(std::int64_t n) {
    if (n < 1) throw InvalidInputError("vn_asymptotic: n must be >= 1");
    const double nn = static_cast<double>(n);
    return 0.5 * std::log(6.0) - 1.25 * std::log(12.0 * nn) +
           std::numbers::pi * std::sqrt(12.0 * nn) / 3.0;
}

double vn_asymptotic(std::int64_t n) { return std::exp(vn_asymptotic_log(n)); }

double central_part_zero_probability(const CountTable& table, std::int64_t n) {
    if (n < 0 || n > table.n_max || table.p2.empty() || table.v.empty())
        throw InvalidInputError("central_part_zero_probability: counts not filled to n");
    return ratio_as_double(table.p2[n], table.v[n]);
}

} // namespace cclab
