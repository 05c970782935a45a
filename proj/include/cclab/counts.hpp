#pragma once

#include <cstdint>
#include <vector>

#include "cclab/bigint.hpp"

namespace cclab {

/// Largest table size accepted before a ResourceLimitError is thrown.
/// Series construction is O(n_max^2) bigint additions; this cap keeps both
/// memory and time in a sane interactive range.
inline constexpr std::int64_t kDefaultTableLimit = 10000;

/// Exact counting table: p(n) partitions, p2(n) partition pairs, v(n)
/// concave compositions, each filled up to n_max. Unfilled columns are
/// empty vectors.
struct CountTable {
    std::int64_t n_max = 0;
    std::vector<BigCount> p;
    std::vector<BigCount> p2;
    std::vector<BigCount> v;
};

/// Fill p(0..n_max) from the Euler product prod_k (1 - q^k)^{-1}.
CountTable partition_counts(std::int64_t n_max, std::int64_t limit = kDefaultTableLimit);

/// Fill p2 by exact convolution p2[n] = sum_k p[k] p[n-k]. Requires p.
void pair_counts(CountTable& table);

/// Fill v with the concave composition counts
///   V(n) = sum_{c>=0} [q^n] q^c prod_{k>c} (1 - q^k)^{-2},
/// computed by sweeping c downward from n_max and absorbing one factor
/// (1 - q^{c+1})^{-2} per step (two prefix strides), O(n_max^2) additions
/// overall instead of a fresh product per c.
void concave_counts(CountTable& table);

/// Convenience: table with all three columns filled.
CountTable make_count_table(std::int64_t n_max, std::int64_t limit = kDefaultTableLimit);

/// Leading-order V(n) approximation sqrt(6) (12n)^{-5/4} e^{pi sqrt(12n)/3},
/// as a log so huge n stays finite.
double vn_asymptotic_log(std::int64_t n);
double vn_asymptotic(std::int64_t n);

/// Exact p2(n)/V(n) rendered to double; tends to 1 as n grows.
double central_part_zero_probability(const CountTable& table, std::int64_t n);

} // namespace cclab
