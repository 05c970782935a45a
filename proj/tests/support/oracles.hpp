#pragma once

// Independent test oracles. These deliberately avoid the library's own
// algorithms: the partition numbers come from the pentagonal-number
// recurrence instead of the Euler-product stride, and pair enumeration is a
// direct double loop over partition lists.

#include <cstdint>
#include <utility>
#include <vector>

#include "cclab/bigint.hpp"
#include "cclab/enumerate.hpp"
#include "cclab/partition.hpp"

namespace cclab::testing {

/// p(0..n_max) via p(n) = sum_j (-1)^{j+1} [p(n - j(3j-1)/2) + p(n - j(3j+1)/2)].
inline std::vector<BigCount> pentagonal_partition_numbers(std::int64_t n_max) {
    std::vector<BigCount> p(static_cast<std::size_t>(n_max) + 1);
    p[0] = 1;
    for (std::int64_t n = 1; n <= n_max; ++n) {
        BigCount acc = 0;
        for (std::int64_t j = 1;; ++j) {
            const std::int64_t g1 = j * (3 * j - 1) / 2;
            const std::int64_t g2 = j * (3 * j + 1) / 2;
            if (g1 > n && g2 > n) break;
            if (j % 2 == 1) {
                if (g1 <= n) acc += p[n - g1];
                if (g2 <= n) acc += p[n - g2];
            } else {
                if (g1 <= n) acc -= p[n - g1];
                if (g2 <= n) acc -= p[n - g2];
            }
        }
        p[n] = acc;
    }
    return p;
}

/// All ordered pairs (minus, plus) with |minus| + |plus| = n, in a
/// deterministic order. Cardinality is p2(n).
inline std::vector<std::pair<Partition, Partition>> all_partition_pairs(std::int64_t n) {
    std::vector<std::pair<Partition, Partition>> out;
    for (std::int64_t a = 0; a <= n; ++a) {
        for (const auto& minus : partitions_of(a)) {
            for (const auto& plus : partitions_of(n - a)) out.emplace_back(minus, plus);
        }
    }
    return out;
}

} // namespace cclab::testing
