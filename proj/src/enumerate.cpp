#include "cclab/enumerate.hpp"

#include <algorithm>
#include <string>

#include "cclab/errors.hpp"

namespace cclab {

namespace {

void collect_partitions(std::int64_t rem, std::int64_t max_part, std::int64_t min_part,
                        std::vector<std::int64_t>& acc, std::vector<Partition>& out) {
    if (rem == 0) {
        out.push_back(Partition::from_sorted_unchecked(acc));
        return;
    }
    for (std::int64_t q = std::min(rem, max_part); q >= min_part; --q) {
        acc.push_back(q);
        collect_partitions(rem - q, q, min_part, acc, out);
        acc.pop_back();
    }
}

} // namespace

std::vector<Partition> partitions_of(std::int64_t n, std::int64_t min_part) {
    if (n < 0) throw InvalidInputError("partitions_of: n must be >= 0");
    if (min_part < 1) throw InvalidInputError("partitions_of: min_part must be >= 1");
    std::vector<Partition> out;
    std::vector<std::int64_t> acc;
    collect_partitions(n, n, min_part, acc, out);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<ConcaveComposition> enumerate_concave(std::int64_t n, std::int64_t bound) {
    if (n < 0) throw InvalidInputError("enumerate_concave: n must be >= 0");
    if (n > bound)
        throw ResourceLimitError("enumerate_concave: n = " + std::to_string(n) +
                                 " exceeds the enumeration bound " + std::to_string(bound));
    std::vector<ConcaveComposition> out;
    if (n == 0) return out;

    for (std::int64_t c = 0; c <= n; ++c) {
        const std::int64_t r = n - c;
        // All minus-side candidates of any size 0..r with parts > c, in one
        // colex-sorted pool.
        std::vector<Partition> pool;
        for (std::int64_t a = 0; a <= r; ++a) {
            auto ps = partitions_of(a, c + 1);
            pool.insert(pool.end(), std::make_move_iterator(ps.begin()),
                        std::make_move_iterator(ps.end()));
        }
        std::sort(pool.begin(), pool.end());
        for (const auto& minus : pool) {
            for (const auto& plus : partitions_of(r - minus.size(), c + 1)) {
                ConcaveComposition comp;
                comp.minus = minus;
                comp.center = c;
                comp.plus = plus;
                out.push_back(std::move(comp));
            }
        }
    }
    return out;
}

} // namespace cclab
