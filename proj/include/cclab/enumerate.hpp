#pragma once

#include <cstdint>
#include <vector>

#include "cclab/partition.hpp"

namespace cclab {

/// Default ceiling for exhaustive enumeration.
inline constexpr std::int64_t kDefaultEnumerateBound = 25;

/// Every concave composition of n exactly once, in canonical order:
/// ascending central part c, then colex on lambda^-, then colex on
/// lambda^+ (colex on partitions = lexicographic comparison of the
/// non-increasing part vectors, shorter prefix first).
///
/// n = 0 yields an empty list: only positive integers are composed.
/// Throws ResourceLimitError when n exceeds `bound`, InvalidInputError for
/// negative n.
std::vector<ConcaveComposition> enumerate_concave(std::int64_t n,
                                                  std::int64_t bound = kDefaultEnumerateBound);

/// All partitions of n with every part >= min_part, in colex order.
/// Exposed for test oracles and pair enumeration.
std::vector<Partition> partitions_of(std::int64_t n, std::int64_t min_part = 1);

} // namespace cclab
