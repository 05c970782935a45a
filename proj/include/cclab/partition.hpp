#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "cclab/errors.hpp"

namespace cclab {

/// Integer partition: non-increasing sequence of positive parts.
/// The empty partition has size 0 and length 0.
class Partition {
public:
    Partition() = default;

    /// Validating constructor; throws InvalidInputError unless parts are
    /// positive and non-increasing.
    static Partition from_parts(std::vector<std::int64_t> parts);

    /// Trusted constructor for callers that already produce sorted parts
    /// (samplers, conversions). Checked only by assertions.
    static Partition from_sorted_unchecked(std::vector<std::int64_t> parts);

    const std::vector<std::int64_t>& parts() const { return parts_; }
    std::int64_t size() const { return size_; }
    std::int64_t length() const { return static_cast<std::int64_t>(parts_.size()); }
    bool empty() const { return parts_.empty(); }

    /// Largest part; 0 for the empty partition.
    std::int64_t largest() const { return parts_.empty() ? 0 : parts_.front(); }

    /// Smallest part; for the empty partition this is +infinity for the
    /// purposes of the "> center" constraint and is encoded as INT64_MAX.
    std::int64_t smallest() const;

    /// Number of parts strictly greater than y (works for real thresholds).
    std::int64_t parts_greater_than(double y) const;

    bool operator==(const Partition& rhs) const { return parts_ == rhs.parts_; }
    /// Colex order: for canonical non-increasing spellings this is plain
    /// lexicographic comparison of the part vectors.
    bool operator<(const Partition& rhs) const { return parts_ < rhs.parts_; }

private:
    std::vector<std::int64_t> parts_;
    std::int64_t size_ = 0;
};

/// Conjugate (transpose) partition; swaps largest part and length.
Partition conjugate(const Partition& p);

/// Concave composition (lambda^-, c, lambda^+): both sides are partitions
/// whose smallest part is strictly greater than the central part c >= 0.
struct ConcaveComposition {
    Partition minus;
    std::int64_t center = 0;
    Partition plus;

    /// Validating factory; throws InvalidInputError on constraint violation.
    static ConcaveComposition make(Partition minus, std::int64_t center, Partition plus);

    std::int64_t total() const { return minus.size() + center + plus.size(); }

    bool operator==(const ConcaveComposition& rhs) const {
        return center == rhs.center && minus == rhs.minus && plus == rhs.plus;
    }
};

/// Sparse frequency representation of a partition pair: k -> (X_k^+, X_k^-).
/// Entries are sorted by k and at least one of the two counts is nonzero.
struct FrequencyVector {
    struct Entry {
        std::int64_t k = 0;
        std::int64_t x_plus = 0;
        std::int64_t x_minus = 0;
        bool operator==(const Entry&) const = default;
    };

    std::vector<Entry> entries;

    /// N = sum_k k (X_k^+ + X_k^-).
    std::int64_t total_size() const;

    static FrequencyVector from_partitions(const Partition& minus, const Partition& plus);

    bool operator==(const FrequencyVector&) const = default;
};

/// Expand a frequency vector back into (lambda^-, lambda^+).
std::pair<Partition, Partition> frequencies_to_partitions(const FrequencyVector& f);

} // namespace cclab
