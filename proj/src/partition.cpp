#include "cclab/partition.hpp"

#include <algorithm>
#include <cassert>
#include <limits>

namespace cclab {

Partition Partition::from_parts(std::vector<std::int64_t> parts) {
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] <= 0) throw InvalidInputError("Partition: parts must be positive");
        if (i > 0 && parts[i] > parts[i - 1])
            throw InvalidInputError("Partition: parts must be non-increasing");
    }
    return from_sorted_unchecked(std::move(parts));
}

Partition Partition::from_sorted_unchecked(std::vector<std::int64_t> parts) {
    Partition p;
    p.parts_ = std::move(parts);
    p.size_ = 0;
    for (auto v : p.parts_) p.size_ += v;
    assert(std::is_sorted(p.parts_.rbegin(), p.parts_.rend()));
    return p;
}

std::int64_t Partition::smallest() const {
    return parts_.empty() ? std::numeric_limits<std::int64_t>::max() : parts_.back();
}

std::int64_t Partition::parts_greater_than(double y) const {
    // parts_ is non-increasing: count the prefix with part > y.
    auto it = std::partition_point(parts_.begin(), parts_.end(),
                                   [y](std::int64_t v) { return static_cast<double>(v) > y; });
    return static_cast<std::int64_t>(it - parts_.begin());
}

Partition conjugate(const Partition& p) {
    std::vector<std::int64_t> out;
    out.reserve(static_cast<std::size_t>(p.largest()));
    for (std::int64_t i = 1; i <= p.largest(); ++i)
        out.push_back(p.parts_greater_than(static_cast<double>(i) - 0.5));
    return Partition::from_sorted_unchecked(std::move(out));
}

ConcaveComposition ConcaveComposition::make(Partition minus, std::int64_t center,
                                            Partition plus) {
    if (center < 0) throw InvalidInputError("ConcaveComposition: center must be >= 0");
    if (minus.smallest() <= center)
        throw InvalidInputError("ConcaveComposition: minus side must exceed the center");
    if (plus.smallest() <= center)
        throw InvalidInputError("ConcaveComposition: plus side must exceed the center");
    ConcaveComposition c;
    c.minus = std::move(minus);
    c.center = center;
    c.plus = std::move(plus);
    return c;
}

std::int64_t FrequencyVector::total_size() const {
    std::int64_t n = 0;
    for (const auto& e : entries) n += e.k * (e.x_plus + e.x_minus);
    return n;
}

FrequencyVector FrequencyVector::from_partitions(const Partition& minus,
                                                 const Partition& plus) {
    FrequencyVector f;
    auto bump = [&f](std::int64_t k, bool is_plus) {
        auto it = std::lower_bound(f.entries.begin(), f.entries.end(), k,
                                   [](const Entry& e, std::int64_t key) { return e.k < key; });
        if (it == f.entries.end() || it->k != k) it = f.entries.insert(it, Entry{k, 0, 0});
        (is_plus ? it->x_plus : it->x_minus) += 1;
    };
    for (auto v : plus.parts()) bump(v, true);
    for (auto v : minus.parts()) bump(v, false);
    return f;
}

std::pair<Partition, Partition> frequencies_to_partitions(const FrequencyVector& f) {
    std::vector<std::int64_t> plus, minus;
    for (auto it = f.entries.rbegin(); it != f.entries.rend(); ++it) {
        for (std::int64_t j = 0; j < it->x_plus; ++j) plus.push_back(it->k);
        for (std::int64_t j = 0; j < it->x_minus; ++j) minus.push_back(it->k);
    }
    return {Partition::from_sorted_unchecked(std::move(minus)),
            Partition::from_sorted_unchecked(std::move(plus))};
}

} // namespace cclab
