#pragma once

#include <string>

#include "json.hpp"

#include "cclab/counts.hpp"
#include "cclab/partition.hpp"
#include "cclab/stats.hpp"

// nlohmann::ordered_json keeps insertion order, so emitted bytes depend only
// on the data, never on hashing; that is what makes rerun outputs identical.

namespace cclab {

/// Locale-independent shortest-round-trip formatting for doubles.
std::string format_double(double v);

nlohmann::ordered_json count_table_to_json(const CountTable& table);
CountTable count_table_from_json(const nlohmann::ordered_json& j);

nlohmann::ordered_json composition_to_json(const ConcaveComposition& comp);
nlohmann::ordered_json summary_to_json(const StatSummary& s);
nlohmann::ordered_json gof_to_json(const GoFReport& r);

} // namespace cclab
