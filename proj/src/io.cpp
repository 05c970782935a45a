#include "cclab/io.hpp"

#include <charconv>

#include "cclab/errors.hpp"

namespace cclab {

using ordered_json = nlohmann::ordered_json;

std::string format_double(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

namespace {

ordered_json counts_to_strings(const std::vector<BigCount>& col) {
    ordered_json arr = ordered_json::array();
    for (const auto& v : col) arr.push_back(to_decimal(v));
    return arr;
}

std::vector<BigCount> strings_to_counts(const ordered_json& arr) {
    std::vector<BigCount> out;
    out.reserve(arr.size());
    for (const auto& s : arr) out.push_back(from_decimal(s.get<std::string>()));
    return out;
}

} // namespace

ordered_json count_table_to_json(const CountTable& table) {
    ordered_json j;
    j["n_max"] = table.n_max;
    j["p"] = counts_to_strings(table.p);
    j["p2"] = counts_to_strings(table.p2);
    j["v"] = counts_to_strings(table.v);
    return j;
}

CountTable count_table_from_json(const ordered_json& j) {
    CountTable t;
    t.n_max = j.at("n_max").get<std::int64_t>();
    t.p = strings_to_counts(j.at("p"));
    t.p2 = strings_to_counts(j.at("p2"));
    t.v = strings_to_counts(j.at("v"));
    for (const auto* col : {&t.p, &t.p2, &t.v}) {
        if (!col->empty() && static_cast<std::int64_t>(col->size()) != t.n_max + 1)
            throw InvalidInputError("count table JSON: column length does not match n_max");
    }
    return t;
}

ordered_json composition_to_json(const ConcaveComposition& comp) {
    ordered_json j;
    j["minus"] = comp.minus.parts();
    j["c"] = comp.center;
    j["plus"] = comp.plus.parts();
    return j;
}

ordered_json summary_to_json(const StatSummary& s) {
    ordered_json j;
    j["len_minus"] = s.len_minus;
    j["len_plus"] = s.len_plus;
    j["length"] = s.length;
    j["tilt"] = s.tilt;
    j["largest_part"] = s.largest_part;
    j["half_perimeter"] = s.half_perimeter;
    j["size_minus"] = s.size_minus;
    j["size_plus"] = s.size_plus;
    return j;
}

ordered_json gof_to_json(const GoFReport& r) {
    ordered_json j;
    j["test"] = r.test;
    j["statistic"] = r.statistic;
    j["n"] = r.n_samples;
    j["threshold"] = r.threshold;
    j["pass"] = r.pass;
    return j;
}

} // namespace cclab
