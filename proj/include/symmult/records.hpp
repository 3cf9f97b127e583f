#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "symmult/characters.hpp"
#include "symmult/numeric.hpp"
#include "symmult/partition.hpp"
#include "symmult/qsim.hpp"

namespace symmult {

using nlohmann::json;

inline constexpr int kSchemaVersion = 1;

inline json partition_to_json(const Partition& p) { return json(p.parts()); }
inline Partition partition_from_json(const json& j) {
    return Partition(j.get<std::vector<int>>());
}

inline json label_to_json(const IrrepLabel& l) {
    if (l.other) return json("other");
    json arr = json::array();
    for (const Partition& p : l.parts) arr.push_back(partition_to_json(p));
    return arr;
}

inline IrrepLabel label_from_json(const json& j) {
    if (j.is_string() && j.get<std::string>() == "other") return IrrepLabel::residual();
    IrrepLabel l;
    for (const json& p : j) l.parts.push_back(partition_from_json(p));
    return l;
}

inline std::string rational_to_string(const Rational& r) {
    return r.str();
}

inline Rational rational_from_string(const std::string& s) {
    return Rational(s);
}

inline json distribution_to_json(const ExactDistribution& d) {
    json entries = json::array();
    for (const auto& [label, p] : d.entries)
        entries.push_back({{"label", label_to_json(label)}, {"p", rational_to_string(p)}});
    return {{"entries", entries}, {"residual", rational_to_string(d.residual)}};
}

inline ExactDistribution distribution_from_json(const json& j) {
    ExactDistribution d;
    for (const json& e : j.at("entries"))
        d.entries.emplace(label_from_json(e.at("label")),
                          rational_from_string(e.at("p").get<std::string>()));
    d.residual = rational_from_string(j.at("residual").get<std::string>());
    return d;
}

/// One coefficient computation: every applicable backend's value, their
/// timings, and the agreed result. Inconsistent backends flag the record.
struct ResultRecord {
    std::string problem; // kostka | lr | kronecker | plethysm
    std::map<std::string, std::vector<int>> inputs;
    BigInt value = 0;
    std::map<std::string, BigInt> backends;
    std::map<std::string, std::uint64_t> timing_us;
    std::optional<ExactDistribution> distribution;
    std::uint64_t seed = 0;
    bool consistent = true;

    bool operator==(const ResultRecord& o) const {
        return problem == o.problem && inputs == o.inputs && value == o.value &&
               backends == o.backends && timing_us == o.timing_us &&
               consistent == o.consistent && seed == o.seed &&
               distribution.has_value() == o.distribution.has_value() &&
               (!distribution ||
                (distribution->entries == o.distribution->entries &&
                 distribution->residual == o.distribution->residual));
    }
};

inline json record_to_json(const ResultRecord& r) {
    json inputs = json::object();
    for (const auto& [name, parts] : r.inputs) inputs[name] = parts;
    json backends = json::object();
    for (const auto& [name, value] : r.backends) backends[name] = value.str();
    json timing = json::object();
    for (const auto& [name, us] : r.timing_us) timing[name] = us;
    json j = {{"schema", kSchemaVersion},
              {"problem", r.problem},
              {"inputs", inputs},
              {"value", r.value.str()},
              {"backends", backends},
              {"timing_us", timing},
              {"seed", r.seed},
              {"consistent", r.consistent}};
    if (r.distribution) j["distribution"] = distribution_to_json(*r.distribution);
    return j;
}

inline ResultRecord record_from_json(const json& j) {
    if (j.at("schema").get<int>() != kSchemaVersion)
        throw DomainError("record_from_json: unknown schema version");
    ResultRecord r;
    r.problem = j.at("problem").get<std::string>();
    for (const auto& [name, parts] : j.at("inputs").items())
        r.inputs.emplace(name, parts.get<std::vector<int>>());
    r.value = BigInt(j.at("value").get<std::string>());
    for (const auto& [name, value] : j.at("backends").items())
        r.backends.emplace(name, BigInt(value.get<std::string>()));
    for (const auto& [name, us] : j.at("timing_us").items())
        r.timing_us.emplace(name, us.get<std::uint64_t>());
    r.seed = j.at("seed").get<std::uint64_t>();
    r.consistent = j.at("consistent").get<bool>();
    if (j.contains("distribution"))
        r.distribution = distribution_from_json(j.at("distribution"));
    return r;
}

/// Serialized character table for golden files: classes in canonical
/// partition order, one row of exact integers per irrep label.
inline json character_table_to_json(const CharacterTable& t) {
    json classes = json::array();
    for (const CycleType& c : t.classes())
        classes.push_back(
            {{"cycles", c.cycles.parts()}, {"size", c.class_size.str()}});
    json rows = json::array();
    for (const Partition& label : t.labels()) {
        json values = json::array();
        for (const BigInt& v : t.row(label)) values.push_back(v.str());
        rows.push_back({{"label", label.parts()}, {"values", values}});
    }
    return {{"schema", kSchemaVersion}, {"n", t.n()}, {"classes", classes}, {"rows", rows}};
}

} // namespace symmult
