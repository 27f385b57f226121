#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "steiner/exact.hpp"

namespace steiner {

using OrderedJson = nlohmann::ordered_json;

inline constexpr const char* kReportSchemaVersion = "1";

struct GraphSummary {
    int n = 0;
    int m = 0;
    std::optional<std::string> family;
    std::vector<int> params;
    std::optional<std::uint64_t> seed;
};

// A single verified identity. Exact values are serialized as decimal
// strings ("p/q" for non-integral rationals), never as floating point.
// `applicable` is false for checks that were skipped with a reason (a
// theorem whose hypothesis the graph fails, or a capacity cap); those
// report pass = true since nothing was violated.
struct IdentityCheck {
    std::string name;
    std::optional<int> k;
    ExactRatio lhs;
    ExactRatio rhs;
    bool applicable = true;
    std::string note;

    IdentityCheck() = default;
    IdentityCheck(std::string name_, std::optional<int> k_, ExactRatio lhs_, ExactRatio rhs_)
        : name(std::move(name_)), k(k_), lhs(std::move(lhs_)), rhs(std::move(rhs_)) {}

    ExactRatio residual() const { return applicable ? ExactRatio(lhs - rhs) : ExactRatio(0); }
    bool pass() const { return !applicable || lhs == rhs; }
};

struct Report {
    std::string command;
    GraphSummary graph;
    OrderedJson metrics = OrderedJson::array();
    std::vector<IdentityCheck> identities;
    bool include_identities = false;
    std::vector<std::pair<std::string, long>> timings_ms;
    bool include_timings = false;

    bool all_passed() const {
        for (const auto& check : identities)
            if (!check.pass()) return false;
        return true;
    }

    OrderedJson to_json() const {
        OrderedJson doc;
        doc["schema_version"] = kReportSchemaVersion;
        doc["command"] = command;
        OrderedJson g;
        g["n"] = graph.n;
        g["m"] = graph.m;
        if (graph.family) {
            g["family"] = *graph.family;
            g["params"] = graph.params;
            if (graph.seed) g["seed"] = *graph.seed;
        }
        doc["graph"] = std::move(g);
        doc["metrics"] = metrics;
        if (include_identities) {
            OrderedJson list = OrderedJson::array();
            for (const auto& check : identities) {
                OrderedJson entry;
                entry["name"] = check.name;
                if (check.k) entry["k"] = *check.k;
                entry["lhs"] = to_decimal(check.lhs);
                entry["rhs"] = to_decimal(check.rhs);
                entry["residual"] = to_decimal(check.residual());
                entry["pass"] = check.pass();
                entry["applicable"] = check.applicable;
                if (!check.note.empty()) entry["note"] = check.note;
                list.push_back(std::move(entry));
            }
            doc["identities"] = std::move(list);
            doc["all_passed"] = all_passed();
        }
        if (include_timings) {
            OrderedJson t;
            for (const auto& [name, ms] : timings_ms) t[name] = ms;
            doc["timings_ms"] = std::move(t);
        }
        return doc;
    }

    std::string to_string() const { return to_json().dump(2) + "\n"; }
};

} // namespace steiner
