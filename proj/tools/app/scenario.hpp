#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "sddm/merger.hpp"
#include "sddm/region.hpp"

namespace sddm::app {

struct SimSection {
    long long horizon = 0;  // 0 means choose automatically from the tail bound
    long long paths = 200000;
    std::uint64_t seed = 42;

    bool operator==(const SimSection&) const = default;
};

struct MergerSection {
    std::string acquirer;
    std::string target;
    GrowthModel growth = GrowthModel::from_moments(0.0, 0.0);
    std::optional<double> discount_override;

    bool operator==(const MergerSection&) const = default;
};

// One JSON document describing companies, the merger, and optional sweep
// and simulation sections. Rates may be written as decimals or as "4%"
// strings; they are normalized to decimals at parse time.
struct Scenario {
    std::map<std::string, CompanyParams> companies;
    MergerSection merger;
    std::optional<SweepConfig> sweep;
    SimSection sim;

    bool operator==(const Scenario&) const = default;
};

Scenario parse_scenario(const std::string& json_text);
Scenario load_scenario(const std::string& path);

// Canonical JSON with all rates as decimals; parse(serialize(s)) == s.
std::string serialize_scenario(const Scenario& s);

// Resolves the acquirer/target names; throws ValidationError on unknown names.
MergerInputs merger_inputs(const Scenario& s);

}  // namespace sddm::app
