#pragma once

#include <optional>
#include <string>
#include <vector>

#include "app/scenario.hpp"

namespace sddm::app {

struct OutputOptions {
    std::string out_dir = "out";
    enum class Format { Csv, Json };
    Format format = Format::Csv;
    // CLI overrides of the scenario's sim section.
    std::optional<std::uint64_t> seed;
    std::optional<long long> paths;
    std::optional<long long> horizon;  // 0 means auto
};

struct OutputBundle {
    std::vector<std::string> files;  // artifact paths, in write order
    std::string summary;             // human-readable report
};

// Pre-merger valuation table (optionally restricted to one company).
OutputBundle cmd_value(const Scenario& sc, const std::optional<std::string>& company,
                       const OutputOptions& opt);

// Bargaining-region sweep: one CSV and one SVG per sigma.
OutputBundle cmd_region(const Scenario& sc, const OutputOptions& opt);

// Closed form vs exact truncated moments vs Monte Carlo, per company.
OutputBundle cmd_mc_check(const Scenario& sc, const OutputOptions& opt);

// Regenerates the bundled reference case end to end: valuation table,
// blended discount rate, no-synergy point, and the full region sweep.
OutputBundle cmd_reproduce_paper(const OutputOptions& opt);

// The reference inputs used by cmd_reproduce_paper, with explicit
// two-state growth models so the same scenario also drives mc-check.
Scenario reference_scenario();

}  // namespace sddm::app
