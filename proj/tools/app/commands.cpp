#include "app/commands.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "app/svg.hpp"
#include "app/table.hpp"
#include "sddm/errors.hpp"
#include "sddm/oracle.hpp"
#include "sddm/region.hpp"

namespace sddm::app {

namespace {

namespace fs = std::filesystem;

std::string write_artifact(const fs::path& dir, const std::string& name,
                           const std::string& content) {
    fs::create_directories(dir);
    const fs::path path = dir / name;
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << content;
    return path.string();
}

std::string table_text(const Table& t, OutputOptions::Format format) {
    return format == OutputOptions::Format::Csv ? table_csv(t) : table_json(t);
}

const char* table_ext(OutputOptions::Format format) {
    return format == OutputOptions::Format::Csv ? ".csv" : ".json";
}

SimSection effective_sim(const Scenario& sc, const OutputOptions& opt) {
    SimSection sim = sc.sim;
    if (opt.seed) sim.seed = *opt.seed;
    if (opt.paths) sim.paths = *opt.paths;
    if (opt.horizon) sim.horizon = *opt.horizon;
    return sim;
}

std::string sigma_tag(double sigma) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.4f", sigma);
    return buf;
}

// Curve cells print "empty" where no value exists; infinite bounds print
// "inf". Negative infinity (a nowhere-binding lower bound) also prints
// "empty".
Cell bound_cell(double v) {
    if (std::isfinite(v)) return Cell::number(v);
    return v > 0 ? Cell::text("inf") : Cell::text("empty");
}

Table region_table(const RegionReport& rep) {
    Table t;
    t.columns = {"g", "mean_lo", "mean_hi", "var_lo", "var_hi", "combined_lo", "combined_hi",
                 "valid"};
    for (const RegionSlice& s : rep.slices) {
        std::vector<Cell> row;
        row.push_back(Cell::number(s.g));
        if (s.valid) {
            row.push_back(bound_cell(s.raw.mean_lower));
            row.push_back(bound_cell(s.raw.mean_upper));
            row.push_back(bound_cell(s.raw.var_lower));
            row.push_back(bound_cell(s.raw.var_upper));
            if (s.combined.empty()) {
                row.push_back(Cell::text("empty"));
                row.push_back(Cell::text("empty"));
            } else {
                row.push_back(Cell::number(s.combined.lower()));
                row.push_back(bound_cell(s.combined.upper()));
            }
        } else {
            for (int i = 0; i < 6; ++i) row.push_back(Cell::text("empty"));
        }
        row.push_back(Cell::text(s.valid ? "1" : "0"));
        t.rows.push_back(std::move(row));
    }
    return t;
}

std::string region_summary_line(const RegionReport& rep) {
    std::ostringstream line;
    line << "sigma=" << fmt6(rep.sigma) << ": bargaining region: "
         << (rep.feasible ? "NONEMPTY" : "EMPTY");
    if (rep.feasible) {
        line << "; min feasible g=" << fmt6(*rep.g_feasible_min)
             << "; min accepted r=" << fmt6(*rep.min_accepted_r) << "; area=" << fmt6(rep.area);
        if (!rep.crossings.empty()) {
            line << "; crossings:";
            for (const Crossing& c : rep.crossings) {
                line << ' ' << curve_name(c.first) << 'x' << curve_name(c.second) << "@(g="
                     << fmt6(c.at.g) << ",r=" << fmt6(c.at.r) << ')';
            }
        }
    }
    return line.str();
}

Table value_table(const Scenario& sc, const std::optional<std::string>& only,
                  const MergerContext& ctx) {
    Table t;
    t.columns = {"company", "mean_price", "stddev_price", "cv", "delta", "equity_mean", "weight"};
    for (const auto& [name, params] : sc.companies) {
        if (only && name != *only) continue;
        Valuation v;
        try {
            v = value_company(params);
        } catch (const ValidationError& e) {
            throw ValidationError("company '" + name + "': " + e.what());
        } catch (const ModelDomainError& e) {
            throw ModelDomainError("company '" + name + "': " + e.what());
        }
        std::vector<Cell> row;
        row.push_back(Cell::text(name));
        row.push_back(Cell::number(v.mean_price));
        row.push_back(Cell::number(v.stddev_price));
        row.push_back(Cell::number(v.cv));
        row.push_back(Cell::number(v.delta));
        row.push_back(Cell::number(v.equity_mean));
        if (name == sc.merger.acquirer) {
            row.push_back(Cell::number(ctx.weight_acquirer));
        } else if (name == sc.merger.target) {
            row.push_back(Cell::number(ctx.weight_target));
        } else {
            row.push_back(Cell::text(""));
        }
        t.rows.push_back(std::move(row));
    }
    return t;
}

}  // namespace

OutputBundle cmd_value(const Scenario& sc, const std::optional<std::string>& company,
                       const OutputOptions& opt) {
    if (company && !sc.companies.contains(*company)) {
        throw ValidationError("unknown company name '" + *company + "'");
    }
    const MergerContext ctx = make_merger_context(merger_inputs(sc));
    const Table t = value_table(sc, company, ctx);

    OutputBundle bundle;
    bundle.files.push_back(write_artifact(opt.out_dir, std::string("value") + table_ext(opt.format),
                                          table_text(t, opt.format)));
    std::ostringstream summary;
    for (const auto& row : t.rows) {
        summary << row[0].txt << ": mean_price=" << fmt6(row[1].num)
                << " stddev_price=" << fmt6(row[2].num) << " cv=" << fmt6(row[3].num)
                << " equity_mean=" << fmt6(row[5].num);
        if (row[6].is_number) summary << " weight=" << fmt6(row[6].num);
        summary << '\n';
    }
    summary << "blended discount rate k_M=" << fmt6(ctx.k_m) << '\n';
    bundle.summary = summary.str();
    return bundle;
}

OutputBundle cmd_region(const Scenario& sc, const OutputOptions& opt) {
    if (!sc.sweep) throw ValidationError("scenario has no sweep section");
    const MergerInputs inputs = merger_inputs(sc);
    const std::vector<RegionReport> reports = sweep(inputs, *sc.sweep);

    OutputBundle bundle;
    std::ostringstream summary;
    for (const RegionReport& rep : reports) {
        const std::string tag = sigma_tag(rep.sigma);
        bundle.files.push_back(write_artifact(opt.out_dir,
                                              "region_sigma" + tag + table_ext(opt.format),
                                              table_text(region_table(rep), opt.format)));
        bundle.files.push_back(
            write_artifact(opt.out_dir, "region_sigma" + tag + ".svg", region_svg(rep)));
        summary << region_summary_line(rep) << '\n';
    }
    bundle.summary = summary.str();
    return bundle;
}

OutputBundle cmd_mc_check(const Scenario& sc, const OutputOptions& opt) {
    const SimSection sim = effective_sim(sc, opt);

    Table t;
    t.columns = {"company", "horizon",   "paths",      "closed_mean", "trunc_mean",
                 "mc_mean", "mc_mean_se", "mean_z",    "mean_pass",   "closed_var",
                 "trunc_var", "mc_var",  "mc_var_se",  "var_z",       "var_pass",
                 "tail_bound"};
    std::ostringstream summary;
    for (const auto& [name, params] : sc.companies) {
        Valuation v;
        try {
            v = value_company(params);
        } catch (const ModelDomainError& e) {
            throw ModelDomainError("company '" + name + "': " + e.what());
        }
        if (params.growth.moments_only()) {
            throw ValidationError(
                "company '" + name +
                "': mc-check needs an explicit-state growth model; a moments-only model cannot "
                "be sampled");
        }
        const long long horizon = sim.horizon > 0 ? sim.horizon : auto_horizon(params);
        SimConfig cfg;
        cfg.horizon = horizon;
        cfg.paths = sim.paths;
        cfg.seed = sim.seed;
        const MomentEstimate mc = simulate_price(params, cfg);
        const double closed_var = v.stddev_price * v.stddev_price;
        const double mean_z = std::abs(mc.mean - v.mean_price) / mc.mean_se;
        const double var_z = std::abs(mc.variance - closed_var) / mc.var_se;
        const bool mean_pass = mean_z <= 3.0;
        const bool var_pass = var_z <= 3.0;

        t.rows.push_back({Cell::text(name), Cell::number(static_cast<double>(horizon)),
                          Cell::number(static_cast<double>(sim.paths)),
                          Cell::number(v.mean_price), Cell::number(truncated_mean_exact(params, horizon)),
                          Cell::number(mc.mean), Cell::number(mc.mean_se), Cell::number(mean_z),
                          Cell::text(mean_pass ? "1" : "0"), Cell::number(closed_var),
                          Cell::number(truncated_variance_exact(params, horizon)),
                          Cell::number(mc.variance), Cell::number(mc.var_se), Cell::number(var_z),
                          Cell::text(var_pass ? "1" : "0"), Cell::number(mc.tail_bound)});
        summary << name << ": mean " << (mean_pass ? "PASS" : "FAIL") << " (z=" << fmt6(mean_z)
                << "), variance " << (var_pass ? "PASS" : "FAIL") << " (z=" << fmt6(var_z)
                << "), horizon=" << horizon << ", paths=" << sim.paths << '\n';
    }

    OutputBundle bundle;
    bundle.files.push_back(write_artifact(
        opt.out_dir, std::string("mc_check") + table_ext(opt.format), table_text(t, opt.format)));
    bundle.summary = summary.str();
    return bundle;
}

Scenario reference_scenario() {
    Scenario sc;
    CompanyParams a;
    a.dps0 = 0.6;
    a.discount_rate = 0.04;
    a.shares = 1000.0;
    a.growth = GrowthModel::from_states({-0.01, 0.03}, {0.5, 0.5});  // mean 1%, stddev 2%
    CompanyParams b;
    b.dps0 = 0.3;
    b.discount_rate = 0.08;
    b.shares = 2500.0;
    b.growth = GrowthModel::from_states({-0.06, 0.12}, {0.5, 0.5});  // mean 3%, stddev 9%
    sc.companies.emplace("A", a);
    sc.companies.emplace("B", b);
    sc.merger.acquirer = "A";
    sc.merger.target = "B";
    sc.merger.growth = GrowthModel::from_moments(0.03, 0.01);
    SweepConfig sweep;
    sweep.g_min = 0.0;
    sweep.g_max = 0.054;
    sweep.g_steps = 500;
    sweep.sigmas = {0.0, 0.01, 0.015, 0.02, 0.025};
    sweep.clamp_r_max = 2.2;
    sc.sweep = sweep;
    sc.sim.horizon = 0;
    sc.sim.paths = 200000;
    sc.sim.seed = 42;
    return sc;
}

OutputBundle cmd_reproduce_paper(const OutputOptions& opt) {
    const Scenario sc = reference_scenario();
    const MergerInputs inputs = merger_inputs(sc);
    const MergerContext ctx = make_merger_context(inputs);

    OutputBundle bundle;
    std::ostringstream summary;

    // Pre-merger valuation table.
    const Table values = value_table(sc, std::nullopt, ctx);
    bundle.files.push_back(write_artifact(
        opt.out_dir, std::string("value") + table_ext(opt.format), table_text(values, opt.format)));
    summary << "pre-merger valuations\n";
    for (const auto& row : values.rows) {
        summary << "  " << row[0].txt << ": mean_price=" << fmt6(row[1].num)
                << " stddev_price=" << fmt6(row[2].num) << " cv=" << fmt6(row[3].num)
                << " equity_mean=" << fmt6(row[5].num) << " weight=" << fmt6(row[6].num) << '\n';
    }
    summary << "  note: the published table prints cv_B = 0.3026; exact arithmetic from its own"
               " inputs gives "
            << fmt6(ctx.target.cv) << " (0.3024 rounded), the value its figures use\n";

    // Blended discount rate, reported against the two published roundings.
    summary << "blended discount rate k_M: computed " << fmt6(ctx.k_m)
            << "; published figures use 0.0573; the quoted 5.72% is a rounding inconsistency\n";

    // No-synergy threshold and the degenerate exchange ratio.
    const double g_ns = no_synergy_growth(ctx);
    const double point = r_star(ctx.acquirer, ctx.target);
    summary << "no-synergy growth: " << fmt6(g_ns) << " (feasibility threshold for g_M)\n";
    summary << "no-synergy exchange ratio r*: " << fmt6(point) << '\n';

    // Region sweep across the published sigma levels; sigma = 0 is the
    // deterministic baseline.
    const std::vector<RegionReport> reports = sweep(inputs, *sc.sweep);
    std::vector<double> feasible_min_r;
    for (const RegionReport& rep : reports) {
        const std::string tag = sigma_tag(rep.sigma);
        bundle.files.push_back(write_artifact(opt.out_dir,
                                              "region_sigma" + tag + table_ext(opt.format),
                                              table_text(region_table(rep), opt.format)));
        bundle.files.push_back(
            write_artifact(opt.out_dir, "region_sigma" + tag + ".svg", region_svg(rep)));
        summary << region_summary_line(rep);
        if (rep.sigma == 0.0) summary << " (deterministic baseline)";
        summary << '\n';
        if (rep.sigma > 0.0 && rep.feasible) feasible_min_r.push_back(*rep.min_accepted_r);
    }
    if (!feasible_min_r.empty()) {
        summary << "min accepted r over feasible sigma > 0:";
        for (double r : feasible_min_r) summary << ' ' << fmt6(r);
        summary << " (all < 0.5)\n";
    }

    bundle.summary = summary.str();
    bundle.files.push_back(write_artifact(opt.out_dir, "summary.txt", bundle.summary));
    return bundle;
}

}  // namespace sddm::app
