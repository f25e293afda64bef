#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "app/commands.hpp"
#include "sddm/errors.hpp"

namespace {

struct CommonArgs {
    std::string config;
    std::string out = "out";
    std::string format = "csv";
    std::string horizon = "auto";
    std::uint64_t seed = 0;
    long long paths = 0;
    bool seed_given = false;
    bool paths_given = false;
    bool horizon_given = false;
};

void add_common(CLI::App* cmd, CommonArgs& args, bool needs_config) {
    auto* config = cmd->add_option("--config", args.config, "scenario JSON file");
    if (needs_config) config->required();
    cmd->add_option("--out", args.out, "output directory (default: out)");
    cmd->add_option("--format", args.format, "table format: csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--seed", args.seed, "override simulation seed")
        ->each([&](const std::string&) { args.seed_given = true; });
    cmd->add_option("--paths", args.paths, "override simulation path count")
        ->each([&](const std::string&) { args.paths_given = true; });
    cmd->add_option("--horizon", args.horizon, "simulation horizon: a period count or 'auto'")
        ->each([&](const std::string&) { args.horizon_given = true; });
}

sddm::app::OutputOptions output_options(const CommonArgs& args) {
    sddm::app::OutputOptions opt;
    opt.out_dir = args.out;
    opt.format = args.format == "json" ? sddm::app::OutputOptions::Format::Json
                                       : sddm::app::OutputOptions::Format::Csv;
    if (args.seed_given) opt.seed = args.seed;
    if (args.paths_given) opt.paths = args.paths;
    if (args.horizon_given) {
        if (args.horizon == "auto") {
            opt.horizon = 0;
        } else {
            try {
                opt.horizon = std::stoll(args.horizon);
            } catch (const std::exception&) {
                throw sddm::ValidationError("--horizon must be a period count or 'auto', got '" +
                                            args.horizon + "'");
            }
        }
    }
    return opt;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"stochastic dividend discount model valuation and merger exchange-ratio analysis"};
    app.require_subcommand(1);

    CommonArgs value_args, region_args, mc_args, repro_args;
    std::string value_company;

    CLI::App* value = app.add_subcommand("value", "pre-merger company valuations");
    add_common(value, value_args, true);
    value->add_option("company", value_company, "restrict output to one company");

    CLI::App* region = app.add_subcommand("region", "sweep the bargaining region");
    add_common(region, region_args, true);

    CLI::App* mc = app.add_subcommand("mc-check", "verify closed forms by simulation");
    add_common(mc, mc_args, true);

    CLI::App* repro =
        app.add_subcommand("reproduce-paper", "regenerate the bundled reference case");
    add_common(repro, repro_args, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? 0 : 2;
    }

    try {
        sddm::app::OutputBundle bundle;
        if (value->parsed()) {
            std::optional<std::string> only;
            if (!value_company.empty()) only = value_company;
            bundle = sddm::app::cmd_value(sddm::app::load_scenario(value_args.config), only,
                                          output_options(value_args));
        } else if (region->parsed()) {
            bundle = sddm::app::cmd_region(sddm::app::load_scenario(region_args.config),
                                           output_options(region_args));
        } else if (mc->parsed()) {
            bundle = sddm::app::cmd_mc_check(sddm::app::load_scenario(mc_args.config),
                                             output_options(mc_args));
        } else {
            bundle = sddm::app::cmd_reproduce_paper(output_options(repro_args));
        }
        std::cout << bundle.summary;
        for (const std::string& f : bundle.files) {
            std::cout << "wrote " << f << '\n';
        }
        return 0;
    } catch (const sddm::ValidationError& e) {
        std::cerr << "validation error: " << e.what() << '\n';
        return 2;
    } catch (const sddm::ModelDomainError& e) {
        std::cerr << "model error: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
