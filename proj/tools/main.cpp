// Scenario-driven front end: runs state-aware query analyses described in
// JSON config files and writes machine-readable reports.

#include <CLI11.hpp>

#include "kq/scenario.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Krylov state-aware query toolkit"};
    app.require_subcommand(1);

    std::string config_path;
    std::string out_dir = ".";
    std::string format = "json";
    std::uint64_t seed_override = 0;
    bool have_seed = false;

    CLI::App* run = app.add_subcommand("run", "Run all scenarios in a config file");
    run->add_option("config", config_path, "scenario config (JSON)")->required();
    run->add_option("--out", out_dir, "output directory for reports");
    run->add_option("--format", format, "json|csv|both")
        ->check(CLI::IsMember({"json", "csv", "both"}));
    run->add_option("--seed-override", seed_override, "replace every seed in the config")
        ->each([&](const std::string&) { have_seed = true; });

    CLI::App* validate = app.add_subcommand("validate", "Parse and check a config, no computation");
    validate->add_option("config", config_path, "scenario config (JSON)")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) ? 2 : 0;
    }

    if (run->parsed())
        return kq::run_configs(config_path, out_dir, format,
                               have_seed ? std::optional<std::uint64_t>(seed_override)
                                         : std::nullopt);
    return kq::validate_config(config_path);
}
