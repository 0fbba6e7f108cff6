#include <CLI11.hpp>

#include <cstdio>
#include <exception>
#include <string>

#include "declab/config.hpp"
#include "declab/experiments.hpp"

int main(int argc, char** argv) {
    CLI::App app{"declab - damped wave decay laboratory"};
    app.require_subcommand(1);

    std::string config_path;
    std::string output_override;
    auto* run = app.add_subcommand("run", "run one experiment from a config file");
    run->add_option("config", config_path, "experiment config file")->required();
    run->add_option("-o,--output", output_override, "override the output directory");

    std::string report_dir;
    auto* report = app.add_subcommand("report", "tabulate experiment summaries under a directory");
    report->add_option("dir", report_dir, "directory containing experiment outputs")->required();

    auto* list = app.add_subcommand("list-experiments", "list available experiment kinds");

    CLI11_PARSE(app, argc, argv);

    try {
        if (run->parsed()) {
            const declab::Config cfg = declab::Config::parse_file(config_path);
            std::string outdir = output_override.empty()
                                     ? cfg.get_string("output", "declab-out")
                                     : output_override;
            const declab::ExperimentOutcome outcome = declab::run_experiment(cfg, outdir);
            std::printf("%s\n", outcome.summary.dump(2).c_str());
            return outcome.pass ? 0 : 1;
        }
        if (report->parsed()) {
            const auto rows = declab::collect_report(report_dir);
            std::printf("%s", declab::render_report(rows).c_str());
            for (const auto& r : rows)
                if (!r.pass) return 1;
            return 0;
        }
        if (list->parsed()) {
            for (const auto& [kind, desc] : declab::experiment_catalog())
                std::printf("%-14s %s\n", kind.c_str(), desc.c_str());
            return 0;
        }
    } catch (const declab::ConfigError& e) {
        std::fprintf(stderr, "config error: %s\n", e.what());
        return 2;
    } catch (const declab::UnresolvedGridError& e) {
        std::fprintf(stderr, "unresolved grid: %s\n", e.what());
        return 3;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 0;
}
