// Command-line front end: ccd run --config <path>
#include <CLI11.hpp>

#include <filesystem>
#include <iostream>

#include "ccd/error.hpp"
#include "ccd/panel.hpp"
#include "ccd/report.hpp"

namespace {

int exit_code(ccd::ErrorCode code) {
    using ccd::ErrorCode;
    switch (code) {
        case ErrorCode::ConfigError:
        case ErrorCode::InvalidConfig: return 3;
        case ErrorCode::IoError: return 4;
        default: return 2;
    }
}

int validate_only(const ccd::RunConfig& cfg) {
    const auto ds = ccd::load_panel(cfg.indicators, cfg.regions, cfg.values);
    const auto report = ccd::validate(ds);
    for (const auto& w : report.warnings) std::cerr << "warning: " << w.code << " [" << w.location << "] " << w.message << '\n';
    for (const auto& e : report.errors) std::cerr << "error: " << e.code << " [" << e.location << "] " << e.message << '\n';
    std::cout << ds.year_count() << " years, " << ds.region_count() << " regions, " << ds.indicators().size()
              << " indicators: " << (report.accepted() ? "valid" : "INVALID") << '\n';
    return report.accepted() ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Coupling coordination and spatial statistics reports"};
    app.set_version_flag("--version", std::string(ccd::kToolName) + " " + ccd::kToolVersion);
    app.require_subcommand(1);

    std::string config_path;
    std::string output_dir;
    bool check_only = false;
    auto* run = app.add_subcommand("run", "Run the full pipeline described by a config file");
    run->add_option("--config", config_path, "JSON run configuration")->required();
    run->add_option("--output-dir", output_dir, "Override the configured output directory");
    run->add_flag("--validate-only", check_only, "Load and validate inputs without computing anything");

    CLI11_PARSE(app, argc, argv);

    try {
        auto cfg = ccd::load_config(config_path);
        if (!output_dir.empty()) cfg.output_dir = std::filesystem::absolute(output_dir);
        if (check_only) return validate_only(cfg);
        const auto manifest = ccd::run_pipeline(cfg);
        for (const auto& w : manifest.warnings) {
            std::cerr << "warning: " << w.code << " [" << w.location << "] " << w.message << '\n';
        }
        std::size_t rows = 0;
        for (const auto& [file, n] : manifest.row_counts) rows += n;
        std::cout << "wrote " << manifest.row_counts.size() << " reports (" << rows << " rows) to "
                  << cfg.output_dir.string() << '\n';
        return 0;
    } catch (const ccd::Error& e) {
        std::cerr << "ccd: " << e.what() << '\n';
        return exit_code(e.code());
    } catch (const std::exception& e) {
        std::cerr << "ccd: internal error: " << e.what() << '\n';
        return 1;
    }
}
