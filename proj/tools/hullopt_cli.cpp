#include "hullopt/cli/pipeline.hpp"
#include "hullopt/error.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>

namespace {

using hullopt::cli::RunConfig;

RunConfig load_config(const std::string& explicit_path) {
    std::string path = explicit_path;
    if (path.empty()) {
        if (const char* env = std::getenv("HULLOPT_CONFIG")) path = env;
    }
    return path.empty() ? RunConfig{} : RunConfig::load(path);
}

/// Machine-readable error record next to the other artifacts.
void write_error_record(const RunConfig& cfg, const std::string& command, const hullopt::Error& err) {
    try {
        std::filesystem::create_directories(cfg.paths.work);
        nlohmann::json j;
        j["command"] = command;
        j["kind"] = static_cast<int>(err.kind());
        j["message"] = err.what();
        std::ofstream out(cfg.paths.work + "/error.json");
        out << j.dump(2) << '\n';
    } catch (...) {
        // The record is best-effort; the exit code still reports the failure.
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"hullopt: hull shape optimization pipeline (FFD + RBF morphing + POD-GPR ROM + ASGA)"};
    app.require_subcommand(1);

    std::string config_path;
    app.add_option("-c,--config", config_path, "JSON run configuration (default: $HULLOPT_CONFIG)");
    std::string work_override;
    app.add_option("-w,--work", work_override, "Override the work directory from the config");
    int threads = -1;
    app.add_option("-j,--threads", threads, "Worker threads (default: machine parallelism)");

    auto* fixture = app.add_subcommand("fixture", "Generate the bundled hull and volume mesh fixtures");
    auto* sample = app.add_subcommand("sample", "Draw the design-space sample set");
    int sample_count = 0;
    sample->add_option("-n,--count", sample_count, "Number of samples (overrides config)");
    auto* snapshots = app.add_subcommand("snapshots", "Run the oracle over the sample set into the database");
    auto* rom_build = app.add_subcommand("rom-build", "Build the POD-GPR models from the database");
    auto* rom_eval = app.add_subcommand("rom-eval", "Compare ROM and oracle fields at one design point");
    std::vector<double> eval_mu;
    rom_eval->add_option("--mu", eval_mu, "Design parameters (default: all zeros)");
    auto* morph = app.add_subcommand("morph", "Deform the hull and morph the volume mesh at one design point");
    std::vector<double> morph_mu;
    morph->add_option("--mu", morph_mu, "Design parameters")->required();
    auto* optimize = app.add_subcommand("optimize", "Run the genetic optimization against the ROM objective");
    std::uint64_t opt_seed = 0;
    bool plain_ga = false;
    optimize->add_option("--seed", opt_seed, "Optimizer seed (overrides config)");
    optimize->add_flag("--plain-ga", plain_ga, "Disable the active-subspace acceleration");
    auto* validate = app.add_subcommand("validate", "Re-evaluate the optimum with the oracle");
    bool enrich = false;
    validate->add_flag("--enrich", enrich, "Add the validated snapshot to the database and rebuild the ROM");
    auto* report = app.add_subcommand("report", "Emit the run summary and plots");

    CLI11_PARSE(app, argc, argv);

    RunConfig cfg;
    std::string command = "?";
    try {
        cfg = load_config(config_path);
        if (!work_override.empty()) cfg.paths.work = work_override;
        if (threads >= 0) cfg.threads = threads;
        if (*sample && sample_count > 0) cfg.sampling.count = sample_count;
        if (*optimize) {
            if (optimize->count("--seed")) cfg.asga.seed = opt_seed;
            if (plain_ga) cfg.asga.use_active_subspace = false;
        }

        if (*fixture) command = "fixture", hullopt::cli::cmd_fixture(cfg);
        else if (*sample) command = "sample", hullopt::cli::cmd_sample(cfg);
        else if (*snapshots) command = "snapshots", hullopt::cli::cmd_snapshots(cfg);
        else if (*rom_build) command = "rom-build", hullopt::cli::cmd_rom_build(cfg);
        else if (*rom_eval) command = "rom-eval", hullopt::cli::cmd_rom_eval(cfg, eval_mu);
        else if (*morph) command = "morph", hullopt::cli::cmd_morph(cfg, morph_mu);
        else if (*optimize) command = "optimize", hullopt::cli::cmd_optimize(cfg);
        else if (*validate) command = "validate", hullopt::cli::cmd_validate(cfg, enrich);
        else if (*report) command = "report", hullopt::cli::cmd_report(cfg);
        return 0;
    } catch (const hullopt::Error& err) {
        std::cerr << "error: " << err.what() << '\n';
        write_error_record(cfg, command, err);
        return static_cast<int>(err.kind());
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << '\n';
        return 2;
    }
}
