#pragma once

#include "hullopt/cli/run_config.hpp"
#include "hullopt/fom/snapshots.hpp"
#include "hullopt/rom/rom_io.hpp"

#include <string>
#include <vector>

namespace hullopt::cli {

/// Artifact locations under the work directory.
struct Artifacts {
    std::string work;
    explicit Artifacts(const RunConfig& cfg) : work(cfg.paths.work) {}

    std::string hull() const { return work + "/hull.stl"; }
    std::string volume() const { return work + "/volume.vmesh"; }
    std::string samples() const { return work + "/samples.txt"; }
    std::string db() const { return work + "/db"; }
    std::string rom() const { return work + "/rom"; }
    std::string optimum() const { return work + "/optimize.json"; }
    std::string validations() const { return work + "/validate_history.json"; }
    std::string report() const { return work + "/report.json"; }
};

/// Shared pipeline pieces derived from one config: the hull surface (external
/// file or the procedural fixture), the bow lattice + parameter map over it,
/// and the oracle spec.
struct PipelineContext {
    RunConfig cfg;
    Artifacts paths;
    geometry::SurfaceMesh hull;
    ffd::FfdLattice lattice;
    ffd::DtcParameterMap map;
    fom::SyntheticFomSpec spec;

    explicit PipelineContext(const RunConfig& cfg);

    ffd::ParameterVector make_mu(const Eigen::VectorXd& values) const;
    geometry::SurfaceMesh deform(const ffd::ParameterVector& mu) const;
    fom::SnapshotPipeline snapshot_pipeline() const;

    /// C_t of the deformed hull from oracle fields.
    double oracle_ct(const ffd::ParameterVector& mu) const;
    /// C_t of the deformed hull from ROM-predicted fields.
    double rom_ct(const rom::RomPair& roms, const ffd::ParameterVector& mu) const;
};

void write_samples(const std::string& path, const std::vector<ffd::ParameterVector>& mus);
std::vector<ffd::ParameterVector> read_samples(const std::string& path, double lo, double hi);

// Subcommand bodies; all artifacts land in cfg.paths.work. Errors are thrown
// and mapped to exit codes by the executable wrapper.
void cmd_fixture(const RunConfig& cfg);
void cmd_sample(const RunConfig& cfg);
void cmd_snapshots(const RunConfig& cfg);
void cmd_rom_build(const RunConfig& cfg);
void cmd_rom_eval(const RunConfig& cfg, const std::vector<double>& mu_values);
void cmd_morph(const RunConfig& cfg, const std::vector<double>& mu_values);
void cmd_optimize(const RunConfig& cfg);
void cmd_validate(const RunConfig& cfg, bool enrich);
void cmd_report(const RunConfig& cfg);

}  // namespace hullopt::cli
