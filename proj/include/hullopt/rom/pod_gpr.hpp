#pragma once

#include "hullopt/ffd/lattice.hpp"
#include "hullopt/geometry/field.hpp"
#include "hullopt/rom/gpr.hpp"
#include "hullopt/rom/pod.hpp"
#include "hullopt/rom/snapshot_db.hpp"

namespace hullopt::rom {

struct RomConfig {
    int modes = 20;
    GprConfig gpr;
};

/// Data-driven reduced model: POD basis plus one GP regressor per modal
/// coefficient. Queries cost one GP mean evaluation and one matrix product.
struct PodGprRom {
    PodBasis basis;
    GprModel gpr;
    std::uint64_t mesh_binding = 0;
    int components = 1;

    /// Reduced prediction of the full field column at normalized genes.
    Eigen::VectorXd predict_column(const Eigen::VectorXd& genes) const;

    /// Field prediction bound to the reference surface.
    geometry::NodalField predict(const geometry::SurfaceMesh& reference, const ffd::ParameterVector& mu) const;
};

PodGprRom build_rom(const Eigen::MatrixXd& snapshots, const Eigen::MatrixXd& normalized_params,
                    std::uint64_t mesh_hash, int components, const RomConfig& cfg);

/// The pressure + shear ROM pair built from one database.
struct RomPair {
    PodGprRom pressure;
    PodGprRom shear;
};

RomPair build_roms(const SnapshotDb& db, const RomConfig& cfg);

/// Adds a validated snapshot and rebuilds both ROMs.
RomPair enrich(SnapshotDb& db, SnapshotEntry entry, const RomConfig& cfg);

}  // namespace hullopt::rom
