#include "hullopt/rom/pod_gpr.hpp"

#include "hullopt/error.hpp"

namespace hullopt::rom {

Eigen::VectorXd PodGprRom::predict_column(const Eigen::VectorXd& genes) const {
    return basis.modes * gpr.predict(genes);
}

geometry::NodalField PodGprRom::predict(const geometry::SurfaceMesh& reference, const ffd::ParameterVector& mu) const {
    if (reference.topology_hash() != mesh_binding)
        throw ConfigError("rom predict: mesh binding mismatch");
    mu.validate();
    Eigen::VectorXd column = predict_column(mu.to_normalized());
    return components == 1 ? geometry::NodalField::scalar(reference, std::move(column))
                           : geometry::NodalField::vector3(reference, std::move(column));
}

PodGprRom build_rom(const Eigen::MatrixXd& snapshots, const Eigen::MatrixXd& normalized_params,
                    std::uint64_t mesh_hash, int components, const RomConfig& cfg) {
    if (normalized_params.rows() != snapshots.cols())
        throw ConfigError("build_rom: snapshot/parameter count mismatch");
    const int modes = static_cast<int>(std::min<Eigen::Index>(cfg.modes, std::min(snapshots.rows(), snapshots.cols())));
    PodResult decomposition = pod(snapshots, modes);

    PodGprRom rom;
    rom.basis = std::move(decomposition.basis);
    rom.gpr = gpr_fit(normalized_params, decomposition.coefficients.transpose(), cfg.gpr);
    rom.mesh_binding = mesh_hash;
    rom.components = components;
    return rom;
}

RomPair build_roms(const SnapshotDb& db, const RomConfig& cfg) {
    if (db.size() < 2) throw ConfigError("build_roms: database needs at least 2 snapshots");
    const Eigen::MatrixXd params = db.normalized_parameter_matrix();
    RomPair pair{build_rom(db.pressure_matrix(), params, db.mesh_hash, 1, cfg),
                 build_rom(db.shear_matrix(), params, db.mesh_hash, 3, cfg)};
    return pair;
}

RomPair enrich(SnapshotDb& db, SnapshotEntry entry, const RomConfig& cfg) {
    db.add(std::move(entry));  // rejects duplicate tags
    return build_roms(db, cfg);
}

}  // namespace hullopt::rom
