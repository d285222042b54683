#pragma once

#include "hullopt/ffd/dtc_map.hpp"
#include "hullopt/fom/synthetic_fom.hpp"
#include "hullopt/rom/snapshot_db.hpp"

#include <string>
#include <vector>

namespace hullopt::fom {

/// Everything needed to turn one parameter point into a snapshot: the
/// reference hull, the FFD lattice + parameter map that deforms it, the
/// oracle spec and the operating condition.
struct SnapshotPipeline {
    geometry::SurfaceMesh reference_hull;
    ffd::FfdLattice lattice;
    ffd::DtcParameterMap map;
    SyntheticFomSpec spec;
    objective::HullCondition cond;
};

/// Stable snapshot tag: a hash of the raw parameter values, so reruns with
/// the same sample set address the same entries.
std::string snapshot_tag(const ffd::ParameterVector& mu);

struct GenerateResult {
    int generated = 0;
    int skipped = 0;  // tags already present in the db
    std::vector<std::string> failed_tags;
};

/// Evaluates the oracle at every parameter point and appends the resulting
/// pressure/shear snapshots to the database. Parallel across parameter
/// points; resumable (existing tags are skipped); per-point failures are
/// recorded and generation continues. `threads` <= 0 selects the machine
/// parallelism.
GenerateResult generate_snapshots(const std::vector<ffd::ParameterVector>& mus, const SnapshotPipeline& pipeline,
                                  rom::SnapshotDb& db, int threads = 0);

}  // namespace hullopt::fom
