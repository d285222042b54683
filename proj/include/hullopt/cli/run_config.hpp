#pragma once

#include "hullopt/asga/asga.hpp"
#include "hullopt/ffd/dtc_map.hpp"
#include "hullopt/fom/fixtures.hpp"
#include "hullopt/fom/synthetic_fom.hpp"
#include "hullopt/rbf/morph.hpp"
#include "hullopt/rom/pod_gpr.hpp"

#include <cstdint>
#include <string>

namespace hullopt::cli {

struct RunPaths {
    std::string work = "run";  // root directory for all artifacts
    std::string hull;          // optional external ASCII STL hull; empty selects the bundled fixture
    std::string volume;        // optional external volume mesh; empty selects the bundled fixture
};

struct SamplingConfig {
    int count = 200;
    std::uint64_t seed = 7;
    fom::SampleScheme scheme = fom::SampleScheme::uniform;
};

/// Whole-pipeline configuration; one JSON file with per-module sections.
/// Missing keys keep their defaults, unknown keys are rejected.
struct RunConfig {
    RunPaths paths;
    double lower_bound = -0.2;  // design box per parameter
    double upper_bound = 0.2;
    fom::HullFixtureConfig hull_fixture;
    fom::BoxFixtureConfig box_fixture;
    ffd::DtcLatticeConfig lattice;
    rbf::RbfConfig rbf;
    rom::RomConfig rom;
    asga::AsgaConfig asga;
    double fom_c1 = 0.1, fom_c2 = 0.05, fom_c3 = 2.0, fom_gamma = 0.3;
    std::uint64_t fom_seed = 42;
    objective::HullCondition condition;
    SamplingConfig sampling;
    int threads = 0;  // <= 0 selects machine parallelism

    static RunConfig load(const std::string& path);
    void save(const std::string& path) const;

    /// Hash of the canonical serialized form; recorded in run reports.
    std::uint64_t hash() const;
};

}  // namespace hullopt::cli
