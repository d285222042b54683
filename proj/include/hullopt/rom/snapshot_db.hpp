#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <string>
#include <vector>

namespace hullopt::rom {

/// One high-fidelity solve: the parameter point plus the pressure column and
/// the flattened shear-stress column on the reference surface.
struct SnapshotEntry {
    std::string tag;
    Eigen::VectorXd mu;
    Eigen::VectorXd pressure;  // vertex_count
    Eigen::VectorXd shear;     // 3 * vertex_count, flattened
};

/// Offline solutions database. Persisted as a directory: a JSON manifest with
/// the mesh/FOM identity hashes and parameter tags, plus one 17-digit text
/// column file per snapshot field.
struct SnapshotDb {
    std::uint64_t mesh_hash = 0;
    std::uint64_t fom_hash = 0;
    int parameter_dim = 0;
    double lower_bound = -0.2;
    double upper_bound = 0.2;
    std::vector<SnapshotEntry> entries;

    int size() const { return static_cast<int>(entries.size()); }
    bool has_tag(const std::string& tag) const;

    /// Appends one snapshot; throws ConfigError on a duplicate tag or on a
    /// field length inconsistent with the existing entries.
    void add(SnapshotEntry entry);

    Eigen::MatrixXd pressure_matrix() const;
    Eigen::MatrixXd shear_matrix() const;
    Eigen::MatrixXd parameter_matrix() const;             // M x p, raw values
    Eigen::MatrixXd normalized_parameter_matrix() const;  // M x p, mapped to [-1,1]

    void save(const std::string& dir) const;
    static SnapshotDb load(const std::string& dir);
};

}  // namespace hullopt::rom
