#pragma once

#include "hullopt/common.hpp"

#include <cstdint>
#include <vector>

namespace hullopt::geometry {

/// Polygonal face oriented so its area vector points from owner into
/// neighbour; boundary faces have neighbour == -1.
struct VolumeFace {
    std::vector<int> nodes;
    int owner = -1;
    int neighbour = -1;
};

/// Face-addressed unstructured volume mesh (node/face/cell, owner-neighbour
/// connectivity). Cells are implied by the face owner/neighbour indices.
struct VolumeMesh {
    std::vector<Point3> nodes;
    std::vector<VolumeFace> faces;

    int node_count() const { return static_cast<int>(nodes.size()); }
    int face_count() const { return static_cast<int>(faces.size()); }
    int cell_count() const;

    /// Face lists per cell, derived from owner/neighbour.
    std::vector<std::vector<int>> cell_faces() const;

    Point3 face_centroid(int f) const;
    /// Face area vector from centroid-fan triangulation, oriented owner->neighbour.
    Point3 face_area_vector(int f) const;
    /// Scalar area as the sum of fan sub-triangle areas (robust for non-planar faces).
    double face_area(int f) const;

    std::uint64_t topology_hash() const;
    void validate() const;
};

/// Mesh quality indicators over faces and cells.
struct QualityReport {
    double min_face_area = 0.0;
    double min_cell_volume = 0.0;
    double max_non_orthogonality = 0.0;  // degrees
    double avg_non_orthogonality = 0.0;  // degrees
    bool no_internal_faces = false;
    bool negative_volume_warning = false;
};

/// Signed cell volume via tetrahedral decomposition about the cell centroid.
/// Positive for well-oriented cells; callers check the sign.
double cell_volume(const VolumeMesh& mesh, int cell);
double cell_volume(const VolumeMesh& mesh, const std::vector<int>& face_ids, int cell);

Point3 cell_centroid(const VolumeMesh& mesh, const std::vector<int>& face_ids);

/// Min face area / min cell volume over the whole mesh and the
/// non-orthogonality statistics over internal faces (angle between the face
/// area vector and the owner->neighbour centroid connector, in degrees).
QualityReport quality_report(const VolumeMesh& mesh);

}  // namespace hullopt::geometry
