#pragma once

#include "hullopt/common.hpp"

#include <array>
#include <cstdint>
#include <vector>

namespace hullopt::geometry {

/// Triangulated surface with stable per-vertex integer labels. Immutable by
/// convention after construction; deformations produce new meshes that keep
/// vertex_ids and triangles so fields can be carried by vertex identity.
struct SurfaceMesh {
    std::vector<Point3> vertices;
    std::vector<std::array<int, 3>> triangles;
    std::vector<std::int64_t> vertex_ids;

    int vertex_count() const { return static_cast<int>(vertices.size()); }
    int triangle_count() const { return static_cast<int>(triangles.size()); }

    Point3 triangle_normal_area(int t) const;  // outward cross product (|.| = 2 * area)
    double triangle_area(int t) const { return 0.5 * triangle_normal_area(t).norm(); }
    Point3 triangle_centroid(int t) const;

    /// Axis-aligned bounding box as (min, max).
    std::pair<Point3, Point3> bounding_box() const;

    /// Area-weighted unit vertex normals.
    std::vector<Point3> vertex_normals() const;

    /// Hash of connectivity and vertex labels only (not coordinates); equal for
    /// a mesh and any deformation of it.
    std::uint64_t topology_hash() const;

    /// Checks index ranges, id uniqueness and non-degenerate triangles; throws
    /// ConfigError listing offending facets.
    void validate(double min_area = 0.0) const;
};

/// Welds exactly coincident points into shared vertices and assigns sequential
/// vertex ids. `weld_tolerance` > 0 enables grid-based tolerance welding.
SurfaceMesh build_welded_mesh(const std::vector<std::array<Point3, 3>>& facets,
                              double weld_tolerance = 0.0);

}  // namespace hullopt::geometry
