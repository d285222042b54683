#pragma once

#include "hullopt/geometry/surface_mesh.hpp"

#include <Eigen/Dense>

#include <array>
#include <vector>

namespace hullopt::geometry {

/// Triangle corner carrying interpolatable attributes through clipping.
struct ClipVertex {
    Point3 p = Point3::Zero();
    Eigen::VectorXd attr;  // linearly interpolated along cut edges; may be empty
};

/// Clips one triangle against the half-space z <= waterline_z, appending the
/// surviving piece (0, 1 or 2 triangles, original winding kept) to `out`.
void clip_triangle_below(const std::array<ClipVertex, 3>& tri, double waterline_z,
                         std::vector<std::array<ClipVertex, 3>>& out);

/// Volume of the region enclosed below z = waterline_z, with the clip plane
/// capped implicitly. The clipped surface must be watertight: the horizontal
/// residual of the summed area vectors is checked against `flux_tolerance`
/// (relative to the clipped area) and an error carrying the residual is thrown
/// otherwise. Triangles must be wound with outward normals.
double immersed_volume(const SurfaceMesh& surface, double waterline_z, double flux_tolerance = 1e-8);

}  // namespace hullopt::geometry
