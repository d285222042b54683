#pragma once

#include "hullopt/common.hpp"
#include "hullopt/geometry/surface_mesh.hpp"
#include "hullopt/geometry/volume_mesh.hpp"

#include <span>
#include <vector>

namespace hullopt::rbf {

/// Compactly supported Beckert-Wendland kernel (1 - r/R)+^4 (1 + 4 r/R).
double wendland_kernel(double r, double radius);

struct RbfConfig {
    double radius = 0.0;          // <= 0 selects 1.5 x the deformed-region bounding-box diagonal
    int control_stride = 1;       // every k-th surface vertex becomes a control point
    std::vector<std::int64_t> control_ids;  // explicit vertex ids; overrides the stride when non-empty
    double pivot_tolerance = 1e-12;
};

/// Displacement interpolant d(x) = sum_j w_j phi(|x - x_j|) fitted to the
/// surface motion at the control points.
struct RbfInterpolant {
    std::vector<Point3> control_points;
    Eigen::Matrix<double, Eigen::Dynamic, 3> weights;
    double radius = 0.0;
    double fit_residual = 0.0;  // relative residual of A X = B at the controls

    std::vector<Point3> evaluate(std::span<const Point3> points) const;
    Point3 evaluate(const Point3& p) const;
};

/// Learns the before -> after surface displacement at (possibly subsampled)
/// control points by solving the dense symmetric kernel system, one solve
/// shared across the three displacement components.
RbfInterpolant fit(const geometry::SurfaceMesh& before, const geometry::SurfaceMesh& after, const RbfConfig& cfg);

struct MorphResult {
    geometry::VolumeMesh mesh;
    geometry::QualityReport quality;
};

/// Propagates the surface deformation to every volume node. Topology is
/// preserved exactly; a post-morph negative cell volume is recorded in the
/// quality report, not raised.
MorphResult morph_volume_mesh(const geometry::VolumeMesh& vol, const geometry::SurfaceMesh& before,
                              const geometry::SurfaceMesh& after, const RbfConfig& cfg);

}  // namespace hullopt::rbf
