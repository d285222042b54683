#pragma once

#include "hullopt/geometry/surface_mesh.hpp"

#include <Eigen/Dense>

namespace hullopt::geometry {

/// Scalar or 3-vector field sampled at the vertices of a bound surface mesh.
/// Values are stored flattened, component-major per vertex.
struct NodalField {
    std::uint64_t mesh_binding = 0;  // topology hash of the bound mesh
    int components = 1;
    Eigen::VectorXd values;

    static NodalField scalar(const SurfaceMesh& mesh, Eigen::VectorXd v);
    static NodalField vector3(const SurfaceMesh& mesh, Eigen::VectorXd v);

    double scalar_at(int vertex) const { return values[vertex]; }
    Point3 vector_at(int vertex) const {
        return Point3(values[3 * vertex], values[3 * vertex + 1], values[3 * vertex + 2]);
    }

    void check_binding(const SurfaceMesh& mesh) const;
};

}  // namespace hullopt::geometry
