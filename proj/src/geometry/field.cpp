#include "hullopt/geometry/field.hpp"

#include "hullopt/error.hpp"

namespace hullopt::geometry {

NodalField NodalField::scalar(const SurfaceMesh& mesh, Eigen::VectorXd v) {
    if (v.size() != mesh.vertex_count()) throw ConfigError("scalar field: value count does not match vertex count");
    if (!v.allFinite()) throw NumericError("scalar field: non-finite entries");
    return NodalField{mesh.topology_hash(), 1, std::move(v)};
}

NodalField NodalField::vector3(const SurfaceMesh& mesh, Eigen::VectorXd v) {
    if (v.size() != 3 * mesh.vertex_count())
        throw ConfigError("vector field: value count does not match 3 x vertex count");
    if (!v.allFinite()) throw NumericError("vector field: non-finite entries");
    return NodalField{mesh.topology_hash(), 3, std::move(v)};
}

void NodalField::check_binding(const SurfaceMesh& mesh) const {
    if (mesh_binding != mesh.topology_hash())
        throw ConfigError("field/mesh binding mismatch");
    if (values.size() != static_cast<long>(components) * mesh.vertex_count())
        throw ConfigError("field value count does not match bound mesh");
}

}  // namespace hullopt::geometry
