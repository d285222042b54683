#include "hullopt/objective/resistance.hpp"

#include "hullopt/error.hpp"
#include "hullopt/geometry/clip.hpp"

#include <cmath>

namespace hullopt::objective {

void HullCondition::validate() const {
    if (!(density > 0.0)) throw ConfigError("hull condition: density must be positive");
    if (!(speed > 0.0)) throw ConfigError("hull condition: speed must be positive");
    if (!std::isfinite(waterline_z)) throw ConfigError("hull condition: non-finite waterline");
}

CtBreakdown compute_ct(const geometry::SurfaceMesh& hull, const geometry::NodalField& pressure,
                       const geometry::NodalField& shear, const HullCondition& cond) {
    cond.validate();
    pressure.check_binding(hull);
    shear.check_binding(hull);
    if (pressure.components != 1) throw ConfigError("compute_ct: pressure must be scalar");
    if (shear.components != 3) throw ConfigError("compute_ct: shear must be a 3-vector field");

    CtBreakdown out;
    out.immersed_volume = geometry::immersed_volume(hull, cond.waterline_z);
    if (!(out.immersed_volume > 0.0))
        throw NumericError("compute_ct: non-positive immersed volume");
    out.reference_area = std::cbrt(out.immersed_volume * out.immersed_volume);

    // Clip each triangle below the waterline, carrying (p, tau_x) through the cut.
    std::vector<std::array<geometry::ClipVertex, 3>> wetted;
    std::vector<std::array<geometry::ClipVertex, 3>> scratch;
    double pressure_force = 0.0;
    double friction_force = 0.0;
    for (const auto& tri : hull.triangles) {
        std::array<geometry::ClipVertex, 3> cv;
        for (int k = 0; k < 3; ++k) {
            const int v = tri[static_cast<std::size_t>(k)];
            cv[static_cast<std::size_t>(k)].p = hull.vertices[static_cast<std::size_t>(v)];
            Eigen::VectorXd attr(2);
            attr[0] = pressure.scalar_at(v);
            attr[1] = shear.vector_at(v).x();
            cv[static_cast<std::size_t>(k)].attr = std::move(attr);
        }
        scratch.clear();
        geometry::clip_triangle_below(cv, cond.waterline_z, scratch);
        for (const auto& piece : scratch) {
            const Point3 na = 0.5 * (piece[1].p - piece[0].p).cross(piece[2].p - piece[0].p);
            const Eigen::VectorXd attr = (piece[0].attr + piece[1].attr + piece[2].attr) / 3.0;
            pressure_force += -attr[0] * na.x();
            friction_force += cond.density * attr[1] * na.norm();
        }
    }
    out.pressure_force = pressure_force;
    out.friction_force = friction_force;
    out.ct = (pressure_force + friction_force) /
             (0.5 * cond.density * cond.speed * cond.speed * out.reference_area);
    if (!std::isfinite(out.ct)) throw NumericError("compute_ct: non-finite result");
    return out;
}

std::pair<geometry::NodalField, geometry::NodalField> project_fields(const geometry::NodalField& pressure,
                                                                     const geometry::NodalField& shear,
                                                                     const geometry::SurfaceMesh& reference,
                                                                     const geometry::SurfaceMesh& deformed) {
    pressure.check_binding(reference);
    shear.check_binding(reference);
    if (reference.topology_hash() != deformed.topology_hash())
        throw ConfigError("project_fields: reference/deformed topology mismatch");
    // Identical topology means identical vertex order; values transfer by
    // vertex identity and only rebind to the deformed surface.
    geometry::NodalField p = pressure;
    geometry::NodalField s = shear;
    p.mesh_binding = deformed.topology_hash();
    s.mesh_binding = deformed.topology_hash();
    return {std::move(p), std::move(s)};
}

}  // namespace hullopt::objective
