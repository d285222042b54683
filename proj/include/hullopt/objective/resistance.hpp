#pragma once

#include "hullopt/geometry/field.hpp"
#include "hullopt/geometry/surface_mesh.hpp"

namespace hullopt::objective {

struct HullCondition {
    double density = 998.0;     // kg/m^3
    double speed = 1.668;       // m/s
    double waterline_z = 0.0;

    void validate() const;
};

struct CtBreakdown {
    double ct = 0.0;
    double pressure_force = 0.0;  // N, -integral of p n_x
    double friction_force = 0.0;  // N, integral of rho tau_x
    double reference_area = 0.0;  // S = Delta^(2/3)
    double immersed_volume = 0.0; // Delta
};

/// Total resistance coefficient: wetted-surface integral of (rho tau_x - p n_x)
/// over the clipped hull below the waterline, normalized by 1/2 rho V^2 S with
/// S = Delta^(2/3). One-point centroid quadrature on clipped triangles with
/// linearly interpolated vertex fields.
CtBreakdown compute_ct(const geometry::SurfaceMesh& hull, const geometry::NodalField& pressure,
                       const geometry::NodalField& shear, const HullCondition& cond);

/// Carries reference-surface fields onto a deformed hull of identical topology
/// by vertex identity; geometric quantities are recomputed by the caller.
std::pair<geometry::NodalField, geometry::NodalField> project_fields(const geometry::NodalField& pressure,
                                                                     const geometry::NodalField& shear,
                                                                     const geometry::SurfaceMesh& reference,
                                                                     const geometry::SurfaceMesh& deformed);

}  // namespace hullopt::objective
