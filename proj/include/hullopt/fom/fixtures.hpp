#pragma once

#include "hullopt/geometry/surface_mesh.hpp"
#include "hullopt/geometry/volume_mesh.hpp"

namespace hullopt::fom {

/// Procedural hull-like closed surface: a warped ellipsoid of revolution with
/// poles on the x-axis, exactly mirror-symmetric about the xz-plane, draft
/// below z = 0 and freeboard above it.
struct HullFixtureConfig {
    double length = 2.0;     // overall length along x
    double beam = 0.4;       // full width at midship
    double draft = 0.12;     // depth below the waterline at midship
    double freeboard = 0.06; // height above the waterline at midship
    double fullness = 0.7;   // exponent shaping the section profile along x
    // Midship x-position as a fraction of the length. The default places the
    // hull so the pressure component contributes ~17% of the total resistance
    // (friction-dominated composition); tuned once against the bundled oracle.
    double center_shift = 0.265;
    int rings = 48;          // cross sections between the poles
    int segments = 48;       // vertices per section girth; must be even
};

geometry::SurfaceMesh make_hull_fixture(const HullFixtureConfig& cfg = {});

/// Structured hexahedral block mesh with owner-to-neighbour oriented faces;
/// the desk-scale stand-in for the CFD background mesh.
struct BoxFixtureConfig {
    Point3 lower{-2.0, -1.0, -0.5};
    Point3 upper{2.0, 1.0, 0.5};
    int nx = 32;  // cells per axis
    int ny = 24;
    int nz = 24;
};

geometry::VolumeMesh make_box_fixture(const BoxFixtureConfig& cfg = {});

}  // namespace hullopt::fom
