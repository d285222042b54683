#pragma once

#include "hullopt/ffd/lattice.hpp"
#include "hullopt/geometry/surface_mesh.hpp"

namespace hullopt::ffd {

/// One parameter-to-control-point assignment: inclusive index ranges per axis,
/// the driving parameter, its sign, and the displaced axis (0=x, 1=y, 2=z).
struct MapEntry {
    std::array<int, 2> x_range{0, 0};
    std::array<int, 2> y_range{0, 0};
    std::array<int, 2> z_range{0, 0};
    int parameter = 0;
    double sign = 1.0;
    int axis = 0;
};

/// Parameter-to-displacement table in the style used for the bow lattice:
/// x/z-direction assignments must avoid the two frozen outer layers of the
/// displaced axis, and y-direction assignments must come in antisymmetric
/// pairs so that y-symmetric hulls stay symmetric.
struct DtcParameterMap {
    std::vector<MapEntry> entries;
    int parameter_count = 0;

    void validate(const std::array<int, 3>& counts) const;
};

/// The 10-parameter bow-region table (7 x 11 x 7 lattice).
DtcParameterMap dtc_parameter_map();

/// Fills the lattice displacements from the map: zero everywhere except where
/// entries assign sign * mu[k] along their axis (lattice-relative units).
FfdLattice apply_parameter_map(const DtcParameterMap& map, const ParameterVector& mu, const FfdLattice& lattice);

struct DtcLatticeConfig {
    double waterline_z = 0.0;
    int total_sections = 21;            // equispaced stations over the waterline length
    int first_section = 10;             // 1-based station of the first x-layer
    int section_step = 2;               // station stride between x-layers
    int x_layers = 7;                   // includes one virtual station beyond the bow
    int y_layers = 11;
    int z_layers = 7;
};

/// Places the 7x11x7 bow lattice over the hull: x-layers on configured
/// stations, y-layers covering the beam (second/second-to-last on the hull
/// sides), z-layers covering the draft (2nd on the hull bottom, 5th on the
/// waterline). Returns the lattice together with the 10-parameter map.
std::pair<FfdLattice, DtcParameterMap> build_dtc_lattice(const geometry::SurfaceMesh& hull,
                                                         const DtcLatticeConfig& cfg);

}  // namespace hullopt::ffd
