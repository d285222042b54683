#include "hullopt/ffd/dtc_map.hpp"

#include "hullopt/error.hpp"

#include <algorithm>

namespace hullopt::ffd {

namespace {

void check_range(const std::array<int, 2>& r, int count, const char* axis_name) {
    if (r[0] > r[1] || r[0] < 0 || r[1] >= count)
        throw ConfigError(std::string("parameter map: ") + axis_name + " index range [" + std::to_string(r[0]) +
                          "," + std::to_string(r[1]) + "] outside lattice");
}

}  // namespace

void DtcParameterMap::validate(const std::array<int, 3>& counts) const {
    for (const auto& e : entries) {
        check_range(e.x_range, counts[0], "x");
        check_range(e.y_range, counts[1], "y");
        check_range(e.z_range, counts[2], "z");
        if (e.parameter < 0 || e.parameter >= parameter_count)
            throw ConfigError("parameter map: parameter index out of range");
        if (e.axis < 0 || e.axis > 2) throw ConfigError("parameter map: bad displacement axis");
        // The outer two layers of the displaced axis are frozen (x and z) to
        // keep the deformation and its derivatives continuous across the box.
        if (e.axis == 0 && (e.x_range[0] < 2 || e.x_range[1] > counts[0] - 3))
            throw ConfigError("parameter map: x-displacement entry collides with a frozen x layer");
        if (e.axis == 2 && (e.z_range[0] < 2 || e.z_range[1] > counts[2] - 3))
            throw ConfigError("parameter map: z-displacement entry collides with a frozen z layer");
    }
    // Every y-direction entry needs its antisymmetric mirror.
    for (const auto& e : entries) {
        if (e.axis != 1) continue;
        const std::array<int, 2> mirrored{counts[1] - 1 - e.y_range[1], counts[1] - 1 - e.y_range[0]};
        const bool found = std::any_of(entries.begin(), entries.end(), [&](const MapEntry& o) {
            return o.axis == 1 && o.parameter == e.parameter && o.x_range == e.x_range && o.z_range == e.z_range &&
                   o.y_range == mirrored && o.sign == -e.sign;
        });
        if (!found)
            throw ConfigError("parameter map: y-direction entry for parameter " + std::to_string(e.parameter) +
                              " lacks its antisymmetric mirror");
    }
}

DtcParameterMap dtc_parameter_map() {
    DtcParameterMap map;
    map.parameter_count = 10;
    auto add = [&](int x0, int x1, int y0, int y1, int z0, int z1, int param, double sign, int axis) {
        map.entries.push_back(MapEntry{{x0, x1}, {y0, y1}, {z0, z1}, param, sign, axis});
    };
    // x-direction bow pulls, mirrored across the beam.
    add(2, 2, 0, 0, 2, 4, 0, +1.0, 0);
    add(2, 2, 10, 10, 2, 4, 0, +1.0, 0);
    add(3, 3, 0, 0, 2, 4, 1, +1.0, 0);
    add(3, 3, 10, 10, 2, 4, 1, +1.0, 0);
    add(4, 4, 0, 0, 2, 4, 2, +1.0, 0);
    add(4, 4, 10, 10, 2, 4, 2, +1.0, 0);
    // y-direction widenings, antisymmetric for symmetry conservation.
    add(4, 4, 2, 4, 2, 2, 3, +1.0, 1);
    add(4, 4, 6, 8, 2, 2, 3, -1.0, 1);
    add(4, 4, 2, 4, 3, 3, 4, +1.0, 1);
    add(4, 4, 6, 8, 3, 3, 4, -1.0, 1);
    add(4, 4, 2, 4, 4, 4, 5, +1.0, 1);
    add(4, 4, 6, 8, 4, 4, 5, -1.0, 1);
    add(3, 3, 2, 4, 2, 2, 6, +1.0, 1);
    add(3, 3, 6, 8, 2, 2, 6, -1.0, 1);
    add(5, 5, 2, 4, 3, 3, 7, +1.0, 1);
    add(5, 5, 6, 8, 3, 3, 7, -1.0, 1);
    // z-direction keel/waterline adjustments.
    add(4, 4, 0, 1, 2, 2, 8, +1.0, 2);
    add(4, 4, 9, 10, 2, 2, 8, +1.0, 2);
    add(5, 5, 0, 0, 3, 3, 9, +1.0, 2);
    add(5, 5, 10, 10, 3, 3, 9, +1.0, 2);
    return map;
}

FfdLattice apply_parameter_map(const DtcParameterMap& map, const ParameterVector& mu, const FfdLattice& lattice) {
    map.validate(lattice.counts);
    mu.validate();
    if (mu.size() < map.parameter_count) throw ConfigError("apply_parameter_map: parameter vector too short");
    FfdLattice out = lattice;
    out.clear_displacements();
    for (const auto& e : map.entries) {
        for (int i = e.x_range[0]; i <= e.x_range[1]; ++i) {
            for (int j = e.y_range[0]; j <= e.y_range[1]; ++j) {
                for (int k = e.z_range[0]; k <= e.z_range[1]; ++k) {
                    out.displacement(i, j, k)[e.axis] += e.sign * mu.values[e.parameter];
                }
            }
        }
    }
    return out;
}

std::pair<FfdLattice, DtcParameterMap> build_dtc_lattice(const geometry::SurfaceMesh& hull,
                                                         const DtcLatticeConfig& cfg) {
    const auto [lo, hi] = hull.bounding_box();
    if (!((hi - lo).minCoeff() > 0.0)) throw ConfigError("build_dtc_lattice: degenerate hull bounding box");
    if (cfg.waterline_z <= lo.z()) throw ConfigError("build_dtc_lattice: waterline below hull bottom");

    const double length = hi.x() - lo.x();
    const double station_spacing = length / static_cast<double>(cfg.total_sections - 1);
    auto station_x = [&](int s) { return lo.x() + static_cast<double>(s - 1) * station_spacing; };

    const int last_real_station = cfg.first_section + cfg.section_step * (cfg.x_layers - 2);
    const double tol = 1e-9 * length;
    if (station_x(cfg.first_section) < lo.x() - tol || station_x(last_real_station) > hi.x() + tol)
        throw ConfigError("build_dtc_lattice: configured sections fall outside the hull bounding box");

    FfdLattice lattice;
    lattice.counts = {cfg.x_layers, cfg.y_layers, cfg.z_layers};

    const double x0 = station_x(cfg.first_section);
    const double x_extent = static_cast<double>(cfg.section_step * (cfg.x_layers - 1)) * station_spacing;

    // y layers 1 .. ny-2 span the beam; one extra spacing outside on each side.
    const double dy = (hi.y() - lo.y()) / static_cast<double>(cfg.y_layers - 3);
    // z layer 1 on the hull bottom, layer 4 on the waterline.
    const double dz = (cfg.waterline_z - lo.z()) / 3.0;

    lattice.origin = Point3(x0, lo.y() - dy, lo.z() - dz);
    lattice.axes[0] = Point3(x_extent, 0.0, 0.0);
    lattice.axes[1] = Point3(0.0, static_cast<double>(cfg.y_layers - 1) * dy, 0.0);
    lattice.axes[2] = Point3(0.0, 0.0, static_cast<double>(cfg.z_layers - 1) * dz);
    lattice.clear_displacements();
    lattice.validate();

    DtcParameterMap map = dtc_parameter_map();
    map.validate(lattice.counts);
    return {lattice, map};
}

}  // namespace hullopt::ffd
