#pragma once

#include "hullopt/geometry/surface_mesh.hpp"
#include "hullopt/geometry/volume_mesh.hpp"

#include <string>

namespace hullopt::geometry {

enum class SurfaceFormat { ascii_stl, obj };

/// Reads an ASCII STL or Wavefront OBJ surface. STL vertices are welded by
/// exact coordinate match unless weld_tolerance > 0. Throws IoError with a
/// line number on parse failure and ConfigError on degenerate facets.
SurfaceMesh read_surface_mesh(const std::string& path, SurfaceFormat format, double weld_tolerance = 0.0);

void write_surface_mesh(const std::string& path, const SurfaceMesh& mesh, SurfaceFormat format);

/// Plain-text volume mesh format:
///   vmesh 1
///   nodes K        followed by K lines "x y z"
///   faces F        followed by F lines "n i1..in owner neighbour"
/// Neighbour is -1 for boundary faces; cell count is implied by the indices.
VolumeMesh read_volume_mesh(const std::string& path);
void write_volume_mesh(const std::string& path, const VolumeMesh& mesh);

}  // namespace hullopt::geometry
