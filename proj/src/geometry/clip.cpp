#include "hullopt/geometry/clip.hpp"

#include "hullopt/error.hpp"

#include <cmath>

namespace hullopt::geometry {

namespace {

ClipVertex lerp(const ClipVertex& a, const ClipVertex& b, double t) {
    ClipVertex out;
    out.p = a.p + t * (b.p - a.p);
    if (a.attr.size() > 0) out.attr = a.attr + t * (b.attr - a.attr);
    return out;
}

}  // namespace

void clip_triangle_below(const std::array<ClipVertex, 3>& tri, double waterline_z,
                         std::vector<std::array<ClipVertex, 3>>& out) {
    // Sutherland-Hodgman against z <= w, then fan-triangulate the polygon.
    std::array<ClipVertex, 4> poly;
    int n = 0;
    for (int i = 0; i < 3; ++i) {
        const ClipVertex& cur = tri[static_cast<std::size_t>(i)];
        const ClipVertex& nxt = tri[static_cast<std::size_t>((i + 1) % 3)];
        const bool cur_in = cur.p.z() <= waterline_z;
        const bool nxt_in = nxt.p.z() <= waterline_z;
        if (cur_in) poly[static_cast<std::size_t>(n++)] = cur;
        if (cur_in != nxt_in) {
            const double t = (waterline_z - cur.p.z()) / (nxt.p.z() - cur.p.z());
            poly[static_cast<std::size_t>(n++)] = lerp(cur, nxt, t);
        }
    }
    for (int k = 1; k + 1 < n; ++k)
        out.push_back({poly[0], poly[static_cast<std::size_t>(k)], poly[static_cast<std::size_t>(k + 1)]});
}

double immersed_volume(const SurfaceMesh& surface, double waterline_z, double flux_tolerance) {
    std::vector<std::array<ClipVertex, 3>> clipped;
    clipped.reserve(surface.triangles.size());
    for (const auto& t : surface.triangles) {
        std::array<ClipVertex, 3> tri;
        for (int k = 0; k < 3; ++k) tri[static_cast<std::size_t>(k)].p = surface.vertices[static_cast<std::size_t>(t[static_cast<std::size_t>(k)])];
        clip_triangle_below(tri, waterline_z, clipped);
    }
    if (clipped.empty()) return 0.0;

    // Divergence theorem with F = x/3. The missing cap at z = waterline_z is
    // accounted for through the closure defect of the summed area vectors.
    Point3 area_sum = Point3::Zero();
    double flux = 0.0;
    double total_area = 0.0;
    for (const auto& tri : clipped) {
        const Point3 na = 0.5 * (tri[1].p - tri[0].p).cross(tri[2].p - tri[0].p);
        const Point3 c = (tri[0].p + tri[1].p + tri[2].p) / 3.0;
        area_sum += na;
        flux += c.dot(na) / 3.0;
        total_area += na.norm();
    }
    const double cap_area = -area_sum.z();
    const double residual = std::hypot(area_sum.x(), area_sum.y());
    if (total_area <= 0.0) return 0.0;
    if (residual > flux_tolerance * total_area)
        throw NumericError("immersed_volume: clipped surface is not watertight (flux residual " +
                           format_g17(residual / total_area) + " relative)");
    return flux + waterline_z * cap_area / 3.0;
}

}  // namespace hullopt::geometry
