#include "hullopt/geometry/surface_mesh.hpp"

#include "hullopt/error.hpp"

#include <cmath>
#include <limits>
#include <map>
#include <sstream>

namespace hullopt::geometry {

Point3 SurfaceMesh::triangle_normal_area(int t) const {
    const auto& tri = triangles[static_cast<std::size_t>(t)];
    const Point3& a = vertices[static_cast<std::size_t>(tri[0])];
    const Point3& b = vertices[static_cast<std::size_t>(tri[1])];
    const Point3& c = vertices[static_cast<std::size_t>(tri[2])];
    return (b - a).cross(c - a);
}

Point3 SurfaceMesh::triangle_centroid(int t) const {
    const auto& tri = triangles[static_cast<std::size_t>(t)];
    return (vertices[static_cast<std::size_t>(tri[0])] + vertices[static_cast<std::size_t>(tri[1])] +
            vertices[static_cast<std::size_t>(tri[2])]) /
           3.0;
}

std::pair<Point3, Point3> SurfaceMesh::bounding_box() const {
    Point3 lo = Point3::Constant(std::numeric_limits<double>::infinity());
    Point3 hi = -lo;
    for (const auto& v : vertices) {
        lo = lo.cwiseMin(v);
        hi = hi.cwiseMax(v);
    }
    return {lo, hi};
}

std::vector<Point3> SurfaceMesh::vertex_normals() const {
    std::vector<Point3> normals(vertices.size(), Point3::Zero());
    for (int t = 0; t < triangle_count(); ++t) {
        const Point3 na = triangle_normal_area(t);
        for (int k = 0; k < 3; ++k) {
            normals[static_cast<std::size_t>(triangles[static_cast<std::size_t>(t)][static_cast<std::size_t>(k)])] += na;
        }
    }
    for (auto& n : normals) {
        const double len = n.norm();
        if (len > 0.0) n /= len;
    }
    return normals;
}

std::uint64_t SurfaceMesh::topology_hash() const {
    std::uint64_t h = 0xcbf29ce484222325ull;
    const std::uint64_t nv = vertices.size();
    const std::uint64_t nt = triangles.size();
    h = fnv1a_pod(nv, h);
    h = fnv1a_pod(nt, h);
    if (!vertex_ids.empty()) h = fnv1a(vertex_ids.data(), vertex_ids.size() * sizeof(std::int64_t), h);
    if (!triangles.empty()) h = fnv1a(triangles.data(), triangles.size() * sizeof(std::array<int, 3>), h);
    return h;
}

void SurfaceMesh::validate(double min_area) const {
    if (vertex_ids.size() != vertices.size()) throw ConfigError("surface mesh: vertex_ids size mismatch");
    {
        std::map<std::int64_t, int> seen;
        for (std::size_t i = 0; i < vertex_ids.size(); ++i) {
            if (!seen.emplace(vertex_ids[i], static_cast<int>(i)).second)
                throw ConfigError("surface mesh: duplicate vertex id " + std::to_string(vertex_ids[i]));
        }
    }
    std::ostringstream bad;
    int bad_count = 0;
    for (int t = 0; t < triangle_count(); ++t) {
        for (int k = 0; k < 3; ++k) {
            const int vi = triangles[static_cast<std::size_t>(t)][static_cast<std::size_t>(k)];
            if (vi < 0 || vi >= vertex_count())
                throw ConfigError("surface mesh: triangle " + std::to_string(t) + " references vertex " +
                                  std::to_string(vi) + " out of range");
        }
        if (triangle_area(t) <= min_area) {
            if (bad_count < 16) bad << (bad_count ? ", " : "") << t;
            ++bad_count;
        }
    }
    for (const auto& v : vertices) {
        if (!v.allFinite()) throw ConfigError("surface mesh: non-finite vertex coordinate");
    }
    if (bad_count > 0)
        throw ConfigError("surface mesh: " + std::to_string(bad_count) + " degenerate (zero-area) facets: [" +
                          bad.str() + (bad_count > 16 ? ", ..." : "") + "]");
}

SurfaceMesh build_welded_mesh(const std::vector<std::array<Point3, 3>>& facets, double weld_tolerance) {
    SurfaceMesh mesh;
    std::map<std::array<std::int64_t, 3>, int> lookup;
    const double cell = weld_tolerance > 0.0 ? weld_tolerance : 0.0;

    auto key_of = [&](const Point3& p) -> std::array<std::int64_t, 3> {
        if (cell > 0.0) {
            return {static_cast<std::int64_t>(std::llround(p.x() / cell)),
                    static_cast<std::int64_t>(std::llround(p.y() / cell)),
                    static_cast<std::int64_t>(std::llround(p.z() / cell))};
        }
        // Exact bit-equality weld.
        std::array<std::int64_t, 3> k;
        std::memcpy(k.data(), p.data(), 3 * sizeof(double));
        return k;
    };

    auto vertex_index = [&](const Point3& p) -> int {
        const auto key = key_of(p);
        auto it = lookup.find(key);
        if (it != lookup.end()) return it->second;
        const int idx = mesh.vertex_count();
        lookup.emplace(key, idx);
        mesh.vertices.push_back(p);
        mesh.vertex_ids.push_back(idx);
        return idx;
    };

    for (const auto& f : facets) {
        mesh.triangles.push_back({vertex_index(f[0]), vertex_index(f[1]), vertex_index(f[2])});
    }
    return mesh;
}

}  // namespace hullopt::geometry
