#include "hullopt/geometry/volume_mesh.hpp"

#include "hullopt/error.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>

namespace hullopt::geometry {

int VolumeMesh::cell_count() const {
    int maxc = -1;
    for (const auto& f : faces) maxc = std::max({maxc, f.owner, f.neighbour});
    return maxc + 1;
}

std::vector<std::vector<int>> VolumeMesh::cell_faces() const {
    std::vector<std::vector<int>> result(static_cast<std::size_t>(cell_count()));
    for (int f = 0; f < face_count(); ++f) {
        const auto& face = faces[static_cast<std::size_t>(f)];
        result[static_cast<std::size_t>(face.owner)].push_back(f);
        if (face.neighbour >= 0) result[static_cast<std::size_t>(face.neighbour)].push_back(f);
    }
    return result;
}

Point3 VolumeMesh::face_centroid(int f) const {
    const auto& face = faces[static_cast<std::size_t>(f)];
    Point3 c = Point3::Zero();
    for (int n : face.nodes) c += nodes[static_cast<std::size_t>(n)];
    return c / static_cast<double>(face.nodes.size());
}

Point3 VolumeMesh::face_area_vector(int f) const {
    const auto& face = faces[static_cast<std::size_t>(f)];
    const Point3 c = face_centroid(f);
    Point3 s = Point3::Zero();
    const std::size_t n = face.nodes.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Point3& a = nodes[static_cast<std::size_t>(face.nodes[i])];
        const Point3& b = nodes[static_cast<std::size_t>(face.nodes[(i + 1) % n])];
        s += 0.5 * (a - c).cross(b - c);
    }
    return s;
}

double VolumeMesh::face_area(int f) const {
    const auto& face = faces[static_cast<std::size_t>(f)];
    const Point3 c = face_centroid(f);
    double area = 0.0;
    const std::size_t n = face.nodes.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Point3& a = nodes[static_cast<std::size_t>(face.nodes[i])];
        const Point3& b = nodes[static_cast<std::size_t>(face.nodes[(i + 1) % n])];
        area += 0.5 * (a - c).cross(b - c).norm();
    }
    return area;
}

std::uint64_t VolumeMesh::topology_hash() const {
    std::uint64_t h = 0xcbf29ce484222325ull;
    const std::uint64_t nn = nodes.size();
    const std::uint64_t nf = faces.size();
    h = fnv1a_pod(nn, h);
    h = fnv1a_pod(nf, h);
    for (const auto& f : faces) {
        h = fnv1a_pod(f.owner, h);
        h = fnv1a_pod(f.neighbour, h);
        if (!f.nodes.empty()) h = fnv1a(f.nodes.data(), f.nodes.size() * sizeof(int), h);
    }
    return h;
}

void VolumeMesh::validate() const {
    const int nc = cell_count();
    for (int f = 0; f < face_count(); ++f) {
        const auto& face = faces[static_cast<std::size_t>(f)];
        if (face.nodes.size() < 3) throw ConfigError("volume mesh: face " + std::to_string(f) + " has < 3 nodes");
        for (int n : face.nodes) {
            if (n < 0 || n >= node_count())
                throw ConfigError("volume mesh: face " + std::to_string(f) + " node index out of range");
        }
        if (face.owner < 0 || face.owner >= nc)
            throw ConfigError("volume mesh: face " + std::to_string(f) + " owner out of range");
        if (face.neighbour >= nc)
            throw ConfigError("volume mesh: face " + std::to_string(f) + " neighbour out of range");
    }
    for (const auto& p : nodes) {
        if (!p.allFinite()) throw ConfigError("volume mesh: non-finite node coordinate");
    }
}

Point3 cell_centroid(const VolumeMesh& mesh, const std::vector<int>& face_ids) {
    std::set<int> uniq;
    for (int f : face_ids) {
        for (int n : mesh.faces[static_cast<std::size_t>(f)].nodes) uniq.insert(n);
    }
    Point3 c = Point3::Zero();
    for (int n : uniq) c += mesh.nodes[static_cast<std::size_t>(n)];
    return c / static_cast<double>(uniq.size());
}

double cell_volume(const VolumeMesh& mesh, const std::vector<int>& face_ids, int cell) {
    // Exact for any closed polyhedron: signed tets between the cell centroid
    // and the outward-oriented face fan triangles.
    const Point3 cc = cell_centroid(mesh, face_ids);
    double vol = 0.0;
    for (int f : face_ids) {
        const auto& face = mesh.faces[static_cast<std::size_t>(f)];
        const double orient = (face.owner == cell) ? 1.0 : -1.0;
        const Point3 fc = mesh.face_centroid(f);
        const std::size_t n = face.nodes.size();
        for (std::size_t i = 0; i < n; ++i) {
            const Point3& a = mesh.nodes[static_cast<std::size_t>(face.nodes[i])];
            const Point3& b = mesh.nodes[static_cast<std::size_t>(face.nodes[(i + 1) % n])];
            vol += orient * (fc - cc).dot((a - cc).cross(b - cc)) / 6.0;
        }
    }
    return vol;
}

double cell_volume(const VolumeMesh& mesh, int cell) {
    if (cell < 0 || cell >= mesh.cell_count()) throw ConfigError("cell_volume: cell index out of range");
    std::vector<int> face_ids;
    for (int f = 0; f < mesh.face_count(); ++f) {
        const auto& face = mesh.faces[static_cast<std::size_t>(f)];
        if (face.owner == cell || face.neighbour == cell) face_ids.push_back(f);
    }
    return cell_volume(mesh, face_ids, cell);
}

QualityReport quality_report(const VolumeMesh& mesh) {
    QualityReport rep;
    rep.min_face_area = std::numeric_limits<double>::infinity();
    rep.min_cell_volume = std::numeric_limits<double>::infinity();

    for (int f = 0; f < mesh.face_count(); ++f) rep.min_face_area = std::min(rep.min_face_area, mesh.face_area(f));

    const auto cf = mesh.cell_faces();
    std::vector<Point3> centroids(cf.size());
    for (std::size_t c = 0; c < cf.size(); ++c) {
        centroids[c] = cell_centroid(mesh, cf[c]);
        rep.min_cell_volume = std::min(rep.min_cell_volume, cell_volume(mesh, cf[c], static_cast<int>(c)));
    }
    if (rep.min_cell_volume < 0.0) rep.negative_volume_warning = true;

    double sum = 0.0;
    double maxangle = 0.0;
    long internal = 0;
    for (int f = 0; f < mesh.face_count(); ++f) {
        const auto& face = mesh.faces[static_cast<std::size_t>(f)];
        if (face.neighbour < 0) continue;
        const Point3 sf = mesh.face_area_vector(f);
        const Point3 d = centroids[static_cast<std::size_t>(face.neighbour)] - centroids[static_cast<std::size_t>(face.owner)];
        const double denom = sf.norm() * d.norm();
        double angle = 0.0;
        if (denom > 0.0) {
            const double cosang = std::clamp(sf.dot(d) / denom, -1.0, 1.0);
            angle = std::acos(cosang) * 180.0 / std::numbers::pi;
        }
        sum += angle;
        maxangle = std::max(maxangle, angle);
        ++internal;
    }
    if (internal == 0) {
        rep.no_internal_faces = true;
        rep.max_non_orthogonality = 0.0;
        rep.avg_non_orthogonality = 0.0;
    } else {
        rep.max_non_orthogonality = maxangle;
        rep.avg_non_orthogonality = sum / static_cast<double>(internal);
    }
    return rep;
}

}  // namespace hullopt::geometry
