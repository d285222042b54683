#include "hullopt/error.hpp"
#include "hullopt/fom/fixtures.hpp"
#include "hullopt/geometry/clip.hpp"
#include "hullopt/geometry/field.hpp"
#include "hullopt/geometry/mesh_io.hpp"
#include "hullopt/geometry/surface_mesh.hpp"
#include "hullopt/geometry/volume_mesh.hpp"

#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <numbers>
#include <tuple>

using namespace hullopt;
using geometry::SurfaceMesh;
using geometry::VolumeMesh;

namespace {

std::string temp_path(const std::string& name) {
    return (std::filesystem::temp_directory_path() / name).string();
}

/// Closed unit cube [0,1]^3 as 12 outward-wound triangles.
SurfaceMesh unit_cube_surface() {
    std::vector<Point3> v = {{0, 0, 0}, {1, 0, 0}, {1, 1, 0}, {0, 1, 0},
                             {0, 0, 1}, {1, 0, 1}, {1, 1, 1}, {0, 1, 1}};
    SurfaceMesh mesh;
    mesh.vertices = v;
    for (int i = 0; i < 8; ++i) mesh.vertex_ids.push_back(i);
    auto quad = [&](int a, int b, int c, int d) {
        mesh.triangles.push_back({a, b, c});
        mesh.triangles.push_back({a, c, d});
    };
    quad(0, 3, 2, 1);  // z = 0, normal -z
    quad(4, 5, 6, 7);  // z = 1, normal +z
    quad(0, 1, 5, 4);  // y = 0, normal -y
    quad(3, 7, 6, 2);  // y = 1, normal +y
    quad(0, 4, 7, 3);  // x = 0, normal -x
    quad(1, 2, 6, 5);  // x = 1, normal +x
    mesh.validate();
    return mesh;
}

/// Single-cell volume mesh from one closed triangulated surface; every face
/// is a boundary face owned by cell 0.
VolumeMesh single_cell_from_surface(const SurfaceMesh& surf) {
    VolumeMesh vol;
    vol.nodes = surf.vertices;
    for (const auto& t : surf.triangles) vol.faces.push_back({{t[0], t[1], t[2]}, 0, -1});
    vol.validate();
    return vol;
}

/// UV sphere of radius r centered at the origin, poles on the z-axis.
SurfaceMesh uv_sphere(double r, int rings, int segments) {
    SurfaceMesh mesh;
    mesh.vertices.emplace_back(0, 0, r);
    for (int i = 1; i < rings; ++i) {
        const double phi = std::numbers::pi * i / rings;
        for (int j = 0; j < segments; ++j) {
            const double theta = 2.0 * std::numbers::pi * j / segments;
            mesh.vertices.emplace_back(r * std::sin(phi) * std::cos(theta), r * std::sin(phi) * std::sin(theta),
                                       r * std::cos(phi));
        }
    }
    mesh.vertices.emplace_back(0, 0, -r);
    for (int i = 0; i < mesh.vertex_count(); ++i) mesh.vertex_ids.push_back(i);
    auto at = [&](int ring, int j) { return 1 + ring * segments + (j % segments); };
    const int south = mesh.vertex_count() - 1;
    for (int j = 0; j < segments; ++j) {
        mesh.triangles.push_back({0, at(0, j), at(0, j + 1)});
        mesh.triangles.push_back({south, at(rings - 2, j + 1), at(rings - 2, j)});
    }
    for (int i = 0; i + 1 < rings - 1; ++i) {
        for (int j = 0; j < segments; ++j) {
            mesh.triangles.push_back({at(i, j), at(i + 1, j), at(i + 1, j + 1)});
            mesh.triangles.push_back({at(i, j), at(i + 1, j + 1), at(i, j + 1)});
        }
    }
    double vol6 = 0.0;
    for (int t = 0; t < mesh.triangle_count(); ++t)
        vol6 += mesh.triangle_centroid(t).dot(mesh.triangle_normal_area(t));
    if (vol6 < 0.0)
        for (auto& t : mesh.triangles) std::swap(t[1], t[2]);
    mesh.validate();
    return mesh;
}

}  // namespace

TEST_SUITE("geometry") {

TEST_CASE("stl round trip keeps cube topology") {
    const std::string path = temp_path("hullopt_test_cube.stl");
    write_surface_mesh(path, unit_cube_surface(), geometry::SurfaceFormat::ascii_stl);
    const SurfaceMesh mesh = read_surface_mesh(path, geometry::SurfaceFormat::ascii_stl);
    CHECK(mesh.vertex_count() == 8);
    CHECK(mesh.triangle_count() == 12);
    std::remove(path.c_str());
}

TEST_CASE("stl reader preserves coordinates exactly") {
    const std::string path = temp_path("hullopt_test_coords.stl");
    SurfaceMesh cube = unit_cube_surface();
    for (auto& v : cube.vertices) v += Point3(0.125, -3.5, 7.0625);
    write_surface_mesh(path, cube, geometry::SurfaceFormat::ascii_stl);
    const SurfaceMesh back = read_surface_mesh(path, geometry::SurfaceFormat::ascii_stl);
    REQUIRE(back.vertex_count() == 8);
    // Welding may reorder vertices; compare as sets via coordinate sort keys.
    double want = 0.0, got = 0.0;
    for (const auto& v : cube.vertices) want += v.sum();
    for (const auto& v : back.vertices) got += v.sum();
    CHECK(got == doctest::Approx(want).epsilon(1e-15));
    // Volume is orientation- and label-independent.
    double v6 = 0.0;
    for (int t = 0; t < back.triangle_count(); ++t) v6 += back.triangle_centroid(t).dot(back.triangle_normal_area(t));
    CHECK(v6 / 6.0 == doctest::Approx(1.0).epsilon(1e-12));
    std::remove(path.c_str());
}

TEST_CASE("empty stl file is a parse error") {
    const std::string path = temp_path("hullopt_test_empty.stl");
    std::ofstream(path).close();
    CHECK_THROWS_AS(read_surface_mesh(path, geometry::SurfaceFormat::ascii_stl), IoError);
    std::remove(path.c_str());
}

TEST_CASE("zero-area facet is rejected") {
    const std::string path = temp_path("hullopt_test_degen.stl");
    {
        std::ofstream out(path);
        out << "solid junk\n"
            << "facet normal 0 0 1\nouter loop\n"
            << "vertex 0 0 0\nvertex 1 0 0\nvertex 2 0 0\n"
            << "endloop\nendfacet\nendsolid junk\n";
    }
    CHECK_THROWS_AS(read_surface_mesh(path, geometry::SurfaceFormat::ascii_stl), ConfigError);
    std::remove(path.c_str());
}

TEST_CASE("missing file reports an io error") {
    CHECK_THROWS_AS(read_surface_mesh(temp_path("hullopt_no_such_file.stl"), geometry::SurfaceFormat::ascii_stl),
                    IoError);
}

TEST_CASE("unit hexahedron cell volume is 1") {
    fom::BoxFixtureConfig cfg;
    cfg.lower = Point3(0, 0, 0);
    cfg.upper = Point3(1, 1, 1);
    cfg.nx = cfg.ny = cfg.nz = 1;
    const VolumeMesh box = fom::make_box_fixture(cfg);
    REQUIRE(box.cell_count() == 1);
    CHECK(geometry::cell_volume(box, 0) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("regular tetrahedron volume matches the analytic value") {
    // Regular tetrahedron on alternating cube corners, scaled to edge 1.
    VolumeMesh tet;
    tet.nodes = {Point3(1, 0, -1 / std::sqrt(2.0)), Point3(-1, 0, -1 / std::sqrt(2.0)),
                 Point3(0, 1, 1 / std::sqrt(2.0)), Point3(0, -1, 1 / std::sqrt(2.0))};
    for (auto& n : tet.nodes) n *= 0.5;
    auto face = [&](int a, int b, int c) { tet.faces.push_back({{a, b, c}, 0, -1}); };
    face(0, 1, 2);
    face(0, 3, 1);
    face(0, 2, 3);
    face(1, 3, 2);
    const double edge = (tet.nodes[0] - tet.nodes[1]).norm();
    CHECK(edge == doctest::Approx(1.0).epsilon(1e-12));
    double vol = geometry::cell_volume(tet, 0);
    if (vol < 0.0) {  // fix orientation if the hand winding points inward
        for (auto& f : tet.faces) std::reverse(f.nodes.begin(), f.nodes.end());
        vol = geometry::cell_volume(tet, 0);
    }
    CHECK(vol == doctest::Approx(std::sqrt(2.0) / 12.0).epsilon(1e-5));
}

TEST_CASE("inverted hexahedron has negative volume") {
    fom::BoxFixtureConfig cfg;
    cfg.lower = Point3(0, 0, 0);
    cfg.upper = Point3(1, 1, 1);
    cfg.nx = cfg.ny = cfg.nz = 1;
    VolumeMesh box = fom::make_box_fixture(cfg);
    for (auto& f : box.faces) std::reverse(f.nodes.begin(), f.nodes.end());
    CHECK(geometry::cell_volume(box, 0) < 0.0);
}

TEST_CASE("axis-aligned two-cell mesh is perfectly orthogonal") {
    fom::BoxFixtureConfig cfg;
    cfg.lower = Point3(0, 0, 0);
    cfg.upper = Point3(2, 1, 1);
    cfg.nx = 2;
    cfg.ny = cfg.nz = 1;
    const auto report = geometry::quality_report(fom::make_box_fixture(cfg));
    CHECK(report.max_non_orthogonality == doctest::Approx(0.0).epsilon(1e-10));
    CHECK(report.min_face_area == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(report.min_cell_volume == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("sheared mesh reports the analytic non-orthogonality angle") {
    fom::BoxFixtureConfig cfg;
    cfg.lower = Point3(0, 0, 0);
    cfg.upper = Point3(2, 1, 1);
    cfg.nx = 2;
    cfg.ny = cfg.nz = 1;
    VolumeMesh box = fom::make_box_fixture(cfg);
    // Global x-shear: the internal face normal tilts by atan(k) while the
    // centroid connector stays along x (both centroids shift equally).
    const double k = std::tan(10.0 * std::numbers::pi / 180.0);
    for (auto& n : box.nodes) n.x() += k * n.y();
    const auto report = geometry::quality_report(box);
    CHECK(report.max_non_orthogonality == doctest::Approx(10.0).epsilon(0.01));
}

TEST_CASE("single-cell mesh flags the absence of internal faces") {
    fom::BoxFixtureConfig cfg;
    cfg.lower = Point3(0, 0, 0);
    cfg.upper = Point3(1, 1, 1);
    cfg.nx = cfg.ny = cfg.nz = 1;
    const auto report = geometry::quality_report(fom::make_box_fixture(cfg));
    CHECK(report.no_internal_faces);
    CHECK(report.max_non_orthogonality == 0.0);
    CHECK(report.avg_non_orthogonality == 0.0);
}

TEST_CASE("quality report is invariant under rigid translation") {
    fom::BoxFixtureConfig cfg;
    cfg.nx = 4;
    cfg.ny = 3;
    cfg.nz = 3;
    VolumeMesh a = fom::make_box_fixture(cfg);
    VolumeMesh b = a;
    for (auto& n : b.nodes) n += Point3(13.5, -2.25, 0.875);
    const auto ra = geometry::quality_report(a);
    const auto rb = geometry::quality_report(b);
    CHECK(rb.min_face_area == doctest::Approx(ra.min_face_area).epsilon(1e-10));
    CHECK(rb.min_cell_volume == doctest::Approx(ra.min_cell_volume).epsilon(1e-10));
    CHECK(rb.max_non_orthogonality == doctest::Approx(ra.max_non_orthogonality).epsilon(1e-10));
    CHECK(rb.avg_non_orthogonality == doctest::Approx(ra.avg_non_orthogonality).epsilon(1e-10));
}

TEST_CASE("uniform scaling scales areas and volumes by the right powers") {
    fom::BoxFixtureConfig cfg;
    cfg.nx = 3;
    cfg.ny = 2;
    cfg.nz = 2;
    VolumeMesh a = fom::make_box_fixture(cfg);
    // Perturb slightly so non-orthogonality is nonzero and meaningfully tested.
    for (auto& n : a.nodes) n.x() += 0.05 * std::sin(n.y() + n.z());
    VolumeMesh b = a;
    const double s = 2.5;
    for (auto& n : b.nodes) n *= s;
    const auto ra = geometry::quality_report(a);
    const auto rb = geometry::quality_report(b);
    CHECK(rb.min_face_area == doctest::Approx(ra.min_face_area * s * s).epsilon(1e-10));
    CHECK(rb.min_cell_volume == doctest::Approx(ra.min_cell_volume * s * s * s).epsilon(1e-10));
    CHECK(rb.max_non_orthogonality == doctest::Approx(ra.max_non_orthogonality).epsilon(1e-10));
}

TEST_CASE("immersed volume of the unit cube") {
    const SurfaceMesh cube = unit_cube_surface();
    CHECK(geometry::immersed_volume(cube, 0.5) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(geometry::immersed_volume(cube, 2.0) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("immersed volume of a hemisphere matches the analytic value") {
    const SurfaceMesh sphere = uv_sphere(1.0, 64, 64);
    const double hemi = 2.0 * std::numbers::pi / 3.0;
    CHECK(geometry::immersed_volume(sphere, 0.0) == doctest::Approx(hemi).epsilon(0.02));
}

TEST_CASE("immersed volume is monotone in the waterline") {
    const SurfaceMesh sphere = uv_sphere(1.0, 24, 24);
    double prev = 0.0;
    for (double wl = -0.8; wl <= 1.21; wl += 0.2) {
        const double v = geometry::immersed_volume(sphere, wl);
        CHECK(v >= prev - 1e-14);
        prev = v;
    }
}

TEST_CASE("open surfaces are rejected by immersed_volume") {
    SurfaceMesh cube = unit_cube_surface();
    cube.triangles.pop_back();  // hole in the x = 1 wall, below the waterline
    CHECK_THROWS_AS(geometry::immersed_volume(cube, 2.0), NumericError);
}

TEST_CASE("volume mesh text format round trips") {
    fom::BoxFixtureConfig cfg;
    cfg.nx = 3;
    cfg.ny = 2;
    cfg.nz = 2;
    const VolumeMesh mesh = fom::make_box_fixture(cfg);
    const std::string path = temp_path("hullopt_test_mesh.vmesh");
    write_volume_mesh(path, mesh);
    const VolumeMesh back = geometry::read_volume_mesh(path);
    CHECK(back.topology_hash() == mesh.topology_hash());
    REQUIRE(back.node_count() == mesh.node_count());
    for (int i = 0; i < mesh.node_count(); ++i)
        CHECK((back.nodes[static_cast<std::size_t>(i)] - mesh.nodes[static_cast<std::size_t>(i)]).norm() == 0.0);
    std::remove(path.c_str());
}

TEST_CASE("topology hash ignores coordinates but sees connectivity") {
    SurfaceMesh a = unit_cube_surface();
    SurfaceMesh moved = a;
    for (auto& v : moved.vertices) v *= 3.0;
    CHECK(moved.topology_hash() == a.topology_hash());
    SurfaceMesh rewired = a;
    std::swap(rewired.triangles[0], rewired.triangles[5]);
    CHECK(rewired.topology_hash() != a.topology_hash());
}

TEST_CASE("nodal fields enforce their mesh binding") {
    const SurfaceMesh cube = unit_cube_surface();
    auto field = geometry::NodalField::scalar(cube, Eigen::VectorXd::Ones(8));
    CHECK_NOTHROW(field.check_binding(cube));
    SurfaceMesh other = cube;
    std::swap(other.triangles[0], other.triangles[5]);
    CHECK_THROWS_AS(field.check_binding(other), ConfigError);
    CHECK_THROWS_AS(geometry::NodalField::scalar(cube, Eigen::VectorXd::Ones(7)), ConfigError);
}

TEST_CASE("hull fixture is closed, outward and y-symmetric") {
    fom::HullFixtureConfig cfg;
    cfg.rings = 16;
    cfg.segments = 16;
    const SurfaceMesh hull = fom::make_hull_fixture(cfg);
    // Closed surface: summed area vectors cancel.
    Point3 total = Point3::Zero();
    double area = 0.0;
    for (int t = 0; t < hull.triangle_count(); ++t) {
        total += hull.triangle_normal_area(t);
        area += hull.triangle_area(t);
    }
    CHECK(total.norm() / area < 1e-12);
    // Outward orientation: positive enclosed volume.
    double v6 = 0.0;
    for (int t = 0; t < hull.triangle_count(); ++t) v6 += hull.triangle_centroid(t).dot(hull.triangle_normal_area(t));
    CHECK(v6 > 0.0);
    // Exact mirror symmetry: every vertex has a bitwise (x, -y, z) partner.
    std::map<std::tuple<double, double, double>, int> index;
    for (int i = 0; i < hull.vertex_count(); ++i) {
        const auto& v = hull.vertices[static_cast<std::size_t>(i)];
        index[{v.x(), v.y(), v.z()}] = i;
    }
    for (const auto& v : hull.vertices) CHECK(index.count({v.x(), -v.y(), v.z()}) == 1);
}

}  // TEST_SUITE
