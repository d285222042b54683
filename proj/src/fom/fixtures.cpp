#include "hullopt/fom/fixtures.hpp"

#include "hullopt/error.hpp"

#include <cmath>
#include <numbers>

namespace hullopt::fom {

geometry::SurfaceMesh make_hull_fixture(const HullFixtureConfig& cfg) {
    if (!(cfg.length > 0.0) || !(cfg.beam > 0.0) || !(cfg.draft > 0.0) || !(cfg.freeboard > 0.0))
        throw ConfigError("hull fixture: dimensions must be positive");
    if (cfg.rings < 2 || cfg.segments < 6 || cfg.segments % 2 != 0)
        throw ConfigError("hull fixture: need rings >= 2 and an even segment count >= 6");

    constexpr double pi = std::numbers::pi;
    const int nu = cfg.rings;
    const int nv = cfg.segments;
    const double z0 = 0.5 * (cfg.freeboard - cfg.draft);
    const double rz = 0.5 * (cfg.freeboard + cfg.draft);

    // Girth angle tables, mirrored explicitly so the two hull sides are
    // bitwise y-negatives of each other.
    std::vector<double> sv(static_cast<std::size_t>(nv)), cv(static_cast<std::size_t>(nv));
    for (int j = 0; j <= nv / 2; ++j) {
        const double theta = 2.0 * pi * j / nv;
        sv[static_cast<std::size_t>(j)] = std::sin(theta);
        cv[static_cast<std::size_t>(j)] = std::cos(theta);
    }
    sv[static_cast<std::size_t>(nv / 2)] = 0.0;  // keel point exactly on the symmetry plane
    for (int j = nv / 2 + 1; j < nv; ++j) {
        sv[static_cast<std::size_t>(j)] = -sv[static_cast<std::size_t>(nv - j)];
        cv[static_cast<std::size_t>(j)] = cv[static_cast<std::size_t>(nv - j)];
    }

    geometry::SurfaceMesh mesh;
    mesh.vertices.reserve(static_cast<std::size_t>(nu * nv + 2));
    const double xc = cfg.center_shift * cfg.length;
    const int stern_pole = 0;
    mesh.vertices.emplace_back(xc - 0.5 * cfg.length, 0.0, z0);
    for (int i = 1; i <= nu; ++i) {
        const double u = static_cast<double>(i) / (nu + 1);
        const double profile = std::pow(std::sin(pi * u), cfg.fullness);
        const double x = xc - 0.5 * cfg.length + cfg.length * u;
        const double a = 0.5 * cfg.beam * profile;
        const double b = rz * profile;
        for (int j = 0; j < nv; ++j) {
            mesh.vertices.emplace_back(x, a * sv[static_cast<std::size_t>(j)],
                                       z0 + b * cv[static_cast<std::size_t>(j)]);
        }
    }
    const int bow_pole = mesh.vertex_count();
    mesh.vertices.emplace_back(xc + 0.5 * cfg.length, 0.0, z0);
    for (int i = 0; i < mesh.vertex_count(); ++i) mesh.vertex_ids.push_back(i);

    auto ring_vertex = [&](int ring, int j) { return 1 + ring * nv + (j % nv); };
    for (int j = 0; j < nv; ++j) {
        mesh.triangles.push_back({stern_pole, ring_vertex(0, j), ring_vertex(0, j + 1)});
        mesh.triangles.push_back({bow_pole, ring_vertex(nu - 1, j + 1), ring_vertex(nu - 1, j)});
    }
    for (int i = 0; i + 1 < nu; ++i) {
        for (int j = 0; j < nv; ++j) {
            const int a00 = ring_vertex(i, j);
            const int a01 = ring_vertex(i, j + 1);
            const int a10 = ring_vertex(i + 1, j);
            const int a11 = ring_vertex(i + 1, j + 1);
            mesh.triangles.push_back({a00, a10, a11});
            mesh.triangles.push_back({a00, a11, a01});
        }
    }

    // Guarantee outward orientation regardless of the winding above.
    double volume6 = 0.0;
    for (int t = 0; t < mesh.triangle_count(); ++t)
        volume6 += mesh.triangle_centroid(t).dot(mesh.triangle_normal_area(t));
    if (volume6 < 0.0) {
        for (auto& tri : mesh.triangles) std::swap(tri[1], tri[2]);
    }
    mesh.validate();
    return mesh;
}

geometry::VolumeMesh make_box_fixture(const BoxFixtureConfig& cfg) {
    if (cfg.nx < 1 || cfg.ny < 1 || cfg.nz < 1) throw ConfigError("box fixture: cell counts must be >= 1");
    if (!((cfg.upper - cfg.lower).array() > 0.0).all())
        throw ConfigError("box fixture: upper corner must exceed lower corner");

    const int nx = cfg.nx, ny = cfg.ny, nz = cfg.nz;
    geometry::VolumeMesh mesh;
    mesh.nodes.reserve(static_cast<std::size_t>((nx + 1) * (ny + 1) * (nz + 1)));
    for (int i = 0; i <= nx; ++i) {
        for (int j = 0; j <= ny; ++j) {
            for (int k = 0; k <= nz; ++k) {
                const Point3 f(static_cast<double>(i) / nx, static_cast<double>(j) / ny,
                               static_cast<double>(k) / nz);
                mesh.nodes.emplace_back(cfg.lower + f.cwiseProduct(cfg.upper - cfg.lower));
            }
        }
    }

    auto node = [&](int i, int j, int k) { return (i * (ny + 1) + j) * (nz + 1) + k; };
    auto cell = [&](int i, int j, int k) { return (i * ny + j) * nz + k; };
    auto add_face = [&](std::vector<int> nodes, int owner, int neighbour, bool flip) {
        if (flip) std::reverse(nodes.begin(), nodes.end());
        mesh.faces.push_back({std::move(nodes), owner, neighbour});
    };

    // Node orderings below give +axis area vectors; boundary faces on the low
    // side are reversed so their normals point out of the owner cell.
    for (int i = 0; i <= nx; ++i) {
        for (int j = 0; j < ny; ++j) {
            for (int k = 0; k < nz; ++k) {
                std::vector<int> quad{node(i, j, k), node(i, j + 1, k), node(i, j + 1, k + 1), node(i, j, k + 1)};
                if (i == 0) add_face(std::move(quad), cell(0, j, k), -1, true);
                else if (i == nx) add_face(std::move(quad), cell(nx - 1, j, k), -1, false);
                else add_face(std::move(quad), cell(i - 1, j, k), cell(i, j, k), false);
            }
        }
    }
    for (int j = 0; j <= ny; ++j) {
        for (int i = 0; i < nx; ++i) {
            for (int k = 0; k < nz; ++k) {
                std::vector<int> quad{node(i, j, k), node(i, j, k + 1), node(i + 1, j, k + 1), node(i + 1, j, k)};
                if (j == 0) add_face(std::move(quad), cell(i, 0, k), -1, true);
                else if (j == ny) add_face(std::move(quad), cell(i, ny - 1, k), -1, false);
                else add_face(std::move(quad), cell(i, j - 1, k), cell(i, j, k), false);
            }
        }
    }
    for (int k = 0; k <= nz; ++k) {
        for (int i = 0; i < nx; ++i) {
            for (int j = 0; j < ny; ++j) {
                std::vector<int> quad{node(i, j, k), node(i + 1, j, k), node(i + 1, j + 1, k), node(i, j + 1, k)};
                if (k == 0) add_face(std::move(quad), cell(i, j, 0), -1, true);
                else if (k == nz) add_face(std::move(quad), cell(i, j, nz - 1), -1, false);
                else add_face(std::move(quad), cell(i, j, k - 1), cell(i, j, k), false);
            }
        }
    }
    mesh.validate();
    return mesh;
}

}  // namespace hullopt::fom
