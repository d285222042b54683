#include "hullopt/rbf/morph.hpp"

#include "hullopt/error.hpp"

#include <Eigen/Cholesky>

#include <algorithm>
#include <cmath>
#include <map>

namespace hullopt::rbf {

double wendland_kernel(double r, double radius) {
    if (radius <= 0.0) throw ConfigError("wendland_kernel: radius must be positive");
    if (r < 0.0) throw ConfigError("wendland_kernel: negative distance");
    const double q = r / radius;
    if (q >= 1.0) return 0.0;
    const double s = 1.0 - q;
    const double s2 = s * s;
    return s2 * s2 * (1.0 + 4.0 * q);
}

namespace {

double auto_radius(const geometry::SurfaceMesh& before, const geometry::SurfaceMesh& after) {
    // 1.5 x the bounding-box diagonal of the deformed region; falls back to the
    // whole surface when the deformation is identically zero.
    Point3 lo = Point3::Constant(std::numeric_limits<double>::infinity());
    Point3 hi = -lo;
    bool any = false;
    for (std::size_t i = 0; i < before.vertices.size(); ++i) {
        if ((after.vertices[i] - before.vertices[i]).norm() > 0.0) {
            lo = lo.cwiseMin(before.vertices[i]);
            hi = hi.cwiseMax(before.vertices[i]);
            lo = lo.cwiseMin(after.vertices[i]);
            hi = hi.cwiseMax(after.vertices[i]);
            any = true;
        }
    }
    if (!any) {
        const auto [blo, bhi] = before.bounding_box();
        return 1.5 * (bhi - blo).norm();
    }
    const double diag = (hi - lo).norm();
    const auto [blo, bhi] = before.bounding_box();
    return 1.5 * std::max(diag, 0.25 * (bhi - blo).norm());
}

std::vector<int> control_indices(const geometry::SurfaceMesh& before, const RbfConfig& cfg) {
    std::vector<int> controls;
    if (!cfg.control_ids.empty()) {
        std::map<std::int64_t, int> by_id;
        for (int i = 0; i < before.vertex_count(); ++i) by_id.emplace(before.vertex_ids[static_cast<std::size_t>(i)], i);
        for (std::int64_t id : cfg.control_ids) {
            auto it = by_id.find(id);
            if (it == by_id.end()) throw ConfigError("rbf fit: control id " + std::to_string(id) + " not in mesh");
            controls.push_back(it->second);
        }
    } else {
        if (cfg.control_stride < 1) throw ConfigError("rbf fit: control stride must be >= 1");
        for (int i = 0; i < before.vertex_count(); i += cfg.control_stride) controls.push_back(i);
    }
    if (controls.empty()) throw ConfigError("rbf fit: no control points");
    return controls;
}

}  // namespace

std::vector<Point3> RbfInterpolant::evaluate(std::span<const Point3> points) const {
    std::vector<Point3> out(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) out[i] = evaluate(points[i]);
    return out;
}

Point3 RbfInterpolant::evaluate(const Point3& p) const {
    Point3 d = Point3::Zero();
    for (std::size_t j = 0; j < control_points.size(); ++j) {
        const double r = (p - control_points[j]).norm();
        if (r >= radius) continue;
        const double phi = wendland_kernel(r, radius);
        d += phi * weights.row(static_cast<Eigen::Index>(j)).transpose();
    }
    return d;
}

RbfInterpolant fit(const geometry::SurfaceMesh& before, const geometry::SurfaceMesh& after, const RbfConfig& cfg) {
    if (before.vertex_count() != after.vertex_count() || before.vertex_ids != after.vertex_ids)
        throw ConfigError("rbf fit: before/after surfaces do not share vertex ids one-to-one");

    const double radius = cfg.radius > 0.0 ? cfg.radius : auto_radius(before, after);
    const std::vector<int> controls = control_indices(before, cfg);
    const Eigen::Index m = static_cast<Eigen::Index>(controls.size());

    RbfInterpolant itp;
    itp.radius = radius;
    itp.control_points.reserve(controls.size());
    for (int c : controls) itp.control_points.push_back(before.vertices[static_cast<std::size_t>(c)]);

    Eigen::MatrixXd A(m, m);
    for (Eigen::Index i = 0; i < m; ++i) {
        A(i, i) = 1.0;
        for (Eigen::Index j = i + 1; j < m; ++j) {
            const double phi = wendland_kernel((itp.control_points[static_cast<std::size_t>(i)] -
                                                itp.control_points[static_cast<std::size_t>(j)])
                                                   .norm(),
                                               radius);
            A(i, j) = phi;
            A(j, i) = phi;
        }
    }
    Eigen::MatrixXd B(m, 3);
    for (Eigen::Index i = 0; i < m; ++i) {
        const std::size_t v = static_cast<std::size_t>(controls[static_cast<std::size_t>(i)]);
        B.row(i) = (after.vertices[v] - before.vertices[v]).transpose();
    }

    auto solve = [&](const Eigen::MatrixXd& mat) -> std::pair<bool, Eigen::MatrixXd> {
        Eigen::LDLT<Eigen::MatrixXd> ldlt(mat);
        if (ldlt.info() != Eigen::Success) return {false, {}};
        const auto d = ldlt.vectorD();
        if (d.minCoeff() <= cfg.pivot_tolerance * d.maxCoeff()) return {false, {}};
        return {true, ldlt.solve(B)};
    };

    auto [ok, X] = solve(A);
    if (!ok) {
        // One retry with a tiny symmetric jitter before giving up.
        Eigen::MatrixXd jittered = A;
        jittered.diagonal().array() += 1e-12;
        std::tie(ok, X) = solve(jittered);
        if (!ok)
            throw NumericError(
                "rbf fit: kernel matrix is singular or ill-conditioned; increase the radius or remove coincident "
                "control points");
    }
    itp.weights = X;

    const double bnorm = B.norm();
    itp.fit_residual = bnorm > 0.0 ? (A * X - B).norm() / bnorm : 0.0;
    return itp;
}

MorphResult morph_volume_mesh(const geometry::VolumeMesh& vol, const geometry::SurfaceMesh& before,
                              const geometry::SurfaceMesh& after, const RbfConfig& cfg) {
    const RbfInterpolant itp = fit(before, after, cfg);
    MorphResult result;
    result.mesh = vol;
    bool moved = false;
    for (auto& node : result.mesh.nodes) {
        const Point3 d = itp.evaluate(node);
        if (!d.isZero(0.0)) {
            node += d;
            moved = true;
        }
    }
    (void)moved;
    result.quality = geometry::quality_report(result.mesh);
    return result;
}

}  // namespace hullopt::rbf
