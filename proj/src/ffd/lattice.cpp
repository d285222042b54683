#include "hullopt/ffd/lattice.hpp"

#include "hullopt/error.hpp"
#include "hullopt/ffd/bernstein.hpp"

namespace hullopt::ffd {

ParameterVector ParameterVector::boxed(Eigen::VectorXd values, double lo, double hi) {
    ParameterVector pv;
    pv.lower = Eigen::VectorXd::Constant(values.size(), lo);
    pv.upper = Eigen::VectorXd::Constant(values.size(), hi);
    pv.values = std::move(values);
    pv.validate();
    return pv;
}

Eigen::VectorXd ParameterVector::to_normalized() const {
    return (2.0 * (values - lower).array() / (upper - lower).array() - 1.0).matrix();
}

ParameterVector ParameterVector::from_normalized(const Eigen::VectorXd& genes, double lo, double hi) {
    Eigen::VectorXd v = (lo + (genes.array() + 1.0) * 0.5 * (hi - lo)).matrix();
    return boxed(std::move(v), lo, hi);
}

void ParameterVector::validate() const {
    if (lower.size() != values.size() || upper.size() != values.size())
        throw ConfigError("parameter vector: bounds size mismatch");
    for (int i = 0; i < size(); ++i) {
        if (!std::isfinite(values[i])) throw ConfigError("parameter vector: non-finite entry");
        if (values[i] < lower[i] || values[i] > upper[i])
            throw ConfigError("parameter vector: entry " + std::to_string(i) + " outside bounds");
    }
}

void FfdLattice::clear_displacements() {
    displacements.assign(static_cast<std::size_t>(counts[0]) * static_cast<std::size_t>(counts[1]) *
                             static_cast<std::size_t>(counts[2]),
                         Point3::Zero());
}

void FfdLattice::validate() const {
    for (int a = 0; a < 3; ++a) {
        if (counts[static_cast<std::size_t>(a)] < 2) throw ConfigError("ffd lattice: fewer than 2 control points per axis");
    }
    Eigen::Matrix3d m;
    m.col(0) = axes[0];
    m.col(1) = axes[1];
    m.col(2) = axes[2];
    if (std::abs(m.determinant()) < 1e-300) throw ConfigError("ffd lattice: axes are linearly dependent");
    const std::size_t expect = static_cast<std::size_t>(counts[0]) * static_cast<std::size_t>(counts[1]) *
                               static_cast<std::size_t>(counts[2]);
    if (displacements.size() != expect) throw ConfigError("ffd lattice: displacement array shape mismatch");
}

std::vector<Point3> ffd_deform(std::span<const Point3> points, const FfdLattice& lattice) {
    lattice.validate();
    Eigen::Matrix3d m;
    m.col(0) = lattice.axes[0];
    m.col(1) = lattice.axes[1];
    m.col(2) = lattice.axes[2];
    const Eigen::Matrix3d minv = m.inverse();
    const int nx = lattice.counts[0], ny = lattice.counts[1], nz = lattice.counts[2];

    std::vector<Point3> out(points.size());
    for (std::size_t idx = 0; idx < points.size(); ++idx) {
        const Point3& p = points[idx];
        const Point3 local = minv * (p - lattice.origin);
        if (local.x() < 0.0 || local.x() > 1.0 || local.y() < 0.0 || local.y() > 1.0 || local.z() < 0.0 ||
            local.z() > 1.0) {
            out[idx] = p;
            continue;
        }
        const auto wx = bernstein_row(nx - 1, local.x());
        const auto wy = bernstein_row(ny - 1, local.y());
        const auto wz = bernstein_row(nz - 1, local.z());
        Point3 d = Point3::Zero();
        for (int i = 0; i < nx; ++i) {
            if (wx[static_cast<std::size_t>(i)] == 0.0) continue;
            for (int j = 0; j < ny; ++j) {
                const double wij = wx[static_cast<std::size_t>(i)] * wy[static_cast<std::size_t>(j)];
                if (wij == 0.0) continue;
                for (int k = 0; k < nz; ++k) {
                    const Point3& cp = lattice.displacement(i, j, k);
                    if (cp.isZero(0.0)) continue;
                    d += (wij * wz[static_cast<std::size_t>(k)]) * cp;
                }
            }
        }
        // Zero net displacement reproduces the input bit-exactly (mu = 0 case).
        out[idx] = d.isZero(0.0) ? p : Point3(lattice.origin + m * (local + d));
    }
    return out;
}

geometry::SurfaceMesh ffd_deform(const geometry::SurfaceMesh& mesh, const FfdLattice& lattice) {
    geometry::SurfaceMesh out = mesh;
    out.vertices = ffd_deform(std::span<const Point3>(mesh.vertices), lattice);
    return out;
}

}  // namespace hullopt::ffd
