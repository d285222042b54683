#pragma once

#include "hullopt/common.hpp"
#include "hullopt/geometry/surface_mesh.hpp"

#include <array>
#include <span>
#include <vector>

namespace hullopt::ffd {

/// Point in the design box with per-entry closed bounds.
struct ParameterVector {
    Eigen::VectorXd values;
    Eigen::VectorXd lower;
    Eigen::VectorXd upper;

    int size() const { return static_cast<int>(values.size()); }

    /// Uniform-bounds constructor (default design box [-0.2, 0.2]^p).
    static ParameterVector boxed(Eigen::VectorXd values, double lo = -0.2, double hi = 0.2);

    /// Affine bijection with the normalized gene box [-1,1]^p.
    Eigen::VectorXd to_normalized() const;
    static ParameterVector from_normalized(const Eigen::VectorXd& genes, double lo = -0.2, double hi = 0.2);

    void validate() const;
};

/// Control-point lattice. The affine map psi sends the box spanned by
/// origin + axes onto the unit cube; displacements are stored in
/// lattice-relative (unit-cube) units so parameter magnitudes are fractions
/// of the lattice edge lengths.
struct FfdLattice {
    Point3 origin = Point3::Zero();
    std::array<Point3, 3> axes{Point3::UnitX(), Point3::UnitY(), Point3::UnitZ()};
    std::array<int, 3> counts{2, 2, 2};  // control points per axis
    std::vector<Point3> displacements;   // counts[0]*counts[1]*counts[2], x-major

    std::size_t index(int i, int j, int k) const {
        return (static_cast<std::size_t>(i) * static_cast<std::size_t>(counts[1]) + static_cast<std::size_t>(j)) *
                   static_cast<std::size_t>(counts[2]) +
               static_cast<std::size_t>(k);
    }
    Point3& displacement(int i, int j, int k) { return displacements[index(i, j, k)]; }
    const Point3& displacement(int i, int j, int k) const { return displacements[index(i, j, k)]; }

    void clear_displacements();
    void validate() const;
};

/// Tensor-product Bernstein deformation through psi -> T -> psi^-1. Points
/// outside the lattice box are returned unchanged (exact fixity).
std::vector<Point3> ffd_deform(std::span<const Point3> points, const FfdLattice& lattice);

geometry::SurfaceMesh ffd_deform(const geometry::SurfaceMesh& mesh, const FfdLattice& lattice);

}  // namespace hullopt::ffd
