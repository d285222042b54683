#pragma once

#include "hullopt/ffd/lattice.hpp"
#include "hullopt/geometry/field.hpp"
#include "hullopt/objective/resistance.hpp"

#include <cstdint>
#include <utility>

namespace hullopt::fom {

/// Deterministic stand-in for the flow solver: an analytic pressure/shear
/// field over the hull surface modulated by a low-dimensional ridge in the
/// design parameters.
struct SyntheticFomSpec {
    double c1 = 0.1;      // linear pressure coefficient
    double c2 = 0.05;     // quadratic pressure coefficient
    double c3 = 2.0;      // shear magnitude coefficient (milli-scale)
    double gamma = 0.3;   // ridge nonlinearity gain
    double length = 1.0;  // hull length scale L used to normalize coordinates
    Eigen::VectorXd ridge;  // unit direction w driving the parametric response

    /// Default spec with a fixed seeded unit ridge vector.
    static SyntheticFomSpec make(int parameter_dim, double length, std::uint64_t seed = 42);

    void validate() const;

    /// Identity hash over all constants and the ridge vector; stored in the
    /// snapshot database so mixed-oracle databases are rejected.
    std::uint64_t hash() const;
};

/// Evaluates the oracle on a (deformed) hull: returns the scalar pressure
/// field and the flattened 3-vector shear field. With normalized coordinates
/// (x~,y~,z~) = node / L and s = sin(2 pi x~) cos(pi y~) exp(-4 z~^2), the
/// ridge term r = w.mu^ + gamma (w.mu^)^2 on normalized genes mu^ in [-1,1]^n:
///   p   = 1/2 rho V^2 (c1 s + c2 s^2) (1 + r)
///   tau = 1/2 V^2 c3 1e-3 (1 + s) exp(-2 z~^2) (1 + r) d(x)
/// where d(x) is the x-dominant direction x^ projected onto the local tangent
/// plane (unnormalized, so tau stays smooth and vanishes at x-facing poles).
std::pair<geometry::NodalField, geometry::NodalField> synthetic_fom(const geometry::SurfaceMesh& hull,
                                                                    const ffd::ParameterVector& mu,
                                                                    const SyntheticFomSpec& spec,
                                                                    const objective::HullCondition& cond);

enum class SampleScheme { uniform, latin_hypercube };

/// Draws `count` design points in [lo, hi]^dim; fully reproducible per seed.
std::vector<ffd::ParameterVector> sample_parameters(int count, int dim, double lo, double hi, std::uint64_t seed,
                                                    SampleScheme scheme = SampleScheme::uniform);

}  // namespace hullopt::fom
