#include "hullopt/fom/synthetic_fom.hpp"

#include "hullopt/error.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <random>

namespace hullopt::fom {

SyntheticFomSpec SyntheticFomSpec::make(int parameter_dim, double length, std::uint64_t seed) {
    if (parameter_dim < 1) throw ConfigError("synthetic fom: parameter dimension must be >= 1");
    SyntheticFomSpec spec;
    spec.length = length;
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    spec.ridge.resize(parameter_dim);
    for (int i = 0; i < parameter_dim; ++i) spec.ridge[i] = gauss(rng);
    spec.ridge /= spec.ridge.norm();
    return spec;
}

void SyntheticFomSpec::validate() const {
    if (!(length > 0.0)) throw ConfigError("synthetic fom: length scale must be positive");
    if (ridge.size() < 1) throw ConfigError("synthetic fom: empty ridge vector");
    if (std::abs(ridge.norm() - 1.0) > 1e-10) throw ConfigError("synthetic fom: ridge vector must be unit length");
}

std::uint64_t SyntheticFomSpec::hash() const {
    std::uint64_t h = 0xcbf29ce484222325ull;
    h = fnv1a_pod(c1, h);
    h = fnv1a_pod(c2, h);
    h = fnv1a_pod(c3, h);
    h = fnv1a_pod(gamma, h);
    h = fnv1a_pod(length, h);
    if (ridge.size() > 0)
        h = fnv1a(ridge.data(), static_cast<std::size_t>(ridge.size()) * sizeof(double), h);
    return h;
}

std::pair<geometry::NodalField, geometry::NodalField> synthetic_fom(const geometry::SurfaceMesh& hull,
                                                                    const ffd::ParameterVector& mu,
                                                                    const SyntheticFomSpec& spec,
                                                                    const objective::HullCondition& cond) {
    spec.validate();
    cond.validate();
    mu.validate();
    if (mu.size() != static_cast<int>(spec.ridge.size()))
        throw ConfigError("synthetic fom: parameter dimension does not match the ridge vector");

    const Eigen::VectorXd genes = mu.to_normalized();
    const double t = spec.ridge.dot(genes);
    const double ridge = t + spec.gamma * t * t;
    const double q = 0.5 * cond.density * cond.speed * cond.speed;
    const double tau_scale = 0.5 * cond.speed * cond.speed * spec.c3 * 1e-3;

    const auto normals = hull.vertex_normals();
    const int nv = hull.vertex_count();
    Eigen::VectorXd p(nv);
    Eigen::VectorXd tau(3 * nv);
    constexpr double pi = std::numbers::pi;
    for (int i = 0; i < nv; ++i) {
        const Point3 c = hull.vertices[static_cast<std::size_t>(i)] / spec.length;
        const double s = std::sin(2.0 * pi * c.x()) * std::cos(pi * c.y()) * std::exp(-4.0 * c.z() * c.z());
        p[i] = q * (spec.c1 * s + spec.c2 * s * s) * (1.0 + ridge);

        // x-dominant tangential direction: x^ minus its normal component,
        // left unnormalized so the field stays smooth at x-facing poles.
        const Point3& n = normals[static_cast<std::size_t>(i)];
        const Point3 dir = Point3::UnitX() - n.x() * n;
        const double mag = tau_scale * (1.0 + s) * std::exp(-2.0 * c.z() * c.z()) * (1.0 + ridge);
        tau.segment<3>(3 * i) = mag * dir;
    }
    return {geometry::NodalField::scalar(hull, std::move(p)), geometry::NodalField::vector3(hull, std::move(tau))};
}

std::vector<ffd::ParameterVector> sample_parameters(int count, int dim, double lo, double hi, std::uint64_t seed,
                                                    SampleScheme scheme) {
    if (count < 1) throw ConfigError("sample_parameters: count must be >= 1");
    if (dim < 1) throw ConfigError("sample_parameters: dimension must be >= 1");
    if (!(lo < hi)) throw ConfigError("sample_parameters: bounds must satisfy lo < hi");

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    std::vector<ffd::ParameterVector> out;
    out.reserve(static_cast<std::size_t>(count));

    if (scheme == SampleScheme::uniform) {
        for (int c = 0; c < count; ++c) {
            Eigen::VectorXd v(dim);
            for (int i = 0; i < dim; ++i) v[i] = lo + uni(rng) * (hi - lo);
            out.push_back(ffd::ParameterVector::boxed(std::move(v), lo, hi));
        }
        return out;
    }

    // Latin hypercube: one sample per stratum per dimension, strata shuffled
    // independently per dimension.
    std::vector<std::vector<int>> strata(static_cast<std::size_t>(dim), std::vector<int>(static_cast<std::size_t>(count)));
    for (auto& column : strata) {
        std::iota(column.begin(), column.end(), 0);
        std::shuffle(column.begin(), column.end(), rng);
    }
    for (int c = 0; c < count; ++c) {
        Eigen::VectorXd v(dim);
        for (int i = 0; i < dim; ++i) {
            const double u = (strata[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)] + uni(rng)) /
                             static_cast<double>(count);
            v[i] = lo + u * (hi - lo);
        }
        out.push_back(ffd::ParameterVector::boxed(std::move(v), lo, hi));
    }
    return out;
}

}  // namespace hullopt::fom
