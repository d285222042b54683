#include "hullopt/aspace/active_subspace.hpp"

#include "hullopt/error.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace hullopt::aspace {

namespace {

/// Least-squares linear model y ~ b + g.x over the given rows; returns the
/// slope and whether the system had full column rank.
std::pair<Eigen::VectorXd, bool> linear_fit(const Eigen::MatrixXd& samples, const Eigen::VectorXd& values,
                                            const std::vector<int>& rows) {
    const int n = static_cast<int>(samples.cols());
    Eigen::MatrixXd a(rows.size(), n + 1);
    Eigen::VectorXd b(rows.size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        a(static_cast<Eigen::Index>(r), 0) = 1.0;
        a.row(static_cast<Eigen::Index>(r)).tail(n) = samples.row(rows[r]);
        b[static_cast<Eigen::Index>(r)] = values[rows[r]];
    }
    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(a);
    const bool full_rank = qr.rank() == n + 1;
    const Eigen::VectorXd coeffs = qr.solve(b);
    return {coeffs.tail(n), full_rank};
}

}  // namespace

GradientEstimate estimate_gradients(const Eigen::MatrixXd& samples, const Eigen::VectorXd& values, int neighbors) {
    const int k = static_cast<int>(samples.rows());
    const int n = static_cast<int>(samples.cols());
    if (values.size() != k) throw ConfigError("estimate_gradients: sample/value count mismatch");
    if (k <= n) throw ConfigError("estimate_gradients: need more samples than dimensions");
    if (neighbors < n + 1) throw ConfigError("estimate_gradients: neighbors must be at least n+1");
    neighbors = std::min(neighbors, k);
    if (!samples.allFinite() || !values.allFinite())
        throw ConfigError("estimate_gradients: non-finite input");

    // Global model held as the rank-deficiency fallback.
    std::vector<int> all(static_cast<std::size_t>(k));
    std::iota(all.begin(), all.end(), 0);
    const auto [global_gradient, global_ok] = linear_fit(samples, values, all);

    GradientEstimate est;
    est.gradients.resize(k, n);
    std::vector<int> order(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) {
        std::iota(order.begin(), order.end(), 0);
        const Eigen::VectorXd xi = samples.row(i);
        std::nth_element(order.begin(), order.begin() + neighbors - 1, order.end(), [&](int a, int b) {
            return (samples.row(a).transpose() - xi).squaredNorm() < (samples.row(b).transpose() - xi).squaredNorm();
        });
        std::vector<int> local(order.begin(), order.begin() + neighbors);
        const auto [gradient, ok] = linear_fit(samples, values, local);
        if (ok) {
            est.gradients.row(i) = gradient.transpose();
        } else {
            est.gradients.row(i) = global_gradient.transpose();
            ++est.fallback_count;
        }
    }
    return est;
}

ActiveSubspace build_subspace(const Eigen::MatrixXd& gradients, int as_dim) {
    const int k = static_cast<int>(gradients.rows());
    const int n = static_cast<int>(gradients.cols());
    if (k < 1) throw ConfigError("build_subspace: no gradient samples");
    if (as_dim < 1 || as_dim >= n + 1) throw ConfigError("build_subspace: active dimension out of range");
    if (!gradients.allFinite()) throw ConfigError("build_subspace: non-finite gradients");

    const Eigen::MatrixXd c = gradients.transpose() * gradients / static_cast<double>(k);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(c);
    if (eig.info() != Eigen::Success) throw NumericError("build_subspace: eigendecomposition failed");

    // Reorder descending and fix the sign convention.
    Eigen::MatrixXd w(n, n);
    Eigen::VectorXd lambda(n);
    for (int i = 0; i < n; ++i) {
        w.col(i) = eig.eigenvectors().col(n - 1 - i);
        lambda[i] = eig.eigenvalues()[n - 1 - i];
        Eigen::Index imax = 0;
        w.col(i).cwiseAbs().maxCoeff(&imax);
        if (w(imax, i) < 0.0) w.col(i) = -w.col(i);
    }

    ActiveSubspace as;
    as.w1 = w.leftCols(as_dim);
    as.w2 = w.rightCols(n - as_dim);
    as.eigenvalues = lambda;
    return as;
}

Eigen::VectorXd forward_map(const ActiveSubspace& as, const Eigen::VectorXd& mu) {
    if (mu.size() != as.full_dim()) throw ConfigError("forward_map: dimension mismatch");
    return as.w1.transpose() * mu;
}

BackMapResult back_map(const ActiveSubspace& as, const Eigen::VectorXd& q, int count, std::mt19937_64& rng,
                       int attempt_budget) {
    if (count < 1) throw ConfigError("back_map: count must be >= 1");
    if (q.size() != as.active_dim()) throw ConfigError("back_map: active point dimension mismatch");
    const int n = as.full_dim();
    const int inactive = n - as.active_dim();
    const Eigen::VectorXd base = as.w1 * q;

    BackMapResult result;
    if (inactive == 0) {
        Eigen::VectorXd p = base.cwiseMax(-1.0).cwiseMin(1.0);
        if ((p - base).norm() > 0.0) result.clipped_count = 1;
        result.points.assign(1, std::move(p));
        return result;
    }

    // Per-coordinate feasible interval for each inactive direction, holding
    // the other inactive coordinates at zero.
    Eigen::VectorXd eta_lo(inactive), eta_hi(inactive);
    for (int i = 0; i < inactive; ++i) {
        double lo = -std::numeric_limits<double>::infinity();
        double hi = std::numeric_limits<double>::infinity();
        for (int j = 0; j < n; ++j) {
            const double w = as.w2(j, i);
            if (std::abs(w) < 1e-14) continue;
            const double a = (-1.0 - base[j]) / w;
            const double b = (1.0 - base[j]) / w;
            lo = std::max(lo, std::min(a, b));
            hi = std::min(hi, std::max(a, b));
        }
        if (!std::isfinite(lo) || !std::isfinite(hi) || lo > hi) {
            lo = 0.0;
            hi = 0.0;
        }
        eta_lo[i] = lo;
        eta_hi[i] = hi;
    }

    std::uniform_real_distribution<double> uni(0.0, 1.0);
    for (int c = 0; c < count; ++c) {
        bool accepted = false;
        Eigen::VectorXd candidate;
        for (int attempt = 0; attempt < attempt_budget; ++attempt) {
            Eigen::VectorXd eta(inactive);
            for (int i = 0; i < inactive; ++i) eta[i] = eta_lo[i] + uni(rng) * (eta_hi[i] - eta_lo[i]);
            candidate = base + as.w2 * eta;
            if ((candidate.array() >= -1.0).all() && (candidate.array() <= 1.0).all()) {
                accepted = true;
                break;
            }
        }
        if (accepted) {
            result.points.push_back(std::move(candidate));
        } else if (result.points.empty() && c == count - 1) {
            // Clipping fallback guarantees at least one returned point.
            result.points.push_back(candidate.cwiseMax(-1.0).cwiseMin(1.0));
            ++result.clipped_count;
        }
    }
    if (result.points.empty()) {
        Eigen::VectorXd eta = 0.5 * (eta_lo + eta_hi);
        Eigen::VectorXd p = (base + as.w2 * eta).cwiseMax(-1.0).cwiseMin(1.0);
        result.points.push_back(std::move(p));
        ++result.clipped_count;
    }
    return result;
}

}  // namespace hullopt::aspace
