#pragma once

#include <Eigen/Dense>

#include <random>
#include <vector>

namespace hullopt::aspace {

/// Dominant eigenspace of the uncentered gradient covariance. [W1 W2] is
/// orthogonal; eigenvalues are non-increasing.
struct ActiveSubspace {
    Eigen::MatrixXd w1;  // n x as_dim
    Eigen::MatrixXd w2;  // n x (n - as_dim)
    Eigen::VectorXd eigenvalues;

    int full_dim() const { return static_cast<int>(w1.rows()); }
    int active_dim() const { return static_cast<int>(w1.cols()); }
};

struct GradientEstimate {
    Eigen::MatrixXd gradients;  // k x n
    int fallback_count = 0;     // samples that fell back to the global linear model
};

/// Per-sample gradients from local linear least-squares fits over the nearest
/// `neighbors` points; rank-deficient local systems fall back to one global
/// linear model, flagged in the result.
GradientEstimate estimate_gradients(const Eigen::MatrixXd& samples, const Eigen::VectorXd& values, int neighbors);

/// Monte Carlo second-moment matrix C = (1/k) sum g g^T, symmetric
/// eigendecomposition, split at `as_dim`. Eigenvector signs are normalized so
/// the largest-magnitude entry is positive.
ActiveSubspace build_subspace(const Eigen::MatrixXd& gradients, int as_dim);

/// Active coordinates W1^T mu.
Eigen::VectorXd forward_map(const ActiveSubspace& as, const Eigen::VectorXd& mu);

struct BackMapResult {
    std::vector<Eigen::VectorXd> points;  // each inside [-1,1]^n
    int clipped_count = 0;                // points produced by the clipping fallback
};

/// Reconstructs up to `count` full-space points W1 q + W2 eta with eta drawn
/// uniformly over the box-induced per-coordinate range; rejection sampling
/// with a capped attempt budget, then coordinate clipping so at least one
/// point is always returned.
BackMapResult back_map(const ActiveSubspace& as, const Eigen::VectorXd& q, int count, std::mt19937_64& rng,
                       int attempt_budget = 100);

}  // namespace hullopt::aspace
