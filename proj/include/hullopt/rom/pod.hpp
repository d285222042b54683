#pragma once

#include <Eigen/Dense>

namespace hullopt::rom {

/// Truncated POD basis: orthonormal modes (left singular vectors) and the
/// corresponding singular values in non-increasing order.
struct PodBasis {
    Eigen::MatrixXd modes;            // dofs x N
    Eigen::VectorXd singular_values;  // N, descending

    int mode_count() const { return static_cast<int>(modes.cols()); }
};

struct PodResult {
    PodBasis basis;
    Eigen::MatrixXd coefficients;  // N x M, C = U_N^T X
};

/// Thin SVD of the snapshot matrix truncated to the first `modes` most
/// energetic modes; 1 <= modes <= min(dofs, snapshots).
PodResult pod(const Eigen::MatrixXd& snapshots, int modes);

}  // namespace hullopt::rom
