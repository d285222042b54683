#include "hullopt/rom/pod.hpp"

#include "hullopt/error.hpp"

#include <Eigen/SVD>

namespace hullopt::rom {

PodResult pod(const Eigen::MatrixXd& snapshots, int modes) {
    const Eigen::Index n = snapshots.rows();
    const Eigen::Index m = snapshots.cols();
    if (n == 0 || m == 0) throw ConfigError("pod: empty snapshot matrix");
    if (modes < 1 || modes > std::min(n, m)) throw ConfigError("pod: mode count out of range");

    Eigen::BDCSVD<Eigen::MatrixXd> svd(snapshots, Eigen::ComputeThinU);
    PodResult result;
    result.basis.modes = svd.matrixU().leftCols(modes);
    result.basis.singular_values = svd.singularValues().head(modes);
    result.coefficients = result.basis.modes.transpose() * snapshots;
    return result;
}

}  // namespace hullopt::rom
