#pragma once

#include <Eigen/Dense>

#include <optional>
#include <vector>

namespace hullopt::rom {

/// Exponent convention for the squared-exponential kernel. The reference
/// formulation divides the squared distance by 2l; the more common convention
/// divides by 2l^2. Both are exposed; `by_2l` is the default.
enum class SqExpConvention { by_2l, by_2l_squared };

struct GprConfig {
    SqExpConvention convention = SqExpConvention::by_2l;
    double nugget_rel = 1e-8;   // relative to the mean kernel diagonal (sigma^2)
    double max_nugget_rel = 1e-4;
    int multistarts = 8;
    unsigned seed = 0;
    int max_iterations = 80;    // Nelder-Mead budget per start
    std::optional<double> fixed_sigma;   // skip hyperparameter search for sigma
    std::optional<double> fixed_length;  // skip hyperparameter search for l
};

/// One scalar-output GP with optimized hyperparameters and cached solve.
struct GpHead {
    double sigma = 1.0;
    double length = 1.0;
    double nugget = 0.0;    // absolute diagonal jitter actually used
    double constant = 0.0;  // nonzero only for the zero-variance (constant output) case
    Eigen::VectorXd alpha;
    double log_marginal_likelihood = 0.0;
};

/// Independent GPs over shared training inputs, one per output column.
/// Hyperparameters (sigma, l) are chosen per head by maximizing the log
/// marginal likelihood with a deterministic bounded multi-start search.
struct GprModel {
    Eigen::MatrixXd inputs;  // M x p
    std::vector<GpHead> heads;
    GprConfig config;

    int output_dim() const { return static_cast<int>(heads.size()); }

    /// Posterior mean at one query point.
    Eigen::VectorXd predict(const Eigen::VectorXd& x) const;
};

GprModel gpr_fit(const Eigen::MatrixXd& inputs, const Eigen::MatrixXd& outputs, const GprConfig& cfg = {});

}  // namespace hullopt::rom
