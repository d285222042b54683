#include "hullopt/rom/gpr.hpp"

#include "hullopt/error.hpp"

#include <Eigen/Cholesky>

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <random>

namespace hullopt::rom {

namespace {

Eigen::MatrixXd squared_distances(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
    const Eigen::VectorXd na = a.rowwise().squaredNorm();
    const Eigen::VectorXd nb = b.rowwise().squaredNorm();
    Eigen::MatrixXd d2 = na.replicate(1, b.rows()) + nb.transpose().replicate(a.rows(), 1) - 2.0 * a * b.transpose();
    return d2.cwiseMax(0.0);
}

Eigen::MatrixXd kernel(const Eigen::MatrixXd& d2, double sigma, double length, SqExpConvention conv) {
    const double denom = conv == SqExpConvention::by_2l ? 2.0 * length : 2.0 * length * length;
    return (sigma * sigma) * (-d2.array() / denom).exp().matrix();
}

/// Simplex minimizer clamped to a box; deterministic and derivative-free.
Eigen::VectorXd nelder_mead(const std::function<double(const Eigen::VectorXd&)>& f, Eigen::VectorXd x0,
                            const Eigen::VectorXd& lo, const Eigen::VectorXd& hi, int max_iter) {
    const int d = static_cast<int>(x0.size());
    auto clamp = [&](Eigen::VectorXd x) {
        for (int i = 0; i < d; ++i) x[i] = std::clamp(x[i], lo[i], hi[i]);
        return x;
    };
    std::vector<std::pair<double, Eigen::VectorXd>> simplex;
    simplex.reserve(static_cast<std::size_t>(d) + 1);
    x0 = clamp(std::move(x0));
    simplex.emplace_back(f(x0), x0);
    for (int i = 0; i < d; ++i) {
        Eigen::VectorXd xi = x0;
        xi[i] += 0.25 * (hi[i] - lo[i]) * (xi[i] < 0.5 * (lo[i] + hi[i]) ? 1.0 : -1.0);
        xi = clamp(std::move(xi));
        simplex.emplace_back(f(xi), xi);
    }
    auto by_value = [](const auto& a, const auto& b) { return a.first < b.first; };
    for (int it = 0; it < max_iter; ++it) {
        std::sort(simplex.begin(), simplex.end(), by_value);
        Eigen::VectorXd centroid = Eigen::VectorXd::Zero(d);
        for (int i = 0; i < d; ++i) centroid += simplex[static_cast<std::size_t>(i)].second;
        centroid /= static_cast<double>(d);
        auto& worst = simplex.back();

        const Eigen::VectorXd xr = clamp(centroid + (centroid - worst.second));
        const double fr = f(xr);
        if (fr < simplex.front().first) {
            const Eigen::VectorXd xe = clamp(centroid + 2.0 * (centroid - worst.second));
            const double fe = f(xe);
            worst = fe < fr ? std::make_pair(fe, xe) : std::make_pair(fr, xr);
        } else if (fr < simplex[static_cast<std::size_t>(d) - 1].first) {
            worst = {fr, xr};
        } else {
            const Eigen::VectorXd xc = clamp(centroid + 0.5 * (worst.second - centroid));
            const double fc = f(xc);
            if (fc < worst.first) {
                worst = {fc, xc};
            } else {
                for (std::size_t i = 1; i < simplex.size(); ++i) {
                    simplex[i].second = clamp(0.5 * (simplex[i].second + simplex[0].second));
                    simplex[i].first = f(simplex[i].second);
                }
            }
        }
        if (std::abs(simplex.front().first - simplex.back().first) < 1e-10 *
                (1.0 + std::abs(simplex.front().first)))
            break;
    }
    std::sort(simplex.begin(), simplex.end(), by_value);
    return simplex.front().second;
}

}  // namespace

Eigen::VectorXd GprModel::predict(const Eigen::VectorXd& x) const {
    Eigen::VectorXd d2(inputs.rows());
    for (Eigen::Index i = 0; i < inputs.rows(); ++i) d2[i] = (inputs.row(i).transpose() - x).squaredNorm();
    Eigen::VectorXd out(output_dim());
    for (int h = 0; h < output_dim(); ++h) {
        const GpHead& head = heads[static_cast<std::size_t>(h)];
        const double denom = config.convention == SqExpConvention::by_2l ? 2.0 * head.length
                                                                         : 2.0 * head.length * head.length;
        const Eigen::VectorXd kstar =
            (head.sigma * head.sigma) * (-d2.array() / denom).exp().matrix();
        out[h] = head.constant + kstar.dot(head.alpha);
    }
    return out;
}

GprModel gpr_fit(const Eigen::MatrixXd& inputs, const Eigen::MatrixXd& outputs, const GprConfig& cfg) {
    const Eigen::Index m = inputs.rows();
    if (m < 2) throw ConfigError("gpr_fit: need at least 2 training samples");
    if (outputs.rows() != m) throw ConfigError("gpr_fit: inputs/outputs row mismatch");

    const Eigen::MatrixXd d2 = squared_distances(inputs, inputs);
    for (Eigen::Index i = 0; i < m; ++i) {
        for (Eigen::Index j = i + 1; j < m; ++j) {
            if (d2(i, j) == 0.0) throw ConfigError("gpr_fit: duplicate training inputs");
        }
    }
    // Characteristic squared-distance scale for the length-scale search box.
    std::vector<double> offdiag;
    offdiag.reserve(static_cast<std::size_t>(m * (m - 1) / 2));
    for (Eigen::Index i = 0; i < m; ++i) {
        for (Eigen::Index j = i + 1; j < m; ++j) offdiag.push_back(d2(i, j));
    }
    std::nth_element(offdiag.begin(), offdiag.begin() + static_cast<long>(offdiag.size() / 2), offdiag.end());
    const double median_d2 = std::max(offdiag[offdiag.size() / 2], 1e-300);
    const double length_scale = cfg.convention == SqExpConvention::by_2l ? median_d2 : std::sqrt(median_d2);

    GprModel model;
    model.inputs = inputs;
    model.config = cfg;
    model.heads.resize(static_cast<std::size_t>(outputs.cols()));

    auto chol_lml = [&](double sigma, double length, const Eigen::VectorXd& y, double nugget_abs,
                        Eigen::VectorXd* alpha_out) -> double {
        Eigen::MatrixXd K = kernel(d2, sigma, length, cfg.convention);
        K.diagonal().array() += nugget_abs;
        Eigen::LLT<Eigen::MatrixXd> llt(K);
        if (llt.info() != Eigen::Success) return -std::numeric_limits<double>::infinity();
        const Eigen::VectorXd alpha = llt.solve(y);
        double logdet = 0.0;
        for (Eigen::Index i = 0; i < m; ++i) logdet += std::log(llt.matrixL()(i, i));
        if (alpha_out) *alpha_out = alpha;
        return -0.5 * y.dot(alpha) - logdet - 0.5 * static_cast<double>(m) * std::log(2.0 * std::numbers::pi);
    };

    std::mt19937_64 rng(cfg.seed);

    for (Eigen::Index c = 0; c < outputs.cols(); ++c) {
        GpHead& head = model.heads[static_cast<std::size_t>(c)];
        Eigen::VectorXd y = outputs.col(c);
        const double ymean = y.mean();
        const double ystd = std::sqrt((y.array() - ymean).square().mean());

        // Exactly constant outputs: the zero-variance limit where the posterior
        // mean is that constant everywhere.
        if (ystd <= 1e-14 * (std::abs(ymean) + 1.0)) {
            head.constant = ymean;
            head.sigma = cfg.fixed_sigma.value_or(1.0);
            head.length = cfg.fixed_length.value_or(length_scale);
            head.nugget = head.sigma * head.sigma * cfg.nugget_rel;
            head.alpha = Eigen::VectorXd::Zero(m);
            continue;
        }

        const double sig_lo = std::log(1e-3 * ystd), sig_hi = std::log(1e3 * ystd);
        const double len_lo = std::log(1e-2 * length_scale), len_hi = std::log(1e2 * length_scale);

        std::vector<int> free_dims;  // 0 = log sigma, 1 = log length
        if (!cfg.fixed_sigma) free_dims.push_back(0);
        if (!cfg.fixed_length) free_dims.push_back(1);

        auto unpack = [&](const Eigen::VectorXd& x, double& sigma, double& length) {
            sigma = cfg.fixed_sigma.value_or(0.0);
            length = cfg.fixed_length.value_or(0.0);
            for (std::size_t i = 0; i < free_dims.size(); ++i) {
                if (free_dims[i] == 0) sigma = std::exp(x[static_cast<Eigen::Index>(i)]);
                else length = std::exp(x[static_cast<Eigen::Index>(i)]);
            }
        };

        double best_sigma = cfg.fixed_sigma.value_or(ystd);
        double best_length = cfg.fixed_length.value_or(length_scale);

        if (!free_dims.empty()) {
            const int d = static_cast<int>(free_dims.size());
            Eigen::VectorXd lo(d), hi(d);
            for (int i = 0; i < d; ++i) {
                lo[i] = free_dims[static_cast<std::size_t>(i)] == 0 ? sig_lo : len_lo;
                hi[i] = free_dims[static_cast<std::size_t>(i)] == 0 ? sig_hi : len_hi;
            }
            auto objective = [&](const Eigen::VectorXd& x) {
                double sigma, length;
                unpack(x, sigma, length);
                return -chol_lml(sigma, length, y, sigma * sigma * cfg.nugget_rel, nullptr);
            };

            double best_value = std::numeric_limits<double>::infinity();
            std::uniform_real_distribution<double> uni(0.0, 1.0);
            for (int start = 0; start < std::max(1, cfg.multistarts); ++start) {
                Eigen::VectorXd x0(d);
                if (start == 0) {
                    for (int i = 0; i < d; ++i)
                        x0[i] = free_dims[static_cast<std::size_t>(i)] == 0 ? std::log(ystd) : std::log(length_scale);
                } else {
                    for (int i = 0; i < d; ++i) x0[i] = lo[i] + uni(rng) * (hi[i] - lo[i]);
                }
                const Eigen::VectorXd xbest = nelder_mead(objective, x0, lo, hi, cfg.max_iterations);
                const double v = objective(xbest);
                if (v < best_value) {
                    best_value = v;
                    unpack(xbest, best_sigma, best_length);
                }
            }
        }

        head.sigma = best_sigma;
        head.length = best_length;
        // Final factorization with jitter escalation.
        double nugget_rel = cfg.nugget_rel;
        double lml = -std::numeric_limits<double>::infinity();
        while (true) {
            lml = chol_lml(head.sigma, head.length, y, head.sigma * head.sigma * nugget_rel, &head.alpha);
            if (std::isfinite(lml)) break;
            nugget_rel *= 10.0;
            if (nugget_rel > cfg.max_nugget_rel)
                throw NumericError("gpr_fit: kernel matrix not positive definite after maximum jitter escalation");
        }
        head.nugget = head.sigma * head.sigma * nugget_rel;
        head.log_marginal_likelihood = lml;
        head.constant = 0.0;
    }
    return model;
}

}  // namespace hullopt::rom
