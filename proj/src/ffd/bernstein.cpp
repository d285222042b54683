#include "hullopt/ffd/bernstein.hpp"

#include "hullopt/error.hpp"

#include <cmath>

namespace hullopt::ffd {

double bernstein(int i, int n, double t) {
    if (n < 0 || i < 0 || i > n) throw ConfigError("bernstein: index out of range");
    if (!(t >= 0.0 && t <= 1.0)) throw ConfigError("bernstein: t outside [0,1]");
    double binom = 1.0;
    for (int k = 1; k <= i; ++k) binom *= static_cast<double>(n - i + k) / static_cast<double>(k);
    return binom * std::pow(t, i) * std::pow(1.0 - t, n - i);
}

std::vector<double> bernstein_row(int n, double t) {
    if (n < 0) throw ConfigError("bernstein_row: negative degree");
    if (!(t >= 0.0 && t <= 1.0)) throw ConfigError("bernstein_row: t outside [0,1]");
    std::vector<double> w(static_cast<std::size_t>(n) + 1, 0.0);
    w[0] = 1.0;
    const double s = 1.0 - t;
    for (int j = 1; j <= n; ++j) {
        double saved = 0.0;
        for (int k = 0; k < j; ++k) {
            const double tmp = w[static_cast<std::size_t>(k)];
            w[static_cast<std::size_t>(k)] = saved + s * tmp;
            saved = t * tmp;
        }
        w[static_cast<std::size_t>(j)] = saved;
    }
    return w;
}

}  // namespace hullopt::ffd
