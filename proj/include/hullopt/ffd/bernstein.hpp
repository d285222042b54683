#pragma once

#include <vector>

namespace hullopt::ffd {

/// Bernstein basis value C(n,i) t^i (1-t)^(n-i). Throws ConfigError for
/// i outside [0,n] or t outside [0,1].
double bernstein(int i, int n, double t);

/// All n+1 Bernstein weights at t via the de Casteljau-style recurrence
/// (numerically exact partition of unity to roundoff).
std::vector<double> bernstein_row(int n, double t);

}  // namespace hullopt::ffd
