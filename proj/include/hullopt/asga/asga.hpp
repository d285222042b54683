#pragma once

#include "hullopt/aspace/active_subspace.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <functional>
#include <limits>
#include <random>
#include <vector>

namespace hullopt::asga {

/// Genome in normalized design coordinates [-1,1]^n; lower fitness is better.
struct Individual {
    Eigen::VectorXd genes;
    double fitness = std::numeric_limits<double>::quiet_NaN();

    bool evaluated() const { return !std::isnan(fitness); }
};

struct AsgaConfig {
    int dimension = 0;
    int population = 100;
    int offspring = 20;
    int generations = 150;
    double crossover_probability = 0.5;
    double mutation_probability = 0.5;
    int backmap_count = 2;
    int as_dim = 1;
    int elite_count = 2;
    std::uint64_t seed = 0;
    bool use_active_subspace = true;
    bool gradients_from_full_history = true;  // otherwise only the current population
    int gradient_neighbors = 0;               // 0 selects max(n+2, 2n) capped at the sample count
    double mutation_scale = 0.1;              // fraction of the coordinate range
    double blend_alpha = 0.5;                 // BLX-alpha crossover parameter

    void validate() const;
};

struct GenerationStats {
    int generation = 0;
    long evaluations = 0;  // cumulative
    double best = 0.0;
    double mean = 0.0;
};

struct OptimizeResult {
    Individual best;
    std::vector<GenerationStats> history;
    long evaluations = 0;
    int nonfinite_evaluations = 0;
    int as_fallback_generations = 0;  // generations that ran plain GA for lack of history
    int clipped_backmap_points = 0;
    Eigen::VectorXd last_eigenvalues;  // spectrum of the final AS build, if any
};

using FitnessFn = std::function<double(const Eigen::VectorXd&)>;

/// One plain-GA step: truncation selection, blend crossover, Gaussian
/// mutation, elite survivors. Offspring are returned unevaluated.
std::vector<Individual> ga_generation(const std::vector<Individual>& pop, const AsgaConfig& cfg,
                                      std::mt19937_64& rng);

/// One ASGA step: active subspace from the evaluation history, crossover and
/// mutation in reduced coordinates, back-mapping into up to B candidates per
/// reduced offspring. Falls back to plain GA when the history is too small.
std::vector<Individual> asga_generation(const std::vector<Individual>& pop, const Eigen::MatrixXd& history_genes,
                                        const Eigen::VectorXd& history_values, const AsgaConfig& cfg,
                                        std::mt19937_64& rng, OptimizeResult* diagnostics = nullptr);

/// Full optimization loop; fully reproducible for a fixed seed and config.
OptimizeResult optimize(const FitnessFn& fitness, const AsgaConfig& cfg);

}  // namespace hullopt::asga
