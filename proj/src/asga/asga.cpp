#include "hullopt/asga/asga.hpp"

#include "hullopt/error.hpp"

#include <algorithm>
#include <cmath>

namespace hullopt::asga {

namespace {

bool fitness_less(const Individual& a, const Individual& b) { return a.fitness < b.fitness; }

std::vector<Individual> sorted_by_fitness(std::vector<Individual> pop) {
    std::stable_sort(pop.begin(), pop.end(), fitness_less);
    return pop;
}

/// BLX-alpha blend crossover per coordinate; result is clipped by the caller.
Eigen::VectorXd blend(const Eigen::VectorXd& a, const Eigen::VectorXd& b, double alpha, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    Eigen::VectorXd child(a.size());
    for (Eigen::Index i = 0; i < a.size(); ++i) {
        const double lo = std::min(a[i], b[i]);
        const double hi = std::max(a[i], b[i]);
        const double d = hi - lo;
        child[i] = (lo - alpha * d) + uni(rng) * ((hi + alpha * d) - (lo - alpha * d));
    }
    return child;
}

/// Reproduction in an arbitrary coordinate box shared by GA (full space) and
/// ASGA (reduced space).
Eigen::VectorXd reproduce(const Eigen::VectorXd& p1, const Eigen::VectorXd& p2, const Eigen::VectorXd& lo,
                          const Eigen::VectorXd& hi, const AsgaConfig& cfg, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    std::normal_distribution<double> gauss(0.0, 1.0);
    Eigen::VectorXd child = (uni(rng) < cfg.crossover_probability) ? blend(p1, p2, cfg.blend_alpha, rng) : p1;
    for (Eigen::Index i = 0; i < child.size(); ++i) {
        if (uni(rng) < cfg.mutation_probability) child[i] += gauss(rng) * cfg.mutation_scale * (hi[i] - lo[i]);
        child[i] = std::clamp(child[i], lo[i], hi[i]);
    }
    return child;
}

std::vector<Individual> assemble_next(const std::vector<Individual>& sorted_pop, std::vector<Individual> offspring,
                                      const AsgaConfig& cfg) {
    // Best survivors fill the population around the new offspring; elites are
    // always retained.
    const int t = cfg.population;
    int survivors = std::max(cfg.elite_count, t - static_cast<int>(offspring.size()));
    survivors = std::min(survivors, static_cast<int>(sorted_pop.size()));
    std::vector<Individual> next(sorted_pop.begin(), sorted_pop.begin() + survivors);
    for (auto& child : offspring) {
        if (static_cast<int>(next.size()) >= t + cfg.offspring * std::max(1, cfg.backmap_count)) break;
        next.push_back(std::move(child));
    }
    return next;
}

std::pair<const Individual*, const Individual*> pick_parents(const std::vector<Individual>& pool,
                                                             std::mt19937_64& rng) {
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    const std::size_t i = pick(rng);
    std::size_t j = pick(rng);
    if (pool.size() > 1 && j == i) j = (j + 1) % pool.size();
    return {&pool[i], &pool[j]};
}

}  // namespace

void AsgaConfig::validate() const {
    if (dimension < 1) throw ConfigError("asga config: dimension must be >= 1");
    if (population < 2 || offspring < 1 || generations < 1 || backmap_count < 1)
        throw ConfigError("asga config: population/offspring/generations/backmap must be >= 1");
    if (crossover_probability < 0.0 || crossover_probability > 1.0 || mutation_probability < 0.0 ||
        mutation_probability > 1.0)
        throw ConfigError("asga config: probabilities must lie in [0,1]");
    if (as_dim < 1 || as_dim > dimension) throw ConfigError("asga config: active dimension out of range");
    if (elite_count < 1 || elite_count > population) throw ConfigError("asga config: elite count out of range");
}

std::vector<Individual> ga_generation(const std::vector<Individual>& pop, const AsgaConfig& cfg,
                                      std::mt19937_64& rng) {
    const auto sorted = sorted_by_fitness(pop);
    const int parent_count = std::max(2, (static_cast<int>(sorted.size()) + 1) / 2);
    const std::vector<Individual> parents(sorted.begin(),
                                          sorted.begin() + std::min<std::size_t>(sorted.size(), parent_count));

    const Eigen::VectorXd lo = Eigen::VectorXd::Constant(cfg.dimension, -1.0);
    const Eigen::VectorXd hi = Eigen::VectorXd::Constant(cfg.dimension, 1.0);
    std::vector<Individual> offspring;
    offspring.reserve(static_cast<std::size_t>(cfg.offspring));
    for (int c = 0; c < cfg.offspring; ++c) {
        const auto [p1, p2] = pick_parents(parents, rng);
        offspring.push_back(Individual{reproduce(p1->genes, p2->genes, lo, hi, cfg, rng)});
    }
    return assemble_next(sorted, std::move(offspring), cfg);
}

std::vector<Individual> asga_generation(const std::vector<Individual>& pop, const Eigen::MatrixXd& history_genes,
                                        const Eigen::VectorXd& history_values, const AsgaConfig& cfg,
                                        std::mt19937_64& rng, OptimizeResult* diagnostics) {
    const int n = cfg.dimension;
    const int k = static_cast<int>(history_genes.rows());
    const int neighbors = cfg.gradient_neighbors > 0 ? cfg.gradient_neighbors : std::max(n + 2, 2 * n);
    if (k < std::max(n + 2, neighbors)) {
        if (diagnostics) ++diagnostics->as_fallback_generations;
        return ga_generation(pop, cfg, rng);
    }

    aspace::ActiveSubspace as;
    try {
        const auto grads = aspace::estimate_gradients(history_genes, history_values, std::min(neighbors, k));
        as = aspace::build_subspace(grads.gradients, cfg.as_dim);
    } catch (const Error&) {
        if (diagnostics) ++diagnostics->as_fallback_generations;
        return ga_generation(pop, cfg, rng);
    }
    if (diagnostics) diagnostics->last_eigenvalues = as.eigenvalues;

    const auto sorted = sorted_by_fitness(pop);
    const int parent_count = std::max(2, (static_cast<int>(sorted.size()) + 1) / 2);

    // Project the parent pool to the active coordinates and bound the reduced
    // box by the projected population range, padded 10%.
    Eigen::MatrixXd reduced(parent_count, cfg.as_dim);
    for (int i = 0; i < parent_count; ++i)
        reduced.row(i) = aspace::forward_map(as, sorted[static_cast<std::size_t>(i)].genes).transpose();
    Eigen::VectorXd lo = reduced.colwise().minCoeff();
    Eigen::VectorXd hi = reduced.colwise().maxCoeff();
    const Eigen::VectorXd pad = 0.1 * (hi - lo).cwiseMax(1e-12);
    lo -= pad;
    hi += pad;

    std::uniform_int_distribution<int> pick(0, parent_count - 1);
    std::vector<Individual> offspring;
    for (int c = 0; c < cfg.offspring; ++c) {
        const int i = pick(rng);
        int j = pick(rng);
        if (parent_count > 1 && j == i) j = (j + 1) % parent_count;
        const Eigen::VectorXd q = reproduce(reduced.row(i), reduced.row(j), lo, hi, cfg, rng);
        auto mapped = aspace::back_map(as, q, cfg.backmap_count, rng);
        if (diagnostics) diagnostics->clipped_backmap_points += mapped.clipped_count;
        for (auto& point : mapped.points) offspring.push_back(Individual{std::move(point)});
    }
    return assemble_next(sorted, std::move(offspring), cfg);
}

OptimizeResult optimize(const FitnessFn& fitness, const AsgaConfig& cfg) {
    cfg.validate();
    std::mt19937_64 rng(cfg.seed);
    std::uniform_real_distribution<double> uni(-1.0, 1.0);

    OptimizeResult result;
    result.best.fitness = std::numeric_limits<double>::infinity();
    std::vector<Eigen::VectorXd> history_genes;
    std::vector<double> history_values;

    auto evaluate = [&](std::vector<Individual>& pop) {
        for (auto& ind : pop) {
            if (ind.evaluated()) continue;
            double value = fitness(ind.genes);
            ++result.evaluations;
            if (!std::isfinite(value)) {
                ++result.nonfinite_evaluations;
                value = std::numeric_limits<double>::infinity();
            } else {
                history_genes.push_back(ind.genes);
                history_values.push_back(value);
            }
            ind.fitness = value;
            if (value < result.best.fitness) result.best = ind;
        }
    };

    std::vector<Individual> pop(static_cast<std::size_t>(cfg.population));
    for (auto& ind : pop) {
        ind.genes.resize(cfg.dimension);
        for (int i = 0; i < cfg.dimension; ++i) ind.genes[i] = uni(rng);
    }
    evaluate(pop);

    auto record = [&](int generation) {
        GenerationStats s;
        s.generation = generation;
        s.evaluations = result.evaluations;
        s.best = std::numeric_limits<double>::infinity();
        double sum = 0.0;
        for (const auto& ind : pop) {
            s.best = std::min(s.best, ind.fitness);
            sum += ind.fitness;
        }
        s.mean = sum / static_cast<double>(pop.size());
        result.history.push_back(s);
    };
    record(0);

    for (int g = 1; g <= cfg.generations; ++g) {
        if (cfg.use_active_subspace) {
            const auto& source_genes = history_genes;
            Eigen::MatrixXd hg;
            Eigen::VectorXd hv;
            if (cfg.gradients_from_full_history) {
                hg.resize(static_cast<Eigen::Index>(source_genes.size()), cfg.dimension);
                hv.resize(static_cast<Eigen::Index>(source_genes.size()));
                for (std::size_t i = 0; i < source_genes.size(); ++i) {
                    hg.row(static_cast<Eigen::Index>(i)) = source_genes[i].transpose();
                    hv[static_cast<Eigen::Index>(i)] = history_values[i];
                }
            } else {
                hg.resize(static_cast<Eigen::Index>(pop.size()), cfg.dimension);
                hv.resize(static_cast<Eigen::Index>(pop.size()));
                for (std::size_t i = 0; i < pop.size(); ++i) {
                    hg.row(static_cast<Eigen::Index>(i)) = pop[i].genes.transpose();
                    hv[static_cast<Eigen::Index>(i)] = pop[i].fitness;
                }
            }
            pop = asga_generation(pop, hg, hv, cfg, rng, &result);
        } else {
            pop = ga_generation(pop, cfg, rng);
        }
        evaluate(pop);
        record(g);
    }
    return result;
}

}  // namespace hullopt::asga
