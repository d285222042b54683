// Acceptance gate: one pass/fail line per criterion, nonzero exit on any
// failure. Each criterion is self-contained and prints its runtime; the
// runtime budget is part of the criterion.

#include "hullopt/aspace/active_subspace.hpp"
#include "hullopt/asga/asga.hpp"
#include "hullopt/cli/pipeline.hpp"
#include "hullopt/cli/run_config.hpp"
#include "hullopt/error.hpp"
#include "hullopt/ffd/bernstein.hpp"
#include "hullopt/ffd/dtc_map.hpp"
#include "hullopt/fom/fixtures.hpp"
#include "hullopt/fom/snapshots.hpp"
#include "hullopt/fom/synthetic_fom.hpp"
#include "hullopt/geometry/field.hpp"
#include "hullopt/objective/resistance.hpp"
#include "hullopt/rbf/morph.hpp"
#include "hullopt/rom/pod.hpp"
#include "hullopt/rom/pod_gpr.hpp"
#include "hullopt/rom/rom_io.hpp"

#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

using namespace hullopt;
using geometry::SurfaceMesh;
using nlohmann::json;

namespace {

struct Check {
    bool ok = true;
    std::ostringstream log;

    void require(bool condition, const std::string& what) {
        if (!condition) {
            ok = false;
            log << "    FAILED: " << what << '\n';
        }
    }
    void note(const std::string& what) { log << "    " << what << '\n'; }
};

double angle_between(const Eigen::VectorXd& a, const Eigen::VectorXd& b) {
    const double c = std::abs(a.normalized().dot(b.normalized()));
    return std::acos(std::min(1.0, c));
}

Eigen::VectorXd fixed_direction(int dim) {
    Eigen::VectorXd a(dim);
    for (int i = 0; i < dim; ++i) a[i] = std::cos(1.7 * i + 0.3) + 0.2;
    return a.normalized();
}

SurfaceMesh patch_from_points(const std::vector<Point3>& pts) {
    SurfaceMesh mesh;
    mesh.vertices = pts;
    for (std::size_t i = 0; i < pts.size(); ++i) mesh.vertex_ids.push_back(static_cast<std::int64_t>(i));
    for (std::size_t i = 0; i + 2 < pts.size(); ++i)
        mesh.triangles.push_back({0, static_cast<int>(i + 1), static_cast<int>(i + 2)});
    return mesh;
}

SurfaceMesh unit_cube_surface() {
    std::vector<Point3> v = {{0, 0, 0}, {1, 0, 0}, {1, 1, 0}, {0, 1, 0},
                             {0, 0, 1}, {1, 0, 1}, {1, 1, 1}, {0, 1, 1}};
    SurfaceMesh mesh;
    mesh.vertices = v;
    for (int i = 0; i < 8; ++i) mesh.vertex_ids.push_back(i);
    auto quad = [&](int a, int b, int c, int d) {
        mesh.triangles.push_back({a, b, c});
        mesh.triangles.push_back({a, c, d});
    };
    quad(0, 3, 2, 1);
    quad(4, 5, 6, 7);
    quad(0, 1, 5, 4);
    quad(3, 7, 6, 2);
    quad(0, 4, 7, 3);
    quad(1, 2, 6, 5);
    return mesh;
}

std::vector<ffd::ParameterVector> random_designs(int count, unsigned seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> uni(-0.2, 0.2);
    std::vector<ffd::ParameterVector> mus;
    for (int c = 0; c < count; ++c) {
        Eigen::VectorXd v(10);
        for (int i = 0; i < 10; ++i) v[i] = uni(rng);
        mus.push_back(ffd::ParameterVector::boxed(std::move(v)));
    }
    return mus;
}

double median(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    const std::size_t n = v.size();
    return n % 2 == 1 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

// --- Criterion 1: RBF interpolation exactness -------------------------------

void criterion_rbf(Check& c) {
    // Kernel unit values.
    const double R = 2.0;
    c.require(std::abs(rbf::wendland_kernel(0.0, R) - 1.0) < 1e-12, "phi(0) = 1");
    c.require(rbf::wendland_kernel(R, R) == 0.0, "phi(R) = 0");
    c.require(std::abs(rbf::wendland_kernel(R / 2.0, R) - 0.1875) < 1e-12, "phi(R/2) = 0.1875");

    // 50 random small configurations, m <= 30 controls.
    std::mt19937_64 rng(101);
    std::uniform_real_distribution<double> pos(-2.0, 2.0);
    std::uniform_real_distribution<double> dis(-0.5, 0.5);
    std::uniform_real_distribution<double> rad(1.0, 4.0);
    for (int rep = 0; rep < 50; ++rep) {
        const int m = 3 + rep % 28;
        std::vector<Point3> pts;
        while (static_cast<int>(pts.size()) < m) {
            const Point3 p(pos(rng), pos(rng), pos(rng));
            bool far = true;
            for (const auto& q : pts) far = far && (p - q).norm() > 0.1;
            if (far) pts.push_back(p);
        }
        SurfaceMesh before = patch_from_points(pts);
        SurfaceMesh after = before;
        double dmax = 0.0;
        for (auto& v : after.vertices) {
            const Point3 d(dis(rng), dis(rng), dis(rng));
            v += d;
            dmax = std::max(dmax, d.norm());
        }
        rbf::RbfConfig cfg;
        cfg.radius = rad(rng);
        const auto itp = rbf::fit(before, after, cfg);
        double worst = 0.0;
        for (int i = 0; i < m; ++i) {
            const Point3 want = after.vertices[static_cast<std::size_t>(i)] -
                                before.vertices[static_cast<std::size_t>(i)];
            worst = std::max(worst, (itp.evaluate(before.vertices[static_cast<std::size_t>(i)]) - want).norm());
        }
        c.require(worst / dmax < 1e-8,
                  "config " + std::to_string(rep) + ": control interpolation relative error " +
                      std::to_string(worst / dmax));
        c.require(itp.fit_residual < 1e-8, "config " + std::to_string(rep) + ": fit residual");
    }
}

// --- Criterion 2: FFD correctness --------------------------------------------

void criterion_ffd(Check& c) {
    fom::HullFixtureConfig hull_cfg;
    hull_cfg.rings = 24;
    hull_cfg.segments = 24;
    const SurfaceMesh hull = fom::make_hull_fixture(hull_cfg);
    const auto [lattice, map] = ffd::build_dtc_lattice(hull, {});

    // Identity at mu = 0.
    const auto mu0 = ffd::ParameterVector::boxed(Eigen::VectorXd::Zero(map.parameter_count));
    const SurfaceMesh same = ffd::ffd_deform(hull, ffd::apply_parameter_map(map, mu0, lattice));
    double drift = 0.0;
    for (int i = 0; i < hull.vertex_count(); ++i)
        drift = std::max(drift, (same.vertices[static_cast<std::size_t>(i)] -
                                 hull.vertices[static_cast<std::size_t>(i)])
                                    .norm());
    c.require(drift <= 1e-14, "identity at mu = 0 (max drift " + std::to_string(drift) + ")");

    // Partition of unity for degrees up to 16.
    for (int n = 1; n <= 16; ++n) {
        for (int s = 0; s <= 20; ++s) {
            const double t = s / 20.0;
            const auto row = ffd::bernstein_row(n, t);
            double sum = 0.0;
            for (const double w : row) sum += w;
            c.require(std::abs(sum - 1.0) < 1e-12, "partition of unity, degree " + std::to_string(n));
        }
    }

    // Outside-lattice fixity is exact (bitwise).
    ffd::FfdLattice unit;
    unit.displacements.assign(8, Point3::Zero());
    unit.displacement(0, 0, 0) = Point3(0.3, -0.2, 0.1);
    const std::vector<Point3> outside = {Point3(2.0, 2.0, 2.0), Point3(-0.1, 0.5, 0.5),
                                         Point3(0.5, 1.0000001, 0.5)};
    const auto kept = ffd::ffd_deform(std::span<const Point3>(outside), unit);
    for (std::size_t i = 0; i < outside.size(); ++i)
        c.require(kept[i] == outside[i], "outside-lattice point unchanged");

    // Trilinear corner case: one displaced corner moves the center by d/8.
    const Point3 d(0.3, -0.2, 0.1);
    const std::vector<Point3> center = {Point3(0.5, 0.5, 0.5)};
    const auto moved = ffd::ffd_deform(std::span<const Point3>(center), unit);
    c.require((moved[0] - center[0] - d / 8.0).norm() < 1e-12, "trilinear corner case d/8");

    // Parameter-table symmetry: a y-symmetric hull stays y-symmetric.
    std::map<std::tuple<double, double, double>, int> lookup;
    for (int i = 0; i < hull.vertex_count(); ++i) {
        const auto& v = hull.vertices[static_cast<std::size_t>(i)];
        lookup[{v.x(), v.y(), v.z()}] = i;
    }
    for (const auto& mu : random_designs(5, 202)) {
        const SurfaceMesh bent = ffd::ffd_deform(hull, ffd::apply_parameter_map(map, mu, lattice));
        for (int i = 0; i < hull.vertex_count(); ++i) {
            const auto& v = hull.vertices[static_cast<std::size_t>(i)];
            const auto it = lookup.find({v.x(), -v.y(), v.z()});
            c.require(it != lookup.end(), "mirror partner exists");
            if (it == lookup.end()) return;
            const auto& a = bent.vertices[static_cast<std::size_t>(i)];
            const auto& b = bent.vertices[static_cast<std::size_t>(it->second)];
            const double err = std::max({std::abs(a.x() - b.x()), std::abs(a.y() + b.y()),
                                         std::abs(a.z() - b.z())});
            if (err > 1e-10) {
                c.require(false, "symmetry preservation (error " + std::to_string(err) + ")");
                return;
            }
        }
    }
}

// --- Criterion 3: morph safety ------------------------------------------------

void criterion_morph(Check& c) {
    fom::HullFixtureConfig hull_cfg;
    hull_cfg.rings = 32;
    hull_cfg.segments = 32;
    const SurfaceMesh hull = fom::make_hull_fixture(hull_cfg);
    const auto [lattice, map] = ffd::build_dtc_lattice(hull, {});

    fom::BoxFixtureConfig box_cfg;
    box_cfg.nx = 20;
    box_cfg.ny = 16;
    box_cfg.nz = 16;
    const auto volume = fom::make_box_fixture(box_cfg);
    const auto base = geometry::quality_report(volume);
    const std::uint64_t hash = volume.topology_hash();

    rbf::RbfConfig rbf_cfg;
    rbf_cfg.control_stride = 2;

    double worst_drift = 0.0;
    for (const auto& mu : random_designs(20, 303)) {
        const SurfaceMesh bent = ffd::ffd_deform(hull, ffd::apply_parameter_map(map, mu, lattice));
        const auto morphed = rbf::morph_volume_mesh(volume, hull, bent, rbf_cfg);
        c.require(morphed.mesh.topology_hash() == hash, "topology hash preserved");
        c.require(morphed.quality.min_face_area > 0.0, "positive min face area");
        c.require(morphed.quality.min_cell_volume > 0.0, "positive min cell volume");
        const double drift = morphed.quality.avg_non_orthogonality - base.avg_non_orthogonality;
        worst_drift = std::max(worst_drift, drift);
        c.require(drift <= 5.0, "mean non-orthogonality increase <= 5 deg (got " + std::to_string(drift) + ")");
    }
    c.note("worst mean non-orthogonality increase: " + std::to_string(worst_drift) + " deg");
}

// --- Criterion 4: POD ----------------------------------------------------------

void criterion_pod(Check& c) {
    const int dofs = 40, m = 12;
    Eigen::MatrixXd X(dofs, m);
    for (int i = 0; i < dofs; ++i)
        for (int j = 0; j < m; ++j)
            X(i, j) = std::sin(0.3 * i + 0.7 * j) + 0.2 * std::cos(0.11 * i * (j + 1)) + 1.0 / (1.0 + i + j);

    // Full-rank reconstruction.
    const auto full = rom::pod(X, m);
    const double recon = (full.basis.modes * full.coefficients - X).norm() / X.norm();
    c.require(recon < 1e-10, "full-rank reconstruction (relative Frobenius " + std::to_string(recon) + ")");

    // Monotone truncation error.
    double prev = std::numeric_limits<double>::infinity();
    for (int n = 1; n <= m; ++n) {
        const auto r = rom::pod(X, n);
        const double err = (r.basis.modes * r.coefficients - X).norm();
        c.require(err <= prev + 1e-12, "monotone truncation error at N = " + std::to_string(n));
        prev = err;
    }

    // Singular values against the Gram-matrix oracle.
    const Eigen::MatrixXd gram = X.transpose() * X;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(gram);
    for (int k = 0; k < m; ++k) {
        const double oracle = std::sqrt(std::max(0.0, eig.eigenvalues()[m - 1 - k]));
        c.require(std::abs(full.basis.singular_values[k] - oracle) <
                      1e-8 * full.basis.singular_values[0],
                  "singular value " + std::to_string(k) + " matches Gram oracle");
    }
}

// --- Criterion 5: GPR ------------------------------------------------------------

void criterion_gpr(Check& c) {
    // Hand-solved 2x2 posterior.
    Eigen::MatrixXd inputs(2, 1), outputs(2, 1);
    inputs << 0.0, 1.0;
    outputs << 0.0, 1.0;
    rom::GprConfig cfg;
    cfg.fixed_sigma = 1.0;
    cfg.fixed_length = 1.0;
    cfg.nugget_rel = 1e-10;
    const auto model = rom::gpr_fit(inputs, outputs, cfg);
    const double nugget = model.heads[0].nugget;
    Eigen::Matrix2d K;
    K << 1.0 + nugget, std::exp(-0.5), std::exp(-0.5), 1.0 + nugget;
    const Eigen::Vector2d kstar = Eigen::Vector2d::Constant(std::exp(-0.125));
    const double want = kstar.dot(K.inverse() * outputs.col(0));
    const double got = model.predict(Eigen::VectorXd::Constant(1, 0.5))[0];
    c.require(std::abs(got - want) < 1e-10, "hand-solved 2x2 posterior");

    // Training-point interpolation at nugget 1e-10.
    std::mt19937_64 rng(404);
    std::uniform_real_distribution<double> uni(-1.0, 1.0);
    Eigen::MatrixXd tin(30, 2), tout(30, 1);
    for (int i = 0; i < 30; ++i) {
        tin(i, 0) = uni(rng);
        tin(i, 1) = uni(rng);
        tout(i, 0) = std::sin(2.0 * tin(i, 0)) * std::cos(tin(i, 1)) + 0.3 * tin(i, 1);
    }
    rom::GprConfig icfg;
    icfg.nugget_rel = 1e-10;
    const auto interp = rom::gpr_fit(tin, tout, icfg);
    const double scale = tout.col(0).cwiseAbs().maxCoeff();
    for (int i = 0; i < 30; ++i) {
        const double pred = interp.predict(tin.row(i).transpose())[0];
        c.require(std::abs(pred - tout(i, 0)) / scale < 1e-5,
                  "training interpolation at point " + std::to_string(i));
    }
}

// --- Criterion 6: ROM accuracy ----------------------------------------------------

void criterion_rom(Check& c) {
    cli::RunConfig cfg;
    cfg.hull_fixture.rings = 28;
    cfg.hull_fixture.segments = 28;
    cfg.threads = 1;
    const cli::PipelineContext ctx(cfg);
    const auto pipeline = ctx.snapshot_pipeline();

    const auto train = fom::sample_parameters(200, 10, -0.2, 0.2, 7);
    rom::SnapshotDb db;
    const auto gen = fom::generate_snapshots(train, pipeline, db, 1);
    c.require(gen.generated == 200 && gen.failed_tags.empty(), "200 snapshots generated");

    rom::RomConfig rom_cfg;
    rom_cfg.modes = 20;
    const auto roms = rom::build_roms(db, rom_cfg);

    std::vector<double> p_errs, tau_errs, ct_errs;
    for (const auto& mu : fom::sample_parameters(20, 10, -0.2, 0.2, 99)) {
        const SurfaceMesh bent = ctx.deform(mu);
        const auto [p, tau] = fom::synthetic_fom(bent, mu, ctx.spec, cfg.condition);
        const Eigen::VectorXd genes = mu.to_normalized();
        const Eigen::VectorXd p_hat = roms.pressure.predict_column(genes);
        const Eigen::VectorXd tau_hat = roms.shear.predict_column(genes);
        p_errs.push_back((p_hat - p.values).norm() / p.values.norm());
        tau_errs.push_back((tau_hat - tau.values).norm() / tau.values.norm());

        const double ct = objective::compute_ct(bent, p, tau, cfg.condition).ct;
        const double ct_rom = ctx.rom_ct(roms, mu);
        ct_errs.push_back(std::abs(ct_rom - ct) / std::abs(ct));
    }
    const double mp = median(p_errs), mt = median(tau_errs), mc = median(ct_errs);
    c.note("median errors: pressure " + std::to_string(mp) + ", shear " + std::to_string(mt) +
           ", ct " + std::to_string(mc));
    c.require(mp < 0.01, "median pressure field error < 1%");
    c.require(mt < 0.01, "median shear field error < 1%");
    c.require(mc < 0.01, "median ct error < 1%");
}

// --- Criterion 7: active subspace recovery ------------------------------------------

void criterion_active_subspace(Check& c) {
    const int n = 10;
    const Eigen::VectorXd a = fixed_direction(n);
    std::mt19937_64 rng(505);
    std::uniform_real_distribution<double> uni(-1.0, 1.0);
    Eigen::MatrixXd samples(500, n);
    Eigen::VectorXd values(500);
    Eigen::MatrixXd exact(500, n);
    for (int i = 0; i < 500; ++i) {
        for (int j = 0; j < n; ++j) samples(i, j) = uni(rng);
        const double t = samples.row(i).dot(a);
        values[i] = t * t;
        exact.row(i) = (2.0 * t) * a.transpose();
    }

    const auto as_exact = aspace::build_subspace(exact, 1);
    const double angle_exact = angle_between(as_exact.w1.col(0), a);
    c.note("eigenvector angle with exact gradients: " + std::to_string(angle_exact) + " rad");
    c.require(angle_exact < 1e-2, "exact-gradient recovery within 1e-2 rad");

    const auto est = aspace::estimate_gradients(samples, values, 2 * n);
    const auto as_local = aspace::build_subspace(est.gradients, 1);
    const double angle_local = angle_between(as_local.w1.col(0), a);
    c.note("eigenvector angle with local-linear gradients: " + std::to_string(angle_local) + " rad");
    c.require(angle_local < 0.15, "local-linear recovery within 0.15 rad");
}

// --- Criterion 8: ASGA against plain GA ------------------------------------------------

void criterion_asga(Check& c) {
    // Ridge benchmark f = (a.mu - 0.7)^2 with a steep coefficient vector: the
    // threshold band is then narrow along the ridge, which is exactly where
    // blend crossover in the full space keeps leaking inactive-coordinate
    // noise while reduced-space reproduction does not.
    const int n = 10;
    const Eigen::VectorXd a = 300.0 * fixed_direction(n);
    const auto fitness = [&](const Eigen::VectorXd& genes) {
        const double t = genes.dot(a) - 0.7;
        return t * t;
    };

    asga::AsgaConfig base;
    base.dimension = n;
    base.population = 40;
    base.offspring = 20;
    base.generations = 150;
    base.backmap_count = 1;
    base.as_dim = 1;
    base.gradients_from_full_history = false;

    auto evals_to_threshold = [](const asga::OptimizeResult& r) {
        for (const auto& g : r.history)
            if (g.best < 1e-3) return static_cast<double>(g.evaluations);
        return static_cast<double>(r.evaluations);
    };

    std::vector<double> asga_evals, ga_evals;
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        asga::AsgaConfig cfg = base;
        cfg.seed = seed;
        cfg.use_active_subspace = true;
        asga_evals.push_back(evals_to_threshold(asga::optimize(fitness, cfg)));
        cfg.use_active_subspace = false;
        ga_evals.push_back(evals_to_threshold(asga::optimize(fitness, cfg)));
    }
    const double ma = median(asga_evals), mg = median(ga_evals);
    c.note("median evaluations to f < 1e-3: asga " + std::to_string(ma) + ", ga " + std::to_string(mg));
    c.require(ma <= 0.5 * mg, "asga needs at most half the plain-ga evaluations");
}

// --- Criterion 9: end-to-end pipeline ------------------------------------------------------

void criterion_end_to_end(Check& c) {
    namespace fs = std::filesystem;
    const std::string work = (fs::temp_directory_path() / "hullopt_acceptance_e2e").string();
    fs::remove_all(work);

    cli::RunConfig cfg;
    cfg.paths.work = work;
    cfg.hull_fixture.rings = 20;
    cfg.hull_fixture.segments = 20;
    cfg.box_fixture.nx = 8;
    cfg.box_fixture.ny = 6;
    cfg.box_fixture.nz = 6;
    cfg.sampling.count = 200;
    cfg.sampling.scheme = fom::SampleScheme::latin_hypercube;
    cfg.rom.modes = 20;
    cfg.asga.population = 100;
    cfg.asga.offspring = 20;
    cfg.asga.generations = 400;
    // Gradients from the current population: as the search narrows, the
    // active direction re-aims at whatever descent directions remain.
    cfg.asga.gradients_from_full_history = false;
    cfg.asga.crossover_probability = 0.5;
    cfg.asga.mutation_probability = 0.5;
    cfg.asga.backmap_count = 2;
    cfg.asga.as_dim = 1;
    cfg.asga.seed = 4;
    cfg.threads = 1;

    cli::cmd_fixture(cfg);
    cli::cmd_sample(cfg);
    cli::cmd_snapshots(cfg);
    cli::cmd_rom_build(cfg);
    cli::cmd_optimize(cfg);
    // Three validation runs with enrichment: the first adds the optimum to the
    // database and rebuilds the ROM, the later ones re-validate against it.
    for (int run = 0; run < 3; ++run) cli::cmd_validate(cfg, true);
    cli::cmd_report(cfg);

    std::ifstream vin(work + "/validate_history.json");
    json history;
    vin >> history;
    c.require(history.size() == 3, "three validation records");
    std::vector<double> errors;
    for (const auto& rec : history) errors.push_back(rec.at("rom_relative_error").get<double>());
    std::ostringstream eline;
    eline << "validated rom errors:";
    for (const double e : errors) eline << ' ' << e;
    c.note(eline.str());
    for (std::size_t i = 1; i < errors.size(); ++i)
        c.require(errors[i] <= errors[i - 1] + 1e-12, "rom error non-increasing across runs");

    // Brute-force reference: the best of 1e5 oracle evaluations.
    const cli::PipelineContext ctx(cfg);
    const double ct_found = history.back().at("ct_oracle").get<double>();
    double ct_best = std::numeric_limits<double>::infinity();
    for (const auto& mu : fom::sample_parameters(100000, 10, -0.2, 0.2, 777)) {
        ct_best = std::min(ct_best, ctx.oracle_ct(mu));
    }
    const double rel = (ct_found - ct_best) / std::abs(ct_best);
    c.note("ct at pipeline optimum " + std::to_string(ct_found) + ", brute-force best " +
           std::to_string(ct_best) + ", relative gap " + std::to_string(rel));
    c.require(rel < 0.01, "pipeline optimum within 1% of the brute-force oracle optimum");
}

// --- Criterion 10: objective sanity -----------------------------------------------------------

void criterion_objective(Check& c) {
    const SurfaceMesh cube = unit_cube_surface();
    auto shear_x = [&](double value) {
        Eigen::VectorXd v = Eigen::VectorXd::Zero(3 * cube.vertex_count());
        for (int i = 0; i < cube.vertex_count(); ++i) v[3 * i] = value;
        return geometry::NodalField::vector3(cube, v);
    };

    // Constant pressure on a closed immersed surface integrates to zero.
    objective::HullCondition deep;
    deep.waterline_z = 2.0;
    const auto p_const = geometry::NodalField::scalar(cube, Eigen::VectorXd::Constant(8, 1234.5));
    const auto zero_div = objective::compute_ct(cube, p_const, shear_x(0.0), deep);
    c.require(std::abs(zero_div.pressure_force) < 1e-10, "divergence-theorem zero pressure force");
    c.require(std::abs(zero_div.ct) < 1e-10, "divergence-theorem zero ct");

    // Uniform shear closed form on a half-immersed cube.
    objective::HullCondition cond;
    cond.waterline_z = 0.5;
    const double tau0 = 2.5e-3;
    const auto p_zero = geometry::NodalField::scalar(cube, Eigen::VectorXd::Zero(8));
    const auto shear = objective::compute_ct(cube, p_zero, shear_x(tau0), cond);
    const double area = 3.0, delta = 0.5;
    const double want = tau0 * cond.density * area /
                        (0.5 * cond.density * cond.speed * cond.speed * std::cbrt(delta * delta));
    c.require(std::abs(shear.ct - want) / want < 1e-10, "uniform-shear closed form");

    // Doubling the speed divides the coefficient exactly by four.
    const auto p_lin = geometry::NodalField::scalar(cube, Eigen::VectorXd::LinSpaced(8, -3.0, 5.0));
    const auto tau = shear_x(1.5e-3);
    const auto base = objective::compute_ct(cube, p_lin, tau, cond);
    objective::HullCondition fast = cond;
    fast.speed *= 2.0;
    const auto quarter = objective::compute_ct(cube, p_lin, tau, fast);
    c.require(quarter.ct == base.ct / 4.0, "exact speed-scaling law");
}

struct Criterion {
    std::string name;
    double budget_seconds;
    std::function<void(Check&)> run;
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {"RBF interpolation exactness", 5.0, criterion_rbf},
        {"FFD correctness", 5.0, criterion_ffd},
        {"volume morph safety", 180.0, criterion_morph},
        {"POD reconstruction and spectrum", 10.0, criterion_pod},
        {"GPR posterior and interpolation", 10.0, criterion_gpr},
        {"ROM accuracy on held-out designs", 300.0, criterion_rom},
        {"active subspace recovery", 30.0, criterion_active_subspace},
        {"ASGA efficiency vs plain GA", 120.0, criterion_asga},
        {"end-to-end optimization pipeline", 600.0, criterion_end_to_end},
        {"objective closed-form sanity", 10.0, criterion_objective},
    };

    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Check check;
        const auto start = std::chrono::steady_clock::now();
        try {
            criteria[i].run(check);
        } catch (const std::exception& e) {
            check.ok = false;
            check.log << "    EXCEPTION: " << e.what() << '\n';
        }
        const double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (elapsed > criteria[i].budget_seconds) {
            check.ok = false;
            check.log << "    FAILED: runtime budget " << criteria[i].budget_seconds << " s exceeded\n";
        }
        failures += check.ok ? 0 : 1;
        std::printf("[%2zu/10] %s  %-36s (%.1f s)\n", i + 1, check.ok ? "PASS" : "FAIL",
                    criteria[i].name.c_str(), elapsed);
        std::fputs(check.log.str().c_str(), stdout);
        std::fflush(stdout);
    }
    if (failures == 0) {
        std::puts("acceptance: all 10 criteria passed");
        return 0;
    }
    std::printf("acceptance: %d criteria FAILED\n", failures);
    return 1;
}
