#include "hullopt/cli/pipeline.hpp"

#include "hullopt/cli/svg.hpp"
#include "hullopt/error.hpp"
#include "hullopt/geometry/mesh_io.hpp"

#include <json.hpp>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <limits>
#include <tuple>

namespace hullopt::cli {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

json read_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw IoError(path + ": " + e.what());
    }
    return j;
}

void write_json(const std::string& path, const json& j) {
    const fs::path tmp = path + ".tmp";
    {
        std::ofstream out(tmp);
        if (!out) throw IoError("cannot open " + tmp.string() + " for writing");
        out << j.dump(2) << '\n';
        if (!out) throw IoError("write failed: " + tmp.string());
    }
    fs::rename(tmp, path);
}

std::vector<double> to_std(const Eigen::VectorXd& v) { return {v.data(), v.data() + v.size()}; }

Eigen::VectorXd to_eigen(const std::vector<double>& v) {
    return Eigen::Map<const Eigen::VectorXd>(v.data(), static_cast<Eigen::Index>(v.size()));
}

std::uint64_t db_identity(const rom::SnapshotDb& db) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    h = fnv1a_pod(db.mesh_hash, h);
    h = fnv1a_pod(db.fom_hash, h);
    for (const auto& e : db.entries) h = fnv1a(e.tag.data(), e.tag.size(), h);
    return h;
}

}  // namespace

PipelineContext::PipelineContext(const RunConfig& config) : cfg(config), paths(config) {
    if (!cfg.paths.hull.empty()) {
        hull = geometry::read_surface_mesh(cfg.paths.hull, geometry::SurfaceFormat::ascii_stl);
    } else if (fs::exists(paths.hull())) {
        hull = geometry::read_surface_mesh(paths.hull(), geometry::SurfaceFormat::ascii_stl);
    } else {
        hull = fom::make_hull_fixture(cfg.hull_fixture);
    }
    std::tie(lattice, map) = ffd::build_dtc_lattice(hull, cfg.lattice);
    spec = fom::SyntheticFomSpec::make(map.parameter_count, cfg.hull_fixture.length, cfg.fom_seed);
    spec.c1 = cfg.fom_c1;
    spec.c2 = cfg.fom_c2;
    spec.c3 = cfg.fom_c3;
    spec.gamma = cfg.fom_gamma;
}

ffd::ParameterVector PipelineContext::make_mu(const Eigen::VectorXd& values) const {
    if (values.size() != map.parameter_count)
        throw ConfigError("expected " + std::to_string(map.parameter_count) + " parameters, got " +
                          std::to_string(values.size()));
    return ffd::ParameterVector::boxed(values, cfg.lower_bound, cfg.upper_bound);
}

geometry::SurfaceMesh PipelineContext::deform(const ffd::ParameterVector& mu) const {
    return ffd::ffd_deform(hull, ffd::apply_parameter_map(map, mu, lattice));
}

fom::SnapshotPipeline PipelineContext::snapshot_pipeline() const {
    return {hull, lattice, map, spec, cfg.condition};
}

double PipelineContext::oracle_ct(const ffd::ParameterVector& mu) const {
    const auto deformed = deform(mu);
    const auto [p, tau] = fom::synthetic_fom(deformed, mu, spec, cfg.condition);
    return objective::compute_ct(deformed, p, tau, cfg.condition).ct;
}

double PipelineContext::rom_ct(const rom::RomPair& roms, const ffd::ParameterVector& mu) const {
    const auto deformed = deform(mu);
    const auto p = roms.pressure.predict(deformed, mu);
    const auto tau = roms.shear.predict(deformed, mu);
    return objective::compute_ct(deformed, p, tau, cfg.condition).ct;
}

void write_samples(const std::string& path, const std::vector<ffd::ParameterVector>& mus) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open " + path + " for writing");
    out << mus.size() << ' ' << (mus.empty() ? 0 : mus.front().size()) << '\n';
    for (const auto& mu : mus) {
        for (int i = 0; i < mu.size(); ++i) out << format_g17(mu.values[i]) << (i + 1 < mu.size() ? ' ' : '\n');
    }
    if (!out) throw IoError("write failed: " + path);
}

std::vector<ffd::ParameterVector> read_samples(const std::string& path, double lo, double hi) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path);
    int count = 0, dim = 0;
    if (!(in >> count >> dim) || count < 0 || dim < 1) throw IoError(path + ": bad sample header");
    std::vector<ffd::ParameterVector> mus;
    mus.reserve(static_cast<std::size_t>(count));
    for (int c = 0; c < count; ++c) {
        Eigen::VectorXd v(dim);
        for (int i = 0; i < dim; ++i) {
            if (!(in >> v[i])) throw IoError(path + ": truncated sample list");
        }
        mus.push_back(ffd::ParameterVector::boxed(std::move(v), lo, hi));
    }
    return mus;
}

void cmd_fixture(const RunConfig& cfg) {
    const Artifacts paths(cfg);
    fs::create_directories(paths.work);
    const auto hull = fom::make_hull_fixture(cfg.hull_fixture);
    geometry::write_surface_mesh(paths.hull(), hull, geometry::SurfaceFormat::ascii_stl);
    const auto volume = fom::make_box_fixture(cfg.box_fixture);
    geometry::write_volume_mesh(paths.volume(), volume);
}

void cmd_sample(const RunConfig& cfg) {
    const Artifacts paths(cfg);
    fs::create_directories(paths.work);
    const ffd::DtcParameterMap map = ffd::dtc_parameter_map();
    const auto mus = fom::sample_parameters(cfg.sampling.count, map.parameter_count, cfg.lower_bound,
                                            cfg.upper_bound, cfg.sampling.seed, cfg.sampling.scheme);
    write_samples(paths.samples(), mus);
}

void cmd_snapshots(const RunConfig& cfg) {
    PipelineContext ctx(cfg);
    const auto mus = read_samples(ctx.paths.samples(), cfg.lower_bound, cfg.upper_bound);
    rom::SnapshotDb db;
    if (fs::exists(fs::path(ctx.paths.db()) / "manifest.json")) db = rom::SnapshotDb::load(ctx.paths.db());
    db.lower_bound = cfg.lower_bound;
    db.upper_bound = cfg.upper_bound;
    const auto result = fom::generate_snapshots(mus, ctx.snapshot_pipeline(), db, cfg.threads);
    db.save(ctx.paths.db());
    if (!result.failed_tags.empty())
        throw NumericError("snapshot generation failed for " + std::to_string(result.failed_tags.size()) +
                           " parameter points");
}

void cmd_rom_build(const RunConfig& cfg) {
    const Artifacts paths(cfg);
    const auto db = rom::SnapshotDb::load(paths.db());
    const auto roms = rom::build_roms(db, cfg.rom);
    rom::save_rom_pair(paths.rom(), roms);
}

void cmd_rom_eval(const RunConfig& cfg, const std::vector<double>& mu_values) {
    PipelineContext ctx(cfg);
    const auto roms = rom::load_rom_pair(ctx.paths.rom());
    ffd::ParameterVector mu =
        mu_values.empty() ? ctx.make_mu(Eigen::VectorXd::Zero(ctx.map.parameter_count)) : ctx.make_mu(to_eigen(mu_values));

    const auto deformed = ctx.deform(mu);
    const auto [p_true, tau_true] = fom::synthetic_fom(deformed, mu, ctx.spec, cfg.condition);
    const auto p_rom = roms.pressure.predict(deformed, mu);
    const auto tau_rom = roms.shear.predict(deformed, mu);

    const double p_err = (p_rom.values - p_true.values).norm() / p_true.values.norm();
    const double tau_err = (tau_rom.values - tau_true.values).norm() / tau_true.values.norm();
    const double ct_true = objective::compute_ct(deformed, p_true, tau_true, cfg.condition).ct;
    const double ct_rom = objective::compute_ct(deformed, p_rom, tau_rom, cfg.condition).ct;

    json j;
    j["mu"] = to_std(mu.values);
    j["pressure_relative_l2_error"] = p_err;
    j["shear_relative_l2_error"] = tau_err;
    j["ct_oracle"] = ct_true;
    j["ct_rom"] = ct_rom;
    j["ct_relative_error"] = std::abs(ct_rom - ct_true) / std::abs(ct_true);
    write_json(ctx.paths.work + "/rom_eval.json", j);
}

void cmd_morph(const RunConfig& cfg, const std::vector<double>& mu_values) {
    PipelineContext ctx(cfg);
    const ffd::ParameterVector mu = ctx.make_mu(to_eigen(mu_values));
    const auto deformed = ctx.deform(mu);
    geometry::write_surface_mesh(ctx.paths.work + "/hull_deformed.stl", deformed,
                                 geometry::SurfaceFormat::ascii_stl);

    geometry::VolumeMesh volume;
    if (!cfg.paths.volume.empty()) volume = geometry::read_volume_mesh(cfg.paths.volume);
    else if (fs::exists(ctx.paths.volume())) volume = geometry::read_volume_mesh(ctx.paths.volume());
    else volume = fom::make_box_fixture(cfg.box_fixture);

    const auto before_quality = geometry::quality_report(volume);
    const auto result = rbf::morph_volume_mesh(volume, ctx.hull, deformed, cfg.rbf);
    geometry::write_volume_mesh(ctx.paths.work + "/volume_morphed.vmesh", result.mesh);

    json j;
    j["mu"] = to_std(mu.values);
    j["before"] = {{"min_face_area", before_quality.min_face_area},
                   {"min_cell_volume", before_quality.min_cell_volume},
                   {"max_non_orthogonality", before_quality.max_non_orthogonality},
                   {"avg_non_orthogonality", before_quality.avg_non_orthogonality}};
    j["after"] = {{"min_face_area", result.quality.min_face_area},
                  {"min_cell_volume", result.quality.min_cell_volume},
                  {"max_non_orthogonality", result.quality.max_non_orthogonality},
                  {"avg_non_orthogonality", result.quality.avg_non_orthogonality},
                  {"negative_volume_warning", result.quality.negative_volume_warning}};
    write_json(ctx.paths.work + "/morph_quality.json", j);
}

void cmd_optimize(const RunConfig& cfg) {
    PipelineContext ctx(cfg);
    const auto roms = rom::load_rom_pair(ctx.paths.rom());

    asga::AsgaConfig ga = cfg.asga;
    ga.dimension = ctx.map.parameter_count;
    ga.validate();

    auto fitness = [&](const Eigen::VectorXd& genes) -> double {
        try {
            const auto mu = ffd::ParameterVector::from_normalized(genes, cfg.lower_bound, cfg.upper_bound);
            return ctx.rom_ct(roms, mu);
        } catch (const Error&) {
            return std::numeric_limits<double>::quiet_NaN();  // excluded by the optimizer
        }
    };
    const auto result = asga::optimize(fitness, ga);

    json j;
    j["config_hash"] = cfg.hash();
    j["seed"] = ga.seed;
    j["best_genes"] = to_std(result.best.genes);
    j["best_mu"] =
        to_std(ffd::ParameterVector::from_normalized(result.best.genes, cfg.lower_bound, cfg.upper_bound).values);
    j["best_ct_rom"] = result.best.fitness;
    j["evaluations"] = result.evaluations;
    j["nonfinite_evaluations"] = result.nonfinite_evaluations;
    j["as_fallback_generations"] = result.as_fallback_generations;
    j["clipped_backmap_points"] = result.clipped_backmap_points;
    j["eigenvalues"] = to_std(result.last_eigenvalues);
    json hist = json::array();
    for (const auto& g : result.history)
        hist.push_back({{"generation", g.generation}, {"evaluations", g.evaluations}, {"best", g.best}, {"mean", g.mean}});
    j["history"] = std::move(hist);
    write_json(ctx.paths.optimum(), j);
}

void cmd_validate(const RunConfig& cfg, bool enrich) {
    PipelineContext ctx(cfg);
    const json opt = read_json(ctx.paths.optimum());
    const ffd::ParameterVector mu = ctx.make_mu(to_eigen(opt.at("best_mu").get<std::vector<double>>()));

    const auto roms = rom::load_rom_pair(ctx.paths.rom());
    const double ct_rom = ctx.rom_ct(roms, mu);
    const double ct_oracle = ctx.oracle_ct(mu);
    const double baseline = ctx.oracle_ct(ctx.make_mu(Eigen::VectorXd::Zero(ctx.map.parameter_count)));

    json record;
    record["mu"] = to_std(mu.values);
    record["ct_rom"] = ct_rom;
    record["ct_oracle"] = ct_oracle;
    record["ct_baseline"] = baseline;
    record["rom_relative_error"] = std::abs(ct_rom - ct_oracle) / std::abs(ct_oracle);
    record["ct_reduction_vs_baseline"] = (baseline - ct_oracle) / std::abs(baseline);
    record["enriched"] = enrich;

    if (enrich) {
        auto db = rom::SnapshotDb::load(ctx.paths.db());
        const std::string tag = fom::snapshot_tag(mu);
        if (!db.has_tag(tag)) {
            const auto deformed = ctx.deform(mu);
            auto [p, tau] = fom::synthetic_fom(deformed, mu, ctx.spec, cfg.condition);
            rom::SnapshotEntry entry;
            entry.tag = tag;
            entry.mu = mu.values;
            entry.pressure = std::move(p.values);
            entry.shear = std::move(tau.values);
            const auto rebuilt = rom::enrich(db, std::move(entry), cfg.rom);
            db.save(ctx.paths.db());
            rom::save_rom_pair(ctx.paths.rom(), rebuilt);
        }
    }

    json history = json::array();
    if (fs::exists(ctx.paths.validations())) history = read_json(ctx.paths.validations());
    history.push_back(std::move(record));
    write_json(ctx.paths.validations(), history);
}

void cmd_report(const RunConfig& cfg) {
    PipelineContext ctx(cfg);
    const json opt = read_json(ctx.paths.optimum());
    json validations = json::array();
    if (fs::exists(ctx.paths.validations())) validations = read_json(ctx.paths.validations());

    json report;
    report["config_hash"] = cfg.hash();
    report["fom_hash"] = ctx.spec.hash();
    report["mesh_hash"] = ctx.hull.topology_hash();
    if (fs::exists(fs::path(ctx.paths.db()) / "manifest.json")) {
        const auto db = rom::SnapshotDb::load(ctx.paths.db());
        report["db_hash"] = db_identity(db);
        report["db_size"] = db.size();
    }
    report["seeds"] = {{"sampling", cfg.sampling.seed}, {"asga", cfg.asga.seed}, {"fom", cfg.fom_seed}};
    report["optimum"] = opt;
    report["validations"] = validations;
    if (!validations.empty()) {
        const auto& last = validations.back();
        report["ct_reduction_vs_baseline"] = last.at("ct_reduction_vs_baseline");
        report["rom_relative_error_at_optimum"] = last.at("rom_relative_error");
    }
    write_json(ctx.paths.report(), report);

    // Optimization history plot.
    SvgSeries best, mean;
    best.label = "best";
    mean.label = "mean";
    mean.color = "#c0392b";
    for (const auto& g : opt.at("history")) {
        best.x.push_back(g.at("generation").get<double>());
        best.y.push_back(g.at("best").get<double>());
        mean.x.push_back(g.at("generation").get<double>());
        mean.y.push_back(g.at("mean").get<double>());
    }
    write_svg_plot(ctx.paths.work + "/history.svg", "Optimization history", "generation", "C_t", {best, mean});

    // Active-subspace eigenvalue spectrum.
    SvgSeries eig;
    eig.label = "eigenvalues";
    const auto lambda = opt.at("eigenvalues").get<std::vector<double>>();
    for (std::size_t i = 0; i < lambda.size(); ++i) {
        eig.x.push_back(static_cast<double>(i + 1));
        eig.y.push_back(lambda[i]);
    }
    write_svg_plot(ctx.paths.work + "/eigenvalues.svg", "Gradient covariance spectrum", "index", "eigenvalue", {eig},
                   true);

    // ROM error across validation/enrichment runs.
    SvgSeries err;
    err.label = "rom error";
    for (std::size_t i = 0; i < validations.size(); ++i) {
        err.x.push_back(static_cast<double>(i + 1));
        err.y.push_back(validations[i].at("rom_relative_error").get<double>());
    }
    write_svg_plot(ctx.paths.work + "/rom_error.svg", "ROM error at the optimum", "validation run", "relative error",
                   {err}, true);
}

}  // namespace hullopt::cli
