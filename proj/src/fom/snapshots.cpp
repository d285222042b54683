#include "hullopt/fom/snapshots.hpp"

#include "hullopt/error.hpp"

#include <atomic>
#include <optional>
#include <sstream>
#include <thread>

namespace hullopt::fom {

std::string snapshot_tag(const ffd::ParameterVector& mu) {
    const std::uint64_t h =
        fnv1a(mu.values.data(), static_cast<std::size_t>(mu.values.size()) * sizeof(double));
    std::ostringstream out;
    out << "mu_" << std::hex << h;
    return out.str();
}

GenerateResult generate_snapshots(const std::vector<ffd::ParameterVector>& mus, const SnapshotPipeline& pipeline,
                                  rom::SnapshotDb& db, int threads) {
    const std::uint64_t mesh_hash = pipeline.reference_hull.topology_hash();
    const std::uint64_t fom_hash = pipeline.spec.hash();
    if (db.size() == 0) {
        db.mesh_hash = mesh_hash;
        db.fom_hash = fom_hash;
    } else {
        if (db.mesh_hash != mesh_hash) throw ConfigError("generate_snapshots: database bound to a different mesh");
        if (db.fom_hash != fom_hash) throw ConfigError("generate_snapshots: database built by a different oracle");
    }
    GenerateResult result;
    if (mus.empty()) return result;

    struct Job {
        std::string tag;
        std::optional<rom::SnapshotEntry> entry;  // empty on failure
    };
    std::vector<Job> jobs;
    std::vector<const ffd::ParameterVector*> pending;
    for (const auto& mu : mus) {
        const std::string tag = snapshot_tag(mu);
        if (db.has_tag(tag)) {
            ++result.skipped;
            continue;
        }
        jobs.push_back({tag, std::nullopt});
        pending.push_back(&mu);
    }

    const int workers = std::max(1, threads > 0 ? threads : static_cast<int>(std::thread::hardware_concurrency()));
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        for (std::size_t i = next.fetch_add(1); i < pending.size(); i = next.fetch_add(1)) {
            try {
                const ffd::ParameterVector& mu = *pending[i];
                const auto lattice = ffd::apply_parameter_map(pipeline.map, mu, pipeline.lattice);
                const auto deformed = ffd::ffd_deform(pipeline.reference_hull, lattice);
                auto [p, tau] = synthetic_fom(deformed, mu, pipeline.spec, pipeline.cond);
                rom::SnapshotEntry entry;
                entry.tag = jobs[i].tag;
                entry.mu = mu.values;
                entry.pressure = std::move(p.values);
                entry.shear = std::move(tau.values);
                jobs[i].entry = std::move(entry);
            } catch (const Error&) {
                // Recorded as a failed tag below; generation continues.
            }
        }
    };
    std::vector<std::thread> pool;
    for (int w = 1; w < workers; ++w) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();

    // Serial commit in input order keeps the database deterministic.
    for (auto& job : jobs) {
        if (job.entry) {
            db.add(std::move(*job.entry));
            ++result.generated;
        } else {
            result.failed_tags.push_back(job.tag);
        }
    }
    return result;
}

}  // namespace hullopt::fom
