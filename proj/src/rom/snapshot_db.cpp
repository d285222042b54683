#include "hullopt/rom/snapshot_db.hpp"

#include "hullopt/common.hpp"
#include "hullopt/error.hpp"

#include <json.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>

namespace hullopt::rom {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

void write_column(const fs::path& path, const Eigen::VectorXd& v) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open " + path.string() + " for writing");
    out << v.size() << '\n';
    for (Eigen::Index i = 0; i < v.size(); ++i) out << format_g17(v[i]) << '\n';
    if (!out) throw IoError("write failed: " + path.string());
}

Eigen::VectorXd read_column(const fs::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path.string());
    Eigen::Index n = 0;
    if (!(in >> n) || n < 0) throw IoError(path.string() + ": bad column header");
    Eigen::VectorXd v(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        if (!(in >> v[i])) throw IoError(path.string() + ": truncated column");
    }
    return v;
}

}  // namespace

bool SnapshotDb::has_tag(const std::string& tag) const {
    return std::any_of(entries.begin(), entries.end(), [&](const SnapshotEntry& e) { return e.tag == tag; });
}

void SnapshotDb::add(SnapshotEntry entry) {
    if (has_tag(entry.tag)) throw ConfigError("snapshot db: duplicate tag '" + entry.tag + "'");
    if (!entries.empty()) {
        if (entry.pressure.size() != entries.front().pressure.size() ||
            entry.shear.size() != entries.front().shear.size())
            throw ConfigError("snapshot db: field length mismatch for tag '" + entry.tag + "'");
        if (entry.mu.size() != entries.front().mu.size())
            throw ConfigError("snapshot db: parameter dimension mismatch for tag '" + entry.tag + "'");
    }
    if (parameter_dim == 0) parameter_dim = static_cast<int>(entry.mu.size());
    entries.push_back(std::move(entry));
}

Eigen::MatrixXd SnapshotDb::pressure_matrix() const {
    if (entries.empty()) throw ConfigError("snapshot db: empty");
    Eigen::MatrixXd x(entries.front().pressure.size(), size());
    for (int j = 0; j < size(); ++j) x.col(j) = entries[static_cast<std::size_t>(j)].pressure;
    return x;
}

Eigen::MatrixXd SnapshotDb::shear_matrix() const {
    if (entries.empty()) throw ConfigError("snapshot db: empty");
    Eigen::MatrixXd x(entries.front().shear.size(), size());
    for (int j = 0; j < size(); ++j) x.col(j) = entries[static_cast<std::size_t>(j)].shear;
    return x;
}

Eigen::MatrixXd SnapshotDb::parameter_matrix() const {
    Eigen::MatrixXd x(size(), parameter_dim);
    for (int j = 0; j < size(); ++j) x.row(j) = entries[static_cast<std::size_t>(j)].mu.transpose();
    return x;
}

Eigen::MatrixXd SnapshotDb::normalized_parameter_matrix() const {
    const double half = 0.5 * (upper_bound - lower_bound);
    const double mid = 0.5 * (upper_bound + lower_bound);
    return ((parameter_matrix().array() - mid) / half).matrix();
}

void SnapshotDb::save(const std::string& dir) const {
    fs::create_directories(dir);
    json manifest;
    manifest["format"] = "hullopt-snapshot-db";
    manifest["version"] = 1;
    manifest["mesh_hash"] = mesh_hash;
    manifest["fom_hash"] = fom_hash;
    manifest["parameter_dim"] = parameter_dim;
    manifest["lower_bound"] = lower_bound;
    manifest["upper_bound"] = upper_bound;
    json jentries = json::array();
    for (const auto& e : entries) {
        const std::string pfile = e.tag + "_p.txt";
        const std::string sfile = e.tag + "_s.txt";
        if (!fs::exists(fs::path(dir) / pfile)) write_column(fs::path(dir) / pfile, e.pressure);
        if (!fs::exists(fs::path(dir) / sfile)) write_column(fs::path(dir) / sfile, e.shear);
        std::vector<double> mu(e.mu.data(), e.mu.data() + e.mu.size());
        jentries.push_back({{"tag", e.tag}, {"mu", mu}, {"pressure", pfile}, {"shear", sfile}});
    }
    manifest["entries"] = std::move(jentries);

    // Atomic manifest update: write a temp file, then rename over the old one.
    const fs::path final_path = fs::path(dir) / "manifest.json";
    const fs::path tmp_path = fs::path(dir) / "manifest.json.tmp";
    {
        std::ofstream out(tmp_path);
        if (!out) throw IoError("cannot open " + tmp_path.string() + " for writing");
        out << manifest.dump(2) << '\n';
        if (!out) throw IoError("write failed: " + tmp_path.string());
    }
    fs::rename(tmp_path, final_path);
}

SnapshotDb SnapshotDb::load(const std::string& dir) {
    const fs::path manifest_path = fs::path(dir) / "manifest.json";
    std::ifstream in(manifest_path);
    if (!in) throw IoError("cannot open " + manifest_path.string());
    json manifest;
    try {
        in >> manifest;
    } catch (const json::exception& e) {
        throw IoError(manifest_path.string() + ": " + e.what());
    }
    if (manifest.value("format", "") != "hullopt-snapshot-db")
        throw IoError(manifest_path.string() + ": not a snapshot db manifest");

    SnapshotDb db;
    db.mesh_hash = manifest.at("mesh_hash").get<std::uint64_t>();
    db.fom_hash = manifest.at("fom_hash").get<std::uint64_t>();
    db.parameter_dim = manifest.at("parameter_dim").get<int>();
    db.lower_bound = manifest.at("lower_bound").get<double>();
    db.upper_bound = manifest.at("upper_bound").get<double>();
    for (const auto& je : manifest.at("entries")) {
        SnapshotEntry e;
        e.tag = je.at("tag").get<std::string>();
        const auto mu = je.at("mu").get<std::vector<double>>();
        e.mu = Eigen::Map<const Eigen::VectorXd>(mu.data(), static_cast<Eigen::Index>(mu.size()));
        e.pressure = read_column(fs::path(dir) / je.at("pressure").get<std::string>());
        e.shear = read_column(fs::path(dir) / je.at("shear").get<std::string>());
        db.add(std::move(e));
    }
    return db;
}

}  // namespace hullopt::rom
