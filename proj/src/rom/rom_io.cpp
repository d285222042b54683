#include "hullopt/rom/rom_io.hpp"

#include "hullopt/common.hpp"
#include "hullopt/error.hpp"

#include <json.hpp>

#include <filesystem>
#include <fstream>

namespace hullopt::rom {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

void write_matrix(const fs::path& path, const Eigen::MatrixXd& m) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open " + path.string() + " for writing");
    out << m.rows() << ' ' << m.cols() << '\n';
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = 0; j < m.cols(); ++j) out << format_g17(m(i, j)) << (j + 1 < m.cols() ? ' ' : '\n');
    }
    if (!out) throw IoError("write failed: " + path.string());
}

Eigen::MatrixXd read_matrix(const fs::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path.string());
    Eigen::Index rows = 0, cols = 0;
    if (!(in >> rows >> cols) || rows < 0 || cols < 0) throw IoError(path.string() + ": bad matrix header");
    Eigen::MatrixXd m(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i) {
        for (Eigen::Index j = 0; j < cols; ++j) {
            if (!(in >> m(i, j))) throw IoError(path.string() + ": truncated matrix");
        }
    }
    return m;
}

}  // namespace

void save_rom(const std::string& dir, const PodGprRom& rom) {
    fs::create_directories(dir);
    write_matrix(fs::path(dir) / "modes.txt", rom.basis.modes);
    write_matrix(fs::path(dir) / "inputs.txt", rom.gpr.inputs);

    json manifest;
    manifest["format"] = "hullopt-rom";
    manifest["version"] = 1;
    manifest["mesh_binding"] = rom.mesh_binding;
    manifest["components"] = rom.components;
    std::vector<double> sv(rom.basis.singular_values.data(),
                           rom.basis.singular_values.data() + rom.basis.singular_values.size());
    manifest["singular_values"] = sv;
    manifest["gpr"] = {{"convention", rom.gpr.config.convention == SqExpConvention::by_2l ? "by_2l" : "by_2l_squared"},
                       {"nugget_rel", rom.gpr.config.nugget_rel},
                       {"max_nugget_rel", rom.gpr.config.max_nugget_rel}};
    json heads = json::array();
    for (const auto& head : rom.gpr.heads) {
        std::vector<double> alpha(head.alpha.data(), head.alpha.data() + head.alpha.size());
        heads.push_back({{"sigma", head.sigma},
                         {"length", head.length},
                         {"nugget", head.nugget},
                         {"constant", head.constant},
                         {"log_marginal_likelihood", head.log_marginal_likelihood},
                         {"alpha", alpha}});
    }
    manifest["heads"] = std::move(heads);

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

PodGprRom load_rom(const std::string& dir) {
    const fs::path manifest_path = fs::path(dir) / "manifest.json";
    std::ifstream in(manifest_path);
    if (!in) throw IoError("cannot open " + manifest_path.string());
    json manifest;
    try {
        in >> manifest;
    } catch (const json::exception& e) {
        throw IoError(manifest_path.string() + ": " + e.what());
    }
    if (manifest.value("format", "") != "hullopt-rom")
        throw IoError(manifest_path.string() + ": not a rom manifest");

    PodGprRom rom;
    rom.mesh_binding = manifest.at("mesh_binding").get<std::uint64_t>();
    rom.components = manifest.at("components").get<int>();
    rom.basis.modes = read_matrix(fs::path(dir) / "modes.txt");
    const auto sv = manifest.at("singular_values").get<std::vector<double>>();
    rom.basis.singular_values =
        Eigen::Map<const Eigen::VectorXd>(sv.data(), static_cast<Eigen::Index>(sv.size()));
    rom.gpr.inputs = read_matrix(fs::path(dir) / "inputs.txt");
    const auto& jg = manifest.at("gpr");
    rom.gpr.config.convention =
        jg.at("convention").get<std::string>() == "by_2l" ? SqExpConvention::by_2l : SqExpConvention::by_2l_squared;
    rom.gpr.config.nugget_rel = jg.at("nugget_rel").get<double>();
    rom.gpr.config.max_nugget_rel = jg.at("max_nugget_rel").get<double>();
    for (const auto& jh : manifest.at("heads")) {
        GpHead head;
        head.sigma = jh.at("sigma").get<double>();
        head.length = jh.at("length").get<double>();
        head.nugget = jh.at("nugget").get<double>();
        head.constant = jh.at("constant").get<double>();
        head.log_marginal_likelihood = jh.at("log_marginal_likelihood").get<double>();
        const auto alpha = jh.at("alpha").get<std::vector<double>>();
        head.alpha = Eigen::Map<const Eigen::VectorXd>(alpha.data(), static_cast<Eigen::Index>(alpha.size()));
        rom.gpr.heads.push_back(std::move(head));
    }
    if (rom.basis.modes.cols() != rom.gpr.output_dim())
        throw IoError(dir + ": mode count does not match the stored GP heads");
    return rom;
}

void save_rom_pair(const std::string& dir, const RomPair& pair) {
    save_rom((fs::path(dir) / "pressure").string(), pair.pressure);
    save_rom((fs::path(dir) / "shear").string(), pair.shear);
}

RomPair load_rom_pair(const std::string& dir) {
    return {load_rom((fs::path(dir) / "pressure").string()), load_rom((fs::path(dir) / "shear").string())};
}

}  // namespace hullopt::rom
