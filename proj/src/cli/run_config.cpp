#include "hullopt/cli/run_config.hpp"

#include "hullopt/common.hpp"
#include "hullopt/error.hpp"

#include <json.hpp>

#include <fstream>
#include <set>

namespace hullopt::cli {

using nlohmann::json;

namespace {

void check_keys(const json& obj, const std::string& section, std::initializer_list<const char*> allowed) {
    const std::set<std::string> ok(allowed.begin(), allowed.end());
    for (const auto& [key, value] : obj.items()) {
        if (!ok.count(key)) throw ConfigError("config: unknown key '" + section + "." + key + "'");
    }
}

template <typename T>
void get(const json& obj, const char* key, T& out) {
    if (obj.contains(key)) {
        try {
            out = obj.at(key).get<T>();
        } catch (const json::exception&) {
            throw ConfigError(std::string("config: bad value for '") + key + "'");
        }
    }
}

void get_point(const json& obj, const char* key, Point3& out) {
    if (obj.contains(key)) {
        const auto v = obj.at(key).get<std::vector<double>>();
        if (v.size() != 3) throw ConfigError(std::string("config: '") + key + "' needs exactly 3 numbers");
        out = Point3(v[0], v[1], v[2]);
    }
}

json to_json(const RunConfig& c) {
    json j;
    j["paths"] = {{"work", c.paths.work}, {"hull", c.paths.hull}, {"volume", c.paths.volume}};
    j["bounds"] = {{"lower", c.lower_bound}, {"upper", c.upper_bound}};
    j["hull_fixture"] = {{"length", c.hull_fixture.length},       {"beam", c.hull_fixture.beam},
                         {"draft", c.hull_fixture.draft},         {"freeboard", c.hull_fixture.freeboard},
                         {"fullness", c.hull_fixture.fullness},   {"center_shift", c.hull_fixture.center_shift},
                         {"rings", c.hull_fixture.rings},         {"segments", c.hull_fixture.segments}};
    j["box_fixture"] = {{"lower", {c.box_fixture.lower.x(), c.box_fixture.lower.y(), c.box_fixture.lower.z()}},
                        {"upper", {c.box_fixture.upper.x(), c.box_fixture.upper.y(), c.box_fixture.upper.z()}},
                        {"nx", c.box_fixture.nx},
                        {"ny", c.box_fixture.ny},
                        {"nz", c.box_fixture.nz}};
    j["lattice"] = {{"waterline_z", c.lattice.waterline_z}, {"total_sections", c.lattice.total_sections},
                    {"first_section", c.lattice.first_section}, {"section_step", c.lattice.section_step},
                    {"x_layers", c.lattice.x_layers},       {"y_layers", c.lattice.y_layers},
                    {"z_layers", c.lattice.z_layers}};
    j["rbf"] = {{"radius", c.rbf.radius},
                {"control_stride", c.rbf.control_stride},
                {"pivot_tolerance", c.rbf.pivot_tolerance}};
    j["rom"] = {{"modes", c.rom.modes},
                {"convention", c.rom.gpr.convention == rom::SqExpConvention::by_2l ? "by_2l" : "by_2l_squared"},
                {"nugget_rel", c.rom.gpr.nugget_rel},
                {"max_nugget_rel", c.rom.gpr.max_nugget_rel},
                {"multistarts", c.rom.gpr.multistarts},
                {"seed", c.rom.gpr.seed}};
    j["asga"] = {{"population", c.asga.population},
                 {"offspring", c.asga.offspring},
                 {"generations", c.asga.generations},
                 {"crossover_probability", c.asga.crossover_probability},
                 {"mutation_probability", c.asga.mutation_probability},
                 {"backmap_count", c.asga.backmap_count},
                 {"as_dim", c.asga.as_dim},
                 {"elite_count", c.asga.elite_count},
                 {"seed", c.asga.seed},
                 {"use_active_subspace", c.asga.use_active_subspace}};
    j["fom"] = {{"c1", c.fom_c1}, {"c2", c.fom_c2}, {"c3", c.fom_c3}, {"gamma", c.fom_gamma}, {"seed", c.fom_seed}};
    j["condition"] = {{"density", c.condition.density},
                      {"speed", c.condition.speed},
                      {"waterline_z", c.condition.waterline_z}};
    j["sampling"] = {{"count", c.sampling.count},
                     {"seed", c.sampling.seed},
                     {"scheme", c.sampling.scheme == fom::SampleScheme::uniform ? "uniform" : "latin_hypercube"}};
    j["threads"] = c.threads;
    return j;
}

RunConfig from_json(const json& j) {
    RunConfig c;
    check_keys(j, "", {"paths", "bounds", "hull_fixture", "box_fixture", "lattice", "rbf", "rom", "asga", "fom",
                       "condition", "sampling", "threads"});
    if (j.contains("paths")) {
        const auto& s = j.at("paths");
        check_keys(s, "paths", {"work", "hull", "volume"});
        get(s, "work", c.paths.work);
        get(s, "hull", c.paths.hull);
        get(s, "volume", c.paths.volume);
    }
    if (j.contains("bounds")) {
        const auto& s = j.at("bounds");
        check_keys(s, "bounds", {"lower", "upper"});
        get(s, "lower", c.lower_bound);
        get(s, "upper", c.upper_bound);
        if (!(c.lower_bound < c.upper_bound)) throw ConfigError("config: bounds.lower must be below bounds.upper");
    }
    if (j.contains("hull_fixture")) {
        const auto& s = j.at("hull_fixture");
        check_keys(s, "hull_fixture",
                   {"length", "beam", "draft", "freeboard", "fullness", "center_shift", "rings", "segments"});
        get(s, "length", c.hull_fixture.length);
        get(s, "beam", c.hull_fixture.beam);
        get(s, "draft", c.hull_fixture.draft);
        get(s, "freeboard", c.hull_fixture.freeboard);
        get(s, "fullness", c.hull_fixture.fullness);
        get(s, "center_shift", c.hull_fixture.center_shift);
        get(s, "rings", c.hull_fixture.rings);
        get(s, "segments", c.hull_fixture.segments);
    }
    if (j.contains("box_fixture")) {
        const auto& s = j.at("box_fixture");
        check_keys(s, "box_fixture", {"lower", "upper", "nx", "ny", "nz"});
        get_point(s, "lower", c.box_fixture.lower);
        get_point(s, "upper", c.box_fixture.upper);
        get(s, "nx", c.box_fixture.nx);
        get(s, "ny", c.box_fixture.ny);
        get(s, "nz", c.box_fixture.nz);
    }
    if (j.contains("lattice")) {
        const auto& s = j.at("lattice");
        check_keys(s, "lattice",
                   {"waterline_z", "total_sections", "first_section", "section_step", "x_layers", "y_layers",
                    "z_layers"});
        get(s, "waterline_z", c.lattice.waterline_z);
        get(s, "total_sections", c.lattice.total_sections);
        get(s, "first_section", c.lattice.first_section);
        get(s, "section_step", c.lattice.section_step);
        get(s, "x_layers", c.lattice.x_layers);
        get(s, "y_layers", c.lattice.y_layers);
        get(s, "z_layers", c.lattice.z_layers);
    }
    if (j.contains("rbf")) {
        const auto& s = j.at("rbf");
        check_keys(s, "rbf", {"radius", "control_stride", "pivot_tolerance"});
        get(s, "radius", c.rbf.radius);
        get(s, "control_stride", c.rbf.control_stride);
        get(s, "pivot_tolerance", c.rbf.pivot_tolerance);
    }
    if (j.contains("rom")) {
        const auto& s = j.at("rom");
        check_keys(s, "rom", {"modes", "convention", "nugget_rel", "max_nugget_rel", "multistarts", "seed"});
        get(s, "modes", c.rom.modes);
        std::string conv = "by_2l";
        get(s, "convention", conv);
        if (conv == "by_2l") c.rom.gpr.convention = rom::SqExpConvention::by_2l;
        else if (conv == "by_2l_squared") c.rom.gpr.convention = rom::SqExpConvention::by_2l_squared;
        else throw ConfigError("config: rom.convention must be 'by_2l' or 'by_2l_squared'");
        get(s, "nugget_rel", c.rom.gpr.nugget_rel);
        get(s, "max_nugget_rel", c.rom.gpr.max_nugget_rel);
        get(s, "multistarts", c.rom.gpr.multistarts);
        get(s, "seed", c.rom.gpr.seed);
    }
    if (j.contains("asga")) {
        const auto& s = j.at("asga");
        check_keys(s, "asga",
                   {"population", "offspring", "generations", "crossover_probability", "mutation_probability",
                    "backmap_count", "as_dim", "elite_count", "seed", "use_active_subspace"});
        get(s, "population", c.asga.population);
        get(s, "offspring", c.asga.offspring);
        get(s, "generations", c.asga.generations);
        get(s, "crossover_probability", c.asga.crossover_probability);
        get(s, "mutation_probability", c.asga.mutation_probability);
        get(s, "backmap_count", c.asga.backmap_count);
        get(s, "as_dim", c.asga.as_dim);
        get(s, "elite_count", c.asga.elite_count);
        get(s, "seed", c.asga.seed);
        get(s, "use_active_subspace", c.asga.use_active_subspace);
    }
    if (j.contains("fom")) {
        const auto& s = j.at("fom");
        check_keys(s, "fom", {"c1", "c2", "c3", "gamma", "seed"});
        get(s, "c1", c.fom_c1);
        get(s, "c2", c.fom_c2);
        get(s, "c3", c.fom_c3);
        get(s, "gamma", c.fom_gamma);
        get(s, "seed", c.fom_seed);
    }
    if (j.contains("condition")) {
        const auto& s = j.at("condition");
        check_keys(s, "condition", {"density", "speed", "waterline_z"});
        get(s, "density", c.condition.density);
        get(s, "speed", c.condition.speed);
        get(s, "waterline_z", c.condition.waterline_z);
    }
    if (j.contains("sampling")) {
        const auto& s = j.at("sampling");
        check_keys(s, "sampling", {"count", "seed", "scheme"});
        get(s, "count", c.sampling.count);
        get(s, "seed", c.sampling.seed);
        std::string scheme = "uniform";
        get(s, "scheme", scheme);
        if (scheme == "uniform") c.sampling.scheme = fom::SampleScheme::uniform;
        else if (scheme == "latin_hypercube") c.sampling.scheme = fom::SampleScheme::latin_hypercube;
        else throw ConfigError("config: sampling.scheme must be 'uniform' or 'latin_hypercube'");
    }
    get(j, "threads", c.threads);
    return c;
}

}  // namespace

RunConfig RunConfig::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open config file " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw ConfigError(path + ": " + e.what());
    }
    return from_json(j);
}

void RunConfig::save(const std::string& path) const {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open " + path + " for writing");
    out << to_json(*this).dump(2) << '\n';
    if (!out) throw IoError("write failed: " + path);
}

std::uint64_t RunConfig::hash() const {
    const std::string canonical = to_json(*this).dump();
    return fnv1a(canonical.data(), canonical.size());
}

}  // namespace hullopt::cli
