#include "hullopt/geometry/mesh_io.hpp"

#include "hullopt/error.hpp"

#include <array>
#include <fstream>
#include <sstream>

namespace hullopt::geometry {

namespace {

[[noreturn]] void parse_fail(const std::string& path, long line, const std::string& what) {
    throw IoError(path + ":" + std::to_string(line) + ": " + what);
}

SurfaceMesh read_ascii_stl(const std::string& path, double weld_tolerance) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path);
    std::vector<std::array<Point3, 3>> facets;
    std::string token;
    long line = 1;
    std::string text;

    // Token scanner that tracks line numbers for diagnostics.
    auto next = [&](std::string& out) -> bool {
        int c;
        out.clear();
        while ((c = in.get()) != EOF) {
            if (c == '\n') ++line;
            if (!std::isspace(c)) break;
        }
        if (c == EOF) return false;
        out.push_back(static_cast<char>(c));
        while ((c = in.get()) != EOF && !std::isspace(c)) out.push_back(static_cast<char>(c));
        if (c == '\n') ++line;
        return true;
    };
    auto expect = [&](const std::string& want) {
        std::string tok;
        if (!next(tok)) parse_fail(path, line, "unexpected end of file, expected '" + want + "'");
        if (tok != want) parse_fail(path, line, "expected '" + want + "', got '" + tok + "'");
    };
    auto number = [&]() -> double {
        std::string tok;
        if (!next(tok)) parse_fail(path, line, "unexpected end of file, expected a number");
        try {
            std::size_t pos = 0;
            const double v = std::stod(tok, &pos);
            if (pos != tok.size()) throw std::invalid_argument(tok);
            return v;
        } catch (const std::exception&) {
            parse_fail(path, line, "invalid number '" + tok + "'");
        }
    };

    if (!next(token) || token != "solid") parse_fail(path, line, "not an ASCII STL (missing 'solid')");
    // Optional solid name up to end of the header line: consume tokens until 'facet'/'endsolid'.
    while (true) {
        if (!next(token)) parse_fail(path, line, "unexpected end of file in STL header");
        if (token == "facet" || token == "endsolid") break;
    }
    while (token == "facet") {
        expect("normal");
        number();
        number();
        number();
        expect("outer");
        expect("loop");
        std::array<Point3, 3> f;
        for (auto& v : f) {
            expect("vertex");
            // Sequenced reads: argument evaluation order is unspecified.
            const double x = number();
            const double y = number();
            const double z = number();
            v = Point3(x, y, z);
        }
        expect("endloop");
        expect("endfacet");
        facets.push_back(f);
        if (!next(token)) parse_fail(path, line, "unexpected end of file, expected 'facet' or 'endsolid'");
    }
    if (token != "endsolid") parse_fail(path, line, "expected 'endsolid', got '" + token + "'");

    (void)text;
    return build_welded_mesh(facets, weld_tolerance);
}

SurfaceMesh read_obj(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path);
    SurfaceMesh mesh;
    std::string lbuf;
    long line = 0;
    while (std::getline(in, lbuf)) {
        ++line;
        std::istringstream ls(lbuf);
        std::string kind;
        if (!(ls >> kind) || kind.empty() || kind[0] == '#') continue;
        if (kind == "v") {
            double x, y, z;
            if (!(ls >> x >> y >> z)) parse_fail(path, line, "malformed vertex line");
            mesh.vertices.emplace_back(x, y, z);
            mesh.vertex_ids.push_back(static_cast<std::int64_t>(mesh.vertex_ids.size()));
        } else if (kind == "f") {
            std::vector<int> poly;
            std::string ref;
            while (ls >> ref) {
                const std::size_t slash = ref.find('/');
                int idx = 0;
                try {
                    idx = std::stoi(slash == std::string::npos ? ref : ref.substr(0, slash));
                } catch (const std::exception&) {
                    parse_fail(path, line, "malformed face index '" + ref + "'");
                }
                if (idx < 0) idx = static_cast<int>(mesh.vertices.size()) + idx + 1;
                if (idx < 1 || idx > static_cast<int>(mesh.vertices.size()))
                    parse_fail(path, line, "face index out of range");
                poly.push_back(idx - 1);
            }
            if (poly.size() < 3) parse_fail(path, line, "face with fewer than 3 vertices");
            for (std::size_t k = 1; k + 1 < poly.size(); ++k)
                mesh.triangles.push_back({poly[0], poly[k], poly[k + 1]});
        }
    }
    if (mesh.vertices.empty()) parse_fail(path, line == 0 ? 1 : line, "no geometry found");
    return mesh;
}

}  // namespace

SurfaceMesh read_surface_mesh(const std::string& path, SurfaceFormat format, double weld_tolerance) {
    SurfaceMesh mesh = (format == SurfaceFormat::ascii_stl) ? read_ascii_stl(path, weld_tolerance) : read_obj(path);
    mesh.validate();
    return mesh;
}

void write_surface_mesh(const std::string& path, const SurfaceMesh& mesh, SurfaceFormat format) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open " + path + " for writing");
    if (format == SurfaceFormat::ascii_stl) {
        out << "solid hullopt\n";
        for (int t = 0; t < mesh.triangle_count(); ++t) {
            Point3 n = mesh.triangle_normal_area(t);
            const double len = n.norm();
            if (len > 0.0) n /= len;
            out << "  facet normal " << format_g17(n.x()) << ' ' << format_g17(n.y()) << ' ' << format_g17(n.z())
                << "\n    outer loop\n";
            for (int k = 0; k < 3; ++k) {
                const Point3& v = mesh.vertices[static_cast<std::size_t>(mesh.triangles[static_cast<std::size_t>(t)][static_cast<std::size_t>(k)])];
                out << "      vertex " << format_g17(v.x()) << ' ' << format_g17(v.y()) << ' ' << format_g17(v.z())
                    << '\n';
            }
            out << "    endloop\n  endfacet\n";
        }
        out << "endsolid hullopt\n";
    } else {
        for (const auto& v : mesh.vertices)
            out << "v " << format_g17(v.x()) << ' ' << format_g17(v.y()) << ' ' << format_g17(v.z()) << '\n';
        for (const auto& t : mesh.triangles) out << "f " << t[0] + 1 << ' ' << t[1] + 1 << ' ' << t[2] + 1 << '\n';
    }
    if (!out) throw IoError("write failed: " + path);
}

VolumeMesh read_volume_mesh(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path);
    std::string magic;
    int version = 0;
    if (!(in >> magic >> version) || magic != "vmesh" || version != 1)
        throw IoError(path + ": not a vmesh-1 file");
    std::string section;
    long count = 0;
    VolumeMesh mesh;
    if (!(in >> section >> count) || section != "nodes" || count < 0) throw IoError(path + ": bad nodes header");
    mesh.nodes.resize(static_cast<std::size_t>(count));
    for (auto& p : mesh.nodes) {
        if (!(in >> p.x() >> p.y() >> p.z())) throw IoError(path + ": truncated node list");
    }
    if (!(in >> section >> count) || section != "faces" || count < 0) throw IoError(path + ": bad faces header");
    mesh.faces.resize(static_cast<std::size_t>(count));
    for (auto& f : mesh.faces) {
        int n = 0;
        if (!(in >> n) || n < 3) throw IoError(path + ": bad face node count");
        f.nodes.resize(static_cast<std::size_t>(n));
        for (int& idx : f.nodes) {
            if (!(in >> idx)) throw IoError(path + ": truncated face");
        }
        if (!(in >> f.owner >> f.neighbour)) throw IoError(path + ": truncated face owner/neighbour");
    }
    mesh.validate();
    return mesh;
}

void write_volume_mesh(const std::string& path, const VolumeMesh& mesh) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open " + path + " for writing");
    out << "vmesh 1\n";
    out << "nodes " << mesh.node_count() << '\n';
    for (const auto& p : mesh.nodes)
        out << format_g17(p.x()) << ' ' << format_g17(p.y()) << ' ' << format_g17(p.z()) << '\n';
    out << "faces " << mesh.face_count() << '\n';
    for (const auto& f : mesh.faces) {
        out << f.nodes.size();
        for (int n : f.nodes) out << ' ' << n;
        out << ' ' << f.owner << ' ' << f.neighbour << '\n';
    }
    if (!out) throw IoError("write failed: " + path);
}

}  // namespace hullopt::geometry
