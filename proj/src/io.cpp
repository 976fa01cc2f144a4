#include "npc/io.hpp"

#include <fstream>
#include <sstream>

#include "npc/diagram.hpp"
#include "npc/error.hpp"

namespace npc {

namespace {

[[noreturn]] void bad(const std::string& field, const std::string& what) {
    throw Error(ErrorKind::ParseError, "field '" + field + "': " + what);
}

const json& member(const json& j, const char* field) {
    if (!j.is_object()) bad("<root>", "expected a JSON object");
    auto it = j.find(field);
    if (it == j.end()) bad(field, "missing");
    return *it;
}

std::int64_t as_int(const json& j, const std::string& field) {
    if (!j.is_number_integer()) bad(field, "expected an integer, got " + j.dump());
    return j.get<std::int64_t>();
}

std::vector<std::int64_t> as_int_list(const json& j, const std::string& field) {
    if (!j.is_array()) bad(field, "expected an array");
    std::vector<std::int64_t> out;
    for (std::size_t i = 0; i < j.size(); ++i) out.push_back(as_int(j[i], field + "[" + std::to_string(i) + "]"));
    return out;
}

void expect_format(const json& j, std::string_view expected) {
    const json& f = member(j, "format");
    if (!f.is_string()) bad("format", "expected a string");
    const auto s = f.get<std::string>();
    if (s == expected) return;
    const auto family = expected.substr(0, expected.rfind("-v"));
    if (s.rfind(std::string(family) + "-v", 0) == 0) {
        throw Error(ErrorKind::SchemaVersionError, "unsupported format version '" + s + "', expected '" +
                                                       std::string(expected) + "'");
    }
    bad("format", "expected '" + std::string(expected) + "', got '" + s + "'");
}

}  // namespace

bool has_format(const json& j, std::string_view family) {
    if (!j.is_object() || !j.contains("format") || !j["format"].is_string()) return false;
    const auto s = j["format"].get<std::string>();
    return s.rfind(std::string(family) + "-v", 0) == 0;
}

json to_json(const Complex& complex) {
    json j;
    j["format"] = kComplexFormat;
    j["kind"] = to_string(complex.kind());
    j["vertices"] = complex.vertex_ids();
    json edges = json::array();
    for (const auto& [a, b] : complex.raw_edges()) edges.push_back({a, b});
    j["edges"] = edges;
    j[complex.simplicial() ? "triangles" : "polygons"] = complex.cell_walks();
    return j;
}

Complex complex_from_json(const json& j) {
    expect_format(j, kComplexFormat);
    const json& kind = member(j, "kind");
    ComplexKind k;
    if (kind == "simplicial") {
        k = ComplexKind::Simplicial;
    } else if (kind == "polygonal") {
        k = ComplexKind::Polygonal;
    } else {
        bad("kind", "expected 'simplicial' or 'polygonal', got " + kind.dump());
    }
    auto vertices = as_int_list(member(j, "vertices"), "vertices");
    const json& ej = member(j, "edges");
    if (!ej.is_array()) bad("edges", "expected an array");
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (std::size_t i = 0; i < ej.size(); ++i) {
        const std::string f = "edges[" + std::to_string(i) + "]";
        const auto e = as_int_list(ej[i], f);
        if (e.size() != 2) bad(f, "expected a pair");
        edges.emplace_back(e[0], e[1]);
    }
    const char* cell_field = k == ComplexKind::Simplicial ? "triangles" : "polygons";
    std::vector<Walk> cells;
    if (j.contains(cell_field)) {
        const json& cj = j[cell_field];
        if (!cj.is_array()) bad(cell_field, "expected an array");
        for (std::size_t i = 0; i < cj.size(); ++i) {
            const std::string f = std::string(cell_field) + "[" + std::to_string(i) + "]";
            auto w = as_int_list(cj[i], f);
            if (k == ComplexKind::Simplicial && w.size() != 3) bad(f, "a triangle needs 3 vertices");
            cells.push_back(std::move(w));
        }
    }
    return Complex::make(k, std::move(vertices), std::move(edges), std::move(cells));
}

json to_json(const Presentation& p) {
    return {{"format", kPresentationFormat}, {"generators", p.generators}, {"relators", p.relators}};
}

Presentation presentation_from_json(const json& j) {
    expect_format(j, kPresentationFormat);
    auto strings = [&](const char* field) {
        const json& a = member(j, field);
        if (!a.is_array()) bad(field, "expected an array of strings");
        std::vector<std::string> out;
        for (const auto& s : a) {
            if (!s.is_string()) bad(field, "expected strings, got " + s.dump());
            out.push_back(s.get<std::string>());
        }
        return out;
    };
    return Presentation::make(strings("generators"), strings("relators"));
}

json to_json(const DiscDiagram& d) {
    json cells = json::array();
    for (const auto& c : d.cells) {
        cells.push_back(
            {{"walk", c.walk}, {"target_cell", c.target_cell}, {"offset", c.offset}, {"reflected", c.reflected}});
    }
    return {{"format", kDiagramFormat}, {"labels", d.labels}, {"cells", cells},
            {"boundary", d.boundary},   {"target", d.target}};
}

DiscDiagram diagram_from_json(const json& j) {
    expect_format(j, kDiagramFormat);
    DiscDiagram d;
    d.labels = as_int_list(member(j, "labels"), "labels");
    const auto n = static_cast<std::int64_t>(d.labels.size());
    auto vertex_list = [&](const json& a, const std::string& field) {
        std::vector<int> out;
        for (auto v : as_int_list(a, field)) {
            if (v < 0 || v >= n) bad(field, "vertex " + std::to_string(v) + " out of range");
            out.push_back(static_cast<int>(v));
        }
        return out;
    };
    const json& cj = member(j, "cells");
    if (!cj.is_array()) bad("cells", "expected an array");
    for (std::size_t i = 0; i < cj.size(); ++i) {
        const std::string f = "cells[" + std::to_string(i) + "]";
        DiagramCell c;
        c.walk = vertex_list(member(cj[i], "walk"), f + ".walk");
        c.target_cell = static_cast<int>(as_int(member(cj[i], "target_cell"), f + ".target_cell"));
        c.offset = static_cast<int>(as_int(member(cj[i], "offset"), f + ".offset"));
        const json& r = member(cj[i], "reflected");
        if (!r.is_boolean()) bad(f + ".reflected", "expected a boolean");
        c.reflected = r.get<bool>();
        d.cells.push_back(std::move(c));
    }
    d.boundary = vertex_list(member(j, "boundary"), "boundary");
    if (j.contains("target")) {
        if (!j["target"].is_string()) bad("target", "expected a string");
        d.target = j["target"].get<std::string>();
    }
    return d;
}

json read_json_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::ParseError, "cannot open '" + path.string() + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    const std::string text = buf.str();
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        // Translate the byte offset into a line/column pair.
        const std::size_t pos = std::min(e.byte == 0 ? 0 : e.byte - 1, text.size());
        std::size_t line = 1;
        std::size_t col = 1;
        for (std::size_t i = 0; i < pos; ++i) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        throw Error(ErrorKind::ParseError, path.string() + ":" + std::to_string(line) + ":" + std::to_string(col) +
                                               ": " + e.what());
    }
}

void write_json_file(const std::filesystem::path& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw Error(ErrorKind::InvalidArgument, "cannot write '" + path.string() + "'");
    out << j.dump(2) << '\n';
}

namespace {

template <class F>
auto load_with_path(const std::filesystem::path& path, F&& parse) {
    const json j = read_json_file(path);
    try {
        return parse(j);
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::ParseError) throw Error(ErrorKind::ParseError, path.string() + ": " + e.message());
        throw;
    }
}

}  // namespace

Complex load_complex(const std::filesystem::path& path) { return load_with_path(path, complex_from_json); }
Presentation load_presentation(const std::filesystem::path& path) {
    return load_with_path(path, presentation_from_json);
}
DiscDiagram load_diagram(const std::filesystem::path& path) { return load_with_path(path, diagram_from_json); }

void save(const std::filesystem::path& path, const Complex& complex) { write_json_file(path, to_json(complex)); }
void save(const std::filesystem::path& path, const Presentation& p) { write_json_file(path, to_json(p)); }
void save(const std::filesystem::path& path, const DiscDiagram& d) { write_json_file(path, to_json(d)); }

}  // namespace npc
