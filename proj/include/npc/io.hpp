#pragma once

#include <filesystem>
#include <string>

#include "npc/complex.hpp"
#include "npc/report.hpp"

namespace npc {

struct DiscDiagram;

inline constexpr std::string_view kComplexFormat = "npc-complex-v1";
inline constexpr std::string_view kPresentationFormat = "npc-presentation-v1";
inline constexpr std::string_view kDiagramFormat = "npc-diagram-v1";

json to_json(const Complex& complex);
json to_json(const Presentation& p);
json to_json(const DiscDiagram& d);

// All of these throw ParseError (naming the offending field) or SchemaVersionError.
Complex complex_from_json(const json& j);
Presentation presentation_from_json(const json& j);
DiscDiagram diagram_from_json(const json& j);

// Reads a JSON document; syntax errors become ParseError with line/column.
json read_json_file(const std::filesystem::path& path);
void write_json_file(const std::filesystem::path& path, const json& j);

Complex load_complex(const std::filesystem::path& path);
Presentation load_presentation(const std::filesystem::path& path);
DiscDiagram load_diagram(const std::filesystem::path& path);

void save(const std::filesystem::path& path, const Complex& complex);
void save(const std::filesystem::path& path, const Presentation& p);
void save(const std::filesystem::path& path, const DiscDiagram& d);

// "npc-complex-v1" -> true; a different npc-complex version -> SchemaVersionError.
bool has_format(const json& j, std::string_view family);

}  // namespace npc
