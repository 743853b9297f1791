#pragma once

// Scene files: one surface family plus sampling and output options, as JSON.
// docs/scene_schema.md has the full schema.

#include <array>
#include <filesystem>
#include <optional>
#include <string>
#include <variant>

#include <json.hpp>

#include "galileo/translation.hpp"

namespace galileo::cli {

/// A raw parametric surface, kind "general".
struct GeneralParams {
  Expr x, y, z;
};

struct OutputOptions {
  std::optional<std::string> report;   // verify
  std::optional<std::string> mesh;     // mesh
  std::optional<std::string> heatmap;  // heatmap
};

struct Scene {
  std::string kind;
  std::variant<GeneralParams, FamilyParams> params;
  std::optional<Domain> domain;
  std::optional<std::array<int, 2>> grid;
  std::optional<double> tolerance;
  OutputOptions output;
  std::optional<std::string> comment;  // free text, carried through unchanged
};

/// Throws PreconditionError on schema violations and ParseError (message
/// prefixed with the field name, byte offset kept) on bad expressions.
Scene scene_from_json(const nlohmann::json& j);
nlohmann::json scene_to_json(const Scene& s);
Scene load_scene(const std::filesystem::path& path);

/// The realized family; "general" scenes have none.
std::optional<SurfaceFamily> build_family(const Scene& s);
Surface build_surface(const Scene& s);

}  // namespace galileo::cli
