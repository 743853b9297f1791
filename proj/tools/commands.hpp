#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include <json.hpp>

#include "galileo/error.hpp"
#include "galileo/verify.hpp"
#include "scene.hpp"

namespace galileo::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitFailedVerdict = 1,
  kExitInvalidInput = 2,
  kExitDegenerate = 3,
  kExitUnwritable = 4,
};

/// An output path could not be opened or written.
class OutputError : public Error {
 public:
  using Error::Error;
};

/// "NxM" -> {N, M}; both at least 2.
std::array<int, 2> parse_grid(const std::string& text);

nlohmann::json report_to_json(const CurvatureReport& r);
nlohmann::json certificate_to_json(const Certificate& c);
nlohmann::json probe_to_json(const ProbeReport& p);

/// Writes `body` to `path` or throws OutputError.
void write_file(const std::string& path, const std::string& body);

struct VerifyOptions {
  std::optional<std::array<int, 2>> grid;
  std::optional<double> tolerance;
  std::optional<std::string> theorem;
  std::optional<std::string> probe;
  std::uint64_t seed = 0;
  std::optional<std::string> out;
  bool quiet = false;
};

// Each command returns its exit code and lets library exceptions escape;
// exit_code_for() maps those.
int cmd_eval(const Scene& scene, double u, double v, std::ostream& out);
int cmd_verify(const std::optional<Scene>& scene, const VerifyOptions& opt, std::ostream& out,
               std::ostream& err);
int cmd_mesh(const Scene& scene, std::optional<std::array<int, 2>> grid, std::optional<std::string> path);
int cmd_heatmap(const Scene& scene, std::optional<std::array<int, 2>> grid, std::optional<std::string> path);

/// Mesh and heatmap bodies, exposed for tests.
std::string mesh_obj(const Surface& s, int nu, int nv);
std::string heatmap_csv(const Surface& s, int nu, int nv);

int exit_code_for(const std::exception& e);

}  // namespace galileo::cli
