#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "commands.hpp"

using namespace galileo::cli;

int main(int argc, char** argv) {
  CLI::App app{"Curvature verification for translation surfaces in Galilean 3-space", "galileo"};
  app.require_subcommand(1);
  app.fallthrough();
  bool quiet = false;
  app.add_flag("--quiet,-q", quiet, "Suppress the summary line on stderr");

  std::string scene_path;
  std::string grid_text;
  std::string out_path;
  double u = 0.0, v = 0.0;
  VerifyOptions vopt;
  double tol = 0.0;
  std::string theorem, probe;

  auto* eval = app.add_subcommand("eval", "Print the fundamental forms and curvatures at (u, v)");
  eval->add_option("scene", scene_path, "Scene file")->required();
  eval->add_option("u", u, "First parameter")->required();
  eval->add_option("v", v, "Second parameter")->required();

  auto* verify = app.add_subcommand("verify", "Sample a grid and report constancy, a certificate or a probe");
  verify->add_option("scene", scene_path, "Scene file");
  verify->add_option("--grid", grid_text, "Grid as NxM");
  auto* tol_opt = verify->add_option("--tol", tol, "Constancy tolerance")->check(CLI::PositiveNumber);
  auto* theorem_opt = verify->add_option("--theorem", theorem, "Theorem certificate id");
  auto* probe_opt = verify->add_option("--probe", probe, "Nonexistence probe id");
  verify->add_option("--seed", vopt.seed, "Probe coefficient seed (0 = canonical)");
  verify->add_option("--out", out_path, "Write the JSON here instead of the scene's output.report");

  auto* mesh = app.add_subcommand("mesh", "Write an OBJ quad mesh");
  mesh->add_option("scene", scene_path, "Scene file")->required();
  mesh->add_option("--grid", grid_text, "Grid as NxM");
  mesh->add_option("--out", out_path, "OBJ path");

  auto* heatmap = app.add_subcommand("heatmap", "Write a CSV curvature table");
  heatmap->add_option("scene", scene_path, "Scene file")->required();
  heatmap->add_option("--grid", grid_text, "Grid as NxM");
  heatmap->add_option("--out", out_path, "CSV path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInvalidInput;
  }

  try {
    std::optional<std::array<int, 2>> grid;
    if (!grid_text.empty()) grid = parse_grid(grid_text);
    std::optional<std::string> out;
    if (!out_path.empty()) out = out_path;

    if (*eval) return cmd_eval(load_scene(scene_path), u, v, std::cout);
    if (*verify) {
      vopt.grid = grid;
      vopt.out = out;
      vopt.quiet = quiet;
      if (*tol_opt) vopt.tolerance = tol;
      if (*theorem_opt) vopt.theorem = theorem;
      if (*probe_opt) vopt.probe = probe;
      std::optional<Scene> scene;
      if (!scene_path.empty()) scene = load_scene(scene_path);
      return cmd_verify(scene, vopt, std::cout, std::cerr);
    }
    if (*mesh) return cmd_mesh(load_scene(scene_path), grid, out);
    return cmd_heatmap(load_scene(scene_path), grid, out);
  } catch (const std::exception& e) {
    std::cerr << "galileo: " << e.what() << '\n';
    return exit_code_for(e);
  }
}
