#include "commands.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

namespace galileo::cli {

using nlohmann::json;

namespace {

json num(double x) { return std::isfinite(x) ? json(x) : json(nullptr); }

json point_json(const GridPoint& p) { return {{"u", p.u}, {"v", p.v}}; }

json quantity_json(const QuantityReport& q) {
  json j = {{"min", num(q.stats.min)},   {"max", num(q.stats.max)},
            {"mean", num(q.stats.mean)}, {"spread", num(q.stats.spread)},
            {"count", q.stats.count},    {"verdict", std::string(name_of(q.verdict))}};
  if (q.witness) {
    j["witness"] = {{"max", {{"at", point_json(q.witness->at_max)}, {"value", num(q.witness->max)}}},
                    {"min", {{"at", point_json(q.witness->at_min)}, {"value", num(q.witness->min)}}}};
  }
  return j;
}

json checks_json(const std::vector<CertificateCheck>& checks) {
  json a = json::array();
  for (const auto& c : checks) {
    a.push_back({{"name", c.name}, {"value", num(c.value)}, {"bound", c.bound},
                 {"relation", c.lower ? ">" : "<"}, {"pass", c.pass}});
  }
  return a;
}

std::string g17(double x) {
  if (std::isnan(x)) return "nan";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

int grid_dim(std::optional<std::array<int, 2>> flag, const Scene& s, std::size_t k) {
  if (flag) return (*flag)[k];
  if (s.grid) return (*s.grid)[k];
  return kDefaultGrid;
}

void require_grid(int nu, int nv) {
  if (nu < 2 || nv < 2) throw PreconditionError("grid must be at least 2x2");
}

bool ode_backed(const Scene& s) { return s.kind == "type4_cmc_ode"; }

void emit(const std::string& body, const std::optional<std::string>& path, std::ostream& out) {
  if (path) write_file(*path, body);
  else out << body;
}

}  // namespace

std::array<int, 2> parse_grid(const std::string& text) {
  const auto x = text.find_first_of("xX");
  std::array<int, 2> g{};
  try {
    if (x == std::string::npos) throw std::invalid_argument("");
    std::size_t used_a = 0, used_b = 0;
    const std::string a = text.substr(0, x), b = text.substr(x + 1);
    g = {std::stoi(a, &used_a), std::stoi(b, &used_b)};
    if (used_a != a.size() || used_b != b.size()) throw std::invalid_argument("");
  } catch (const std::logic_error&) {
    throw PreconditionError("grid must look like NxM, got '" + text + "'");
  }
  require_grid(g[0], g[1]);
  if (g[0] > 10000 || g[1] > 10000) throw PreconditionError("grid is limited to 10000 per side");
  return g;
}

json report_to_json(const CurvatureReport& r) {
  json failures = json::array();
  for (const auto& f : r.failures) {
    failures.push_back({{"i", f.i}, {"j", f.j}, {"at", point_json(f.at)}, {"error", f.error}});
  }
  json j = {{"grid", {r.nu, r.nv}},
            {"tolerance", r.tolerance},
            {"domain", {{"u", {r.domain.u.lo, r.domain.u.hi}}, {"v", {r.domain.v.lo, r.domain.v.hi}}}},
            {"usable", r.usable},
            {"K", quantity_json(r.K)},
            {"H_canonical", quantity_json(r.H_canonical)},
            {"H_paper", quantity_json(r.H_paper)},
            {"failures", failures}};
  if (r.closed_K_residual || r.closed_H_residual) {
    json c = json::object();
    if (r.closed_K_residual) c["K"] = num(*r.closed_K_residual);
    if (r.closed_H_residual) c["H_paper"] = num(*r.closed_H_residual);
    j["closed_form_residual"] = c;
  }
  return j;
}

json certificate_to_json(const Certificate& c) {
  return {{"theorem", std::string(name_of(c.theorem))},
          {"family", std::string(name_of(c.family))},
          {"pass", c.pass},
          {"checks", checks_json(c.checks)},
          {"report", report_to_json(c.report)}};
}

json probe_to_json(const ProbeReport& p) {
  return {{"probe", p.probe.id},
          {"description", p.probe.description},
          {"control", p.probe.control},
          {"spread_K", num(p.spread_K)},
          {"spread_H_paper", num(p.spread_H)},
          {"min_abs_H_paper", num(p.min_abs_H)},
          {"pass", p.pass},
          {"checks", checks_json(p.checks)},
          {"report", report_to_json(p.report)}};
}

void write_file(const std::string& path, const std::string& body) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw OutputError("cannot open '" + path + "' for writing");
  f << body;
  f.flush();
  if (!f) throw OutputError("failed writing '" + path + "'");
}

int cmd_eval(const Scene& scene, double u, double v, std::ostream& out) {
  const std::optional<SurfaceFamily> family = build_family(scene);
  const Surface s = family ? family->surface() : build_surface(scene);
  const Domain& d = s.domain();
  if (!(u >= d.u.lo && u <= d.u.hi && v >= d.v.lo && v <= d.v.hi)) {
    throw PreconditionError("point (" + g17(u) + ", " + g17(v) + ") lies outside the scene domain");
  }
  const Point3 p = s.point(u, v);
  const FundamentalData fd = fundamental(s, u, v);
  const Curvatures c = curvatures_from(fd);
  json j = {{"u", u},
            {"v", v},
            {"point", {p.x, p.y, p.z}},
            {"N", {fd.N.x, fd.N.y, fd.N.z}},
            {"W", fd.W},
            {"g", {fd.g1, fd.g2}},
            {"h", {fd.h11, fd.h12, fd.h22}},
            {"L", {fd.L11, fd.L12, fd.L22}},
            {"branch", fd.branch},
            {"K", c.K},
            {"H_canonical", c.H_canonical},
            {"H_paper", c.H_paper}};
  if (family) {
    json cf = json::object();
    if (const auto K = family->closed_form_K(u, v)) cf["K"] = num(*K);
    if (const auto H = family->closed_form_H(u, v)) cf["H_paper"] = num(*H);
    if (!cf.empty()) j["closed_form"] = cf;
  }
  out << j.dump(2) << '\n';
  return kExitOk;
}

int cmd_verify(const std::optional<Scene>& scene, const VerifyOptions& opt, std::ostream& out,
               std::ostream& err) {
  std::optional<std::string> path = opt.out;
  if (!path && scene) path = scene->output.report;

  if (opt.probe) {
    if (opt.theorem) throw PreconditionError("--probe and --theorem are exclusive");
    const int nu = opt.grid ? (*opt.grid)[0] : kDefaultGrid;
    const int nv = opt.grid ? (*opt.grid)[1] : kDefaultGrid;
    const ProbeReport p = probe_nonexistence(*opt.probe, nu, nv, opt.seed);
    emit(probe_to_json(p).dump(2) + "\n", path, out);
    if (!opt.quiet) err << "probe " << p.probe.id << ": " << (p.pass ? "PASS" : "FAIL") << '\n';
    return p.pass ? kExitOk : kExitFailedVerdict;
  }
  if (!scene) throw PreconditionError("verify needs a scene file or --probe");

  const int nu = grid_dim(opt.grid, *scene, 0), nv = grid_dim(opt.grid, *scene, 1);
  require_grid(nu, nv);

  if (opt.theorem) {
    const auto id = theorem_from_name(*opt.theorem);
    if (!id) throw PreconditionError("unknown theorem '" + *opt.theorem + "'");
    const std::optional<SurfaceFamily> family = build_family(*scene);
    if (!family) throw PreconditionError("theorem certificates need a family scene, not 'general'");
    const Certificate c = certify_theorem(*id, *family, nu, nv);
    emit(certificate_to_json(c).dump(2) + "\n", path, out);
    if (!opt.quiet) err << "certificate " << *opt.theorem << ": " << (c.pass ? "PASS" : "FAIL") << '\n';
    return c.pass ? kExitOk : kExitFailedVerdict;
  }

  const double tol =
      opt.tolerance.value_or(scene->tolerance.value_or(ode_backed(*scene) ? kOdeTolerance : kDefaultTolerance));
  const std::optional<SurfaceFamily> family = build_family(*scene);
  const CurvatureReport r = family ? sample(*family, nu, nv, tol) : sample(build_surface(*scene), nu, nv, tol);
  const bool pass = r.usable && (r.K.verdict == Verdict::constant || r.H_paper.verdict == Verdict::constant);
  json j = report_to_json(r);
  j["pass"] = pass;
  emit(j.dump(2) + "\n", path, out);
  if (!r.usable) {
    if (!opt.quiet) err << "verify: report unusable, " << r.failures.size() << " failed nodes\n";
    return kExitDegenerate;
  }
  if (!opt.quiet) {
    err << "verify: " << (pass ? "PASS" : "FAIL") << " (K " << name_of(r.K.verdict) << ", H_paper "
        << name_of(r.H_paper.verdict) << ")\n";
  }
  return pass ? kExitOk : kExitFailedVerdict;
}

std::string mesh_obj(const Surface& s, int nu, int nv) {
  require_grid(nu, nv);
  const auto us = uniform_grid(s.domain().u, nu);
  const auto vs = uniform_grid(s.domain().v, nv);
  std::string body;
  for (double u : us) {
    for (double v : vs) {
      const Point3 p = s.point(u, v);
      body += "v " + g17(p.x) + ' ' + g17(p.y) + ' ' + g17(p.z) + '\n';
    }
  }
  for (int i = 0; i + 1 < nu; ++i) {
    for (int j = 0; j + 1 < nv; ++j) {
      const int a = i * nv + j + 1, b = (i + 1) * nv + j + 1;
      body += "f " + std::to_string(a) + ' ' + std::to_string(b) + ' ' + std::to_string(b + 1) + ' ' +
              std::to_string(a + 1) + '\n';
    }
  }
  return body;
}

std::string heatmap_csv(const Surface& s, int nu, int nv) {
  require_grid(nu, nv);
  const auto us = uniform_grid(s.domain().u, nu);
  const auto vs = uniform_grid(s.domain().v, nv);
  const double nan = std::numeric_limits<double>::quiet_NaN();
  std::string body = "u,v,x,y,z,K,H_canonical,H_paper\n";
  for (double u : us) {
    for (double v : vs) {
      Point3 p{nan, nan, nan};
      Curvatures c{nan, nan, nan};
      try {
        p = s.point(u, v);
        c = curvatures(s, u, v);
      } catch (const DegenerateError&) {
      } catch (const EvalError&) {
      }
      for (double x : {u, v, p.x, p.y, p.z, c.K, c.H_canonical}) body += g17(x) + ',';
      body += g17(c.H_paper) + '\n';
    }
  }
  return body;
}

int cmd_mesh(const Scene& scene, std::optional<std::array<int, 2>> grid, std::optional<std::string> path) {
  if (!path) path = scene.output.mesh;
  if (!path) throw PreconditionError("mesh needs --out or output.mesh in the scene");
  const std::string body = mesh_obj(build_surface(scene), grid_dim(grid, scene, 0), grid_dim(grid, scene, 1));
  write_file(*path, body);
  return kExitOk;
}

int cmd_heatmap(const Scene& scene, std::optional<std::array<int, 2>> grid, std::optional<std::string> path) {
  if (!path) path = scene.output.heatmap;
  if (!path) throw PreconditionError("heatmap needs --out or output.heatmap in the scene");
  const std::string body =
      heatmap_csv(build_surface(scene), grid_dim(grid, scene, 0), grid_dim(grid, scene, 1));
  write_file(*path, body);
  return kExitOk;
}

int exit_code_for(const std::exception& e) {
  if (dynamic_cast<const OutputError*>(&e)) return kExitUnwritable;
  if (dynamic_cast<const DegenerateError*>(&e) || dynamic_cast<const EvalError*>(&e)) return kExitDegenerate;
  return kExitInvalidInput;
}

}  // namespace galileo::cli
