#include "scene.hpp"

#include <fstream>
#include <sstream>

#include "galileo/error.hpp"

namespace galileo::cli {

using nlohmann::json;

namespace {

const std::vector<std::string> kU = {"u"};
const std::vector<std::string> kV = {"v"};

[[noreturn]] void bad(const std::string& field, const std::string& why) {
  throw PreconditionError("scene field '" + field + "': " + why);
}

const json& require(const json& obj, const std::string& key, const std::string& where) {
  if (!obj.contains(key)) bad(where + key, "missing");
  return obj.at(key);
}

double number(const json& obj, const std::string& key, const std::string& where) {
  const json& v = require(obj, key, where);
  if (!v.is_number()) bad(where + key, "expected a number");
  return v.get<double>();
}

double number_or(const json& obj, const std::string& key, double fallback, const std::string& where) {
  return obj.contains(key) ? number(obj, key, where) : fallback;
}

Expr expression(const json& obj, const std::string& key, const std::vector<std::string>& vars,
                const std::string& where) {
  const json& v = require(obj, key, where);
  if (!v.is_string()) bad(where + key, "expected an expression string");
  const std::string src = v.get<std::string>();
  try {
    return Expr::parse(src, vars);
  } catch (const ParseError& e) {
    // keep the byte offset, name the field
    const std::string msg = e.what();
    const std::string tail = " at byte " + std::to_string(e.position());
    throw ParseError("scene field '" + where + key + "': " + msg.substr(0, msg.size() - tail.size()),
                     e.position());
  }
}

AffineMatrix matrix(const json& obj, const std::string& where, const AffineMatrix& fallback) {
  if (!obj.contains("A")) return fallback;
  const json& a = obj.at("A");
  if (!a.is_array() || a.size() != 2 || !a[0].is_array() || !a[1].is_array() || a[0].size() != 2 ||
      a[1].size() != 2) {
    bad(where + "A", "expected [[a11, a12], [a21, a22]]");
  }
  for (const auto& row : a) {
    for (const auto& x : row) {
      if (!x.is_number()) bad(where + "A", "entries must be numbers");
    }
  }
  return {a[0][0].get<double>(), a[0][1].get<double>(), a[1][0].get<double>(), a[1][1].get<double>()};
}

json matrix_json(const AffineMatrix& A) { return json::array({{A.a11, A.a12}, {A.a21, A.a22}}); }

Interval interval(const json& j, const std::string& field) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    bad(field, "expected [lo, hi]");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

std::variant<GeneralParams, FamilyParams> params_from_json(const std::string& kind, const json& p) {
  const std::string w = "params.";
  if (kind == "general") {
    std::vector<std::string> vars = {"u", "v"};
    if (p.contains("variables")) {
      const json& vj = p.at("variables");
      if (!vj.is_array() || vj.size() != 2 || !vj[0].is_string() || !vj[1].is_string()) {
        bad(w + "variables", "expected two names");
      }
      vars = {vj[0].get<std::string>(), vj[1].get<std::string>()};
    }
    return GeneralParams{expression(p, "x", vars, w), expression(p, "y", vars, w), expression(p, "z", vars, w)};
  }
  const auto fk = family_from_name(kind);
  if (!fk) bad("kind", "unknown kind '" + kind + "'");
  switch (*fk) {
    case FamilyKind::type1_2_standard: {
      const double t = number_or(p, "type", 1.0, w);
      if (t != 1.0 && t != 2.0) bad(w + "type", "must be 1 or 2");
      return FamilyParams{StandardParams{static_cast<int>(t), expression(p, "f", kU, w), expression(p, "g", kV, w)}};
    }
    case FamilyKind::affine:
      return FamilyParams{AffineParams{matrix(p, w, {}), expression(p, "f", kU, w), expression(p, "g", kV, w)}};
    case FamilyKind::type3:
      return FamilyParams{Type3Params{expression(p, "f1", kU, w), expression(p, "f2", kU, w),
                                      expression(p, "g1", kV, w), expression(p, "g2", kV, w)}};
    case FamilyKind::type4:
      return FamilyParams{Type4Params{expression(p, "f1", kU, w), expression(p, "f2", kU, w),
                                      expression(p, "g", kV, w), number_or(p, "a", 0.0, w)}};
    case FamilyKind::constantK_type1:
      return FamilyParams{ConstantKParams{number(p, "K0", w), number_or(p, "c", 1.0, w)}};
    case FamilyKind::cmc_cylinder_B_i: {
      CmcCylinderParams c;
      c.H0 = number(p, "H0", w);
      c.A = matrix(p, w, {});
      if (p.contains("f")) c.f = expression(p, "f", kU, w);
      return FamilyParams{c};
    }
    case FamilyKind::cmc_cylinder_B_ii_1: {
      CmcCylinderParams c;
      c.H0 = number(p, "H0", w);
      c.variant = CmcVariant::B_ii_1;
      c.A = matrix(p, w, {});
      c.c1 = number(p, "c1", w);
      return FamilyParams{c};
    }
    case FamilyKind::parabolic_ruled: {
      ParabolicRuledParams r;
      r.A = matrix(p, w, r.A);
      r.c1 = number_or(p, "c1", r.c1, w);
      return FamilyParams{r};
    }
    case FamilyKind::type3_circle:
      return FamilyParams{Type3CircleParams{number(p, "H0", w), expression(p, "f1", kU, w), expression(p, "f2", kU, w)}};
    case FamilyKind::type4_cmc_ode: {
      Type4CmcOdeParams o;
      o.H0 = number_or(p, "H0", o.H0, w);
      if (p.contains("f2")) o.f2 = expression(p, "f2", kU, w);
      o.a = number_or(p, "a", o.a, w);
      o.c1 = number_or(p, "c1", o.c1, w);
      o.u0 = number_or(p, "u0", o.u0, w);
      o.u_end = number_or(p, "u_end", o.u_end, w);
      o.f1_0 = number_or(p, "f1_0", o.f1_0, w);
      o.f1p_0 = number_or(p, "f1p_0", o.f1p_0, w);
      const double steps = number_or(p, "steps", o.steps, w);
      if (steps != std::floor(steps) || steps < 1 || steps > 1e7) bad(w + "steps", "expected a positive integer");
      o.steps = static_cast<int>(steps);
      return FamilyParams{o};
    }
    case FamilyKind::ruled_type_C:
      return FamilyParams{RuledTypeCParams{expression(p, "x", kU, w), expression(p, "y", kU, w),
                                           expression(p, "z", kU, w)}};
  }
  bad("kind", "unknown kind '" + kind + "'");
}

json params_to_json(const std::variant<GeneralParams, FamilyParams>& params) {
  if (const auto* g = std::get_if<GeneralParams>(&params)) {
    return {{"variables", g->x.variables()},
            {"x", g->x.to_string()},
            {"y", g->y.to_string()},
            {"z", g->z.to_string()}};
  }
  return std::visit(
      [](const auto& p) -> json {
        using P = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<P, StandardParams>) {
          return {{"type", p.type}, {"f", p.f.to_string()}, {"g", p.g.to_string()}};
        } else if constexpr (std::is_same_v<P, AffineParams>) {
          return {{"A", matrix_json(p.A)}, {"f", p.f.to_string()}, {"g", p.g.to_string()}};
        } else if constexpr (std::is_same_v<P, Type3Params>) {
          return {{"f1", p.f1.to_string()}, {"f2", p.f2.to_string()}, {"g1", p.g1.to_string()}, {"g2", p.g2.to_string()}};
        } else if constexpr (std::is_same_v<P, Type4Params>) {
          return {{"f1", p.f1.to_string()}, {"f2", p.f2.to_string()}, {"g", p.g.to_string()}, {"a", p.a}};
        } else if constexpr (std::is_same_v<P, ConstantKParams>) {
          return {{"K0", p.K0}, {"c", p.c}};
        } else if constexpr (std::is_same_v<P, CmcCylinderParams>) {
          json j = {{"H0", p.H0}, {"A", matrix_json(p.A)}};
          if (p.variant == CmcVariant::B_ii_1) j["c1"] = p.c1;
          else if (p.f) j["f"] = p.f->to_string();
          return j;
        } else if constexpr (std::is_same_v<P, ParabolicRuledParams>) {
          return {{"A", matrix_json(p.A)}, {"c1", p.c1}};
        } else if constexpr (std::is_same_v<P, Type3CircleParams>) {
          return {{"H0", p.H0}, {"f1", p.f1.to_string()}, {"f2", p.f2.to_string()}};
        } else if constexpr (std::is_same_v<P, Type4CmcOdeParams>) {
          return {{"H0", p.H0}, {"f2", p.f2.to_string()}, {"a", p.a}, {"c1", p.c1}, {"u0", p.u0},
                  {"u_end", p.u_end}, {"f1_0", p.f1_0}, {"f1p_0", p.f1p_0}, {"steps", p.steps}};
        } else {
          return {{"x", p.x.to_string()}, {"y", p.y.to_string()}, {"z", p.z.to_string()}};
        }
      },
      std::get<FamilyParams>(params));
}

}  // namespace

Scene scene_from_json(const json& j) {
  if (!j.is_object()) bad("", "scene must be a JSON object");
  const json& kind = require(j, "kind", "");
  if (!kind.is_string()) bad("kind", "expected a string");
  const json& params = require(j, "params", "");
  if (!params.is_object()) bad("params", "expected an object");
  Scene s{kind.get<std::string>(), params_from_json(kind.get<std::string>(), params), {}, {}, {}, {}, {}};
  if (j.contains("comment")) {
    if (!j.at("comment").is_string()) bad("comment", "expected a string");
    s.comment = j.at("comment").get<std::string>();
  }

  if (j.contains("domain")) {
    const json& d = j.at("domain");
    if (!d.is_object()) bad("domain", "expected {\"u\": [lo, hi], \"v\": [lo, hi]}");
    s.domain = Domain{interval(require(d, "u", "domain."), "domain.u"), interval(require(d, "v", "domain."), "domain.v")};
  }
  if (j.contains("grid")) {
    const json& g = j.at("grid");
    if (!g.is_array() || g.size() != 2 || !g[0].is_number_integer() || !g[1].is_number_integer()) {
      bad("grid", "expected [nu, nv]");
    }
    s.grid = std::array<int, 2>{g[0].get<int>(), g[1].get<int>()};
  }
  if (j.contains("tolerance")) s.tolerance = number(j, "tolerance", "");
  if (j.contains("output")) {
    const json& o = j.at("output");
    if (!o.is_object()) bad("output", "expected an object");
    for (auto [key, slot] : {std::pair{"report", &s.output.report}, std::pair{"mesh", &s.output.mesh},
                             std::pair{"heatmap", &s.output.heatmap}}) {
      if (!o.contains(key)) continue;
      if (!o.at(key).is_string()) bad(std::string("output.") + key, "expected a path");
      *slot = o.at(key).get<std::string>();
    }
  }
  return s;
}

json scene_to_json(const Scene& s) {
  json j = {{"kind", s.kind}, {"params", params_to_json(s.params)}};
  if (s.domain) {
    j["domain"] = {{"u", {s.domain->u.lo, s.domain->u.hi}}, {"v", {s.domain->v.lo, s.domain->v.hi}}};
  }
  if (s.grid) j["grid"] = {(*s.grid)[0], (*s.grid)[1]};
  if (s.tolerance) j["tolerance"] = *s.tolerance;
  if (s.comment) j["comment"] = *s.comment;
  json o = json::object();
  if (s.output.report) o["report"] = *s.output.report;
  if (s.output.mesh) o["mesh"] = *s.output.mesh;
  if (s.output.heatmap) o["heatmap"] = *s.output.heatmap;
  if (!o.empty()) j["output"] = o;
  return j;
}

Scene load_scene(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw PreconditionError("cannot read scene file '" + path.string() + "'");
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError("scene file '" + path.string() + "' is not valid JSON: " + e.what(), e.byte);
  }
  return scene_from_json(j);
}

std::optional<SurfaceFamily> build_family(const Scene& s) {
  if (const auto* p = std::get_if<FamilyParams>(&s.params)) return make_family(*p, s.domain);
  return std::nullopt;
}

Surface build_surface(const Scene& s) {
  if (const auto* g = std::get_if<GeneralParams>(&s.params)) {
    return Surface(g->x, g->y, g->z, s.domain.value_or(Domain{}));
  }
  return build_family(s)->surface();
}

}  // namespace galileo::cli
