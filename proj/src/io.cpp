#include "cech2/io.hpp"

#include <fstream>
#include <sstream>

#include "cech2/error.hpp"

namespace cech2 {

namespace {

[[noreturn]] void bad(const std::string& msg) { throw Error(ErrorCode::InvalidInput, msg); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field '") + key + "'");
  return j.at(key);
}

std::vector<Elem> int_array(const Json& j, const char* what) {
  if (!j.is_array()) bad(std::string(what) + " must be an array of integers");
  std::vector<Elem> out;
  for (const Json& x : j) {
    if (!x.is_number_integer()) bad(std::string(what) + " must be an array of integers");
    out.push_back(x.get<Elem>());
  }
  return out;
}

std::vector<std::vector<Elem>> int_matrix(const Json& j, const char* what) {
  if (!j.is_array()) bad(std::string(what) + " must be an array of arrays");
  std::vector<std::vector<Elem>> out;
  for (const Json& row : j) out.push_back(int_array(row, what));
  return out;
}

std::string key_of(const Simplex& s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
  return out;
}

std::vector<Elem> values_on(const Json& j, const std::vector<Simplex>& simplices, const char* what) {
  if (!j.is_object()) bad(std::string(what) + " must be an object keyed by \"i,j\"");
  std::vector<Elem> out;
  for (const Simplex& s : simplices) {
    const std::string key = key_of(s);
    if (!j.contains(key)) bad(std::string(what) + " has no value on " + key);
    const Json& v = j.at(key);
    if (!v.is_number_integer()) bad(std::string(what) + "[" + key + "] is not an integer");
    const Elem x = v.get<Elem>();
    if (x < 0) throw Error(ErrorCode::EntryOutOfRange, std::string(what) + "[" + key + "] = " + std::to_string(x));
    out.push_back(x);
  }
  if (j.size() != simplices.size()) bad(std::string(what) + " has entries on non-simplices");
  return out;
}

bool has_prefix(const std::string& s, const std::string& prefix) { return s.rfind(prefix, 0) == 0; }

TwoGroupHom hom_from_json(const Json& j, const CrossedModule& dom, const CrossedModule& cod) {
  return TwoGroupHom::validate(dom, cod, GroupHom::validate(dom.G(), cod.G(), int_array(field(j, "G"), "G map")),
                               GroupHom::validate(dom.H(), cod.H(), int_array(field(j, "H"), "H map")));
}

}  // namespace

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    bad(std::string("malformed JSON: ") + e.what());
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) bad("cannot read '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_json(ss.str());
}

Json to_json(const FiniteGroup& g) { return Json{{"name", g.name()}, {"order", g.order()}, {"table", g.table()}}; }

GroupPtr group_from_json(const Json& j) {
  if (j.is_string()) return builtin_group(j.get<std::string>());
  const std::string name = j.is_object() && j.contains("name") && j["name"].is_string() ? j["name"].get<std::string>() : "G";
  GroupPtr g = FiniteGroup::validate(name, int_matrix(field(j, "table"), "table"));
  if (j.contains("order") && (!j["order"].is_number_integer() || j["order"].get<int>() != g->order()))
    bad("order does not match the table of " + name);
  return g;
}

Json to_json(const CrossedModule& xm) {
  return Json{{"name", xm.name()},
              {"G", to_json(*xm.G())},
              {"H", to_json(*xm.H())},
              {"t", xm.t().map()},
              {"alpha", xm.alpha().perms()}};
}

CrossedModule crossed_module_from_json(const Json& j) {
  GroupPtr G = group_from_json(field(j, "G"));
  GroupPtr H = group_from_json(field(j, "H"));
  const std::string name = j.contains("name") && j["name"].is_string() ? j["name"].get<std::string>() : H->name() + "->" + G->name();
  GroupAction alpha = j.contains("alpha") ? GroupAction::validate(G, H, int_matrix(j["alpha"], "alpha"))
                                          : GroupAction::trivial(G, H);
  return CrossedModule::validate(name, GroupHom::validate(H, G, int_array(field(j, "t"), "t")), std::move(alpha));
}

Json to_json(const SimplicialComplex& c) { return Json{{"vertices", c.vertex_count()}, {"maximal", c.maximal_simplices()}}; }

SimplicialComplex complex_from_json(const Json& j) {
  const Json& v = field(j, "vertices");
  if (!v.is_number_integer()) bad("vertices must be an integer");
  return SimplicialComplex::build(v.get<int>(), int_matrix(field(j, "maximal"), "maximal"));
}

Json to_json(const Cocycle& c, const SimplicialComplex& complex) {
  Json g = Json::object(), h = Json::object();
  const auto& edges = complex.simplices_of_dim(1);
  const auto& tris = complex.simplices_of_dim(2);
  for (std::size_t e = 0; e < edges.size(); ++e) g[key_of(edges[e])] = c.g[e];
  for (std::size_t t = 0; t < tris.size(); ++t) h[key_of(tris[t])] = c.h[t];
  return Json{{"g", g}, {"h", h}};
}

Cocycle cocycle_from_json(const Json& j, const SimplicialComplex& complex) {
  Cocycle c;
  c.g = values_on(j.contains("g") ? j["g"] : Json::object(), complex.simplices_of_dim(1), "g");
  c.h = values_on(j.contains("h") ? j["h"] : Json::object(), complex.simplices_of_dim(2), "h");
  return c;
}

Json to_json(const CoboundaryWitness& w, const SimplicialComplex& complex) {
  Json f = Json::object(), k = Json::object();
  for (int v = 0; v < complex.vertex_count(); ++v) f[std::to_string(v)] = w.f[v];
  const auto& edges = complex.simplices_of_dim(1);
  for (std::size_t e = 0; e < edges.size(); ++e) k[key_of(edges[e])] = w.k[e];
  return Json{{"f", f}, {"k", k}};
}

Json to_json(const Classification& c) {
  Json reps = Json::array();
  for (std::size_t i = 0; i < c.class_count(); ++i) reps.push_back(to_json(c.representative(i), c.space().setting().complex()));
  return Json{{"classes", c.class_count()},
              {"sizes", c.sizes()},
              {"base_class", c.base_class()},
              {"cocycles", c.space().size()},
              {"representatives", reps}};
}

Json to_json(const Report& r) {
  Json checks = Json::array();
  for (const CheckItem& c : r.checks) {
    Json item{{"name", c.name}, {"ok", c.ok}};
    if (!c.detail.empty()) item["detail"] = c.detail;
    checks.push_back(item);
  }
  Json figures = Json::object();
  for (const auto& [k, v] : r.figures) figures[k] = v;
  return Json{{"suite", r.suite}, {"ok", r.ok()}, {"checks", checks}, {"figures", figures}};
}

GroupSES group_ses_from_json(const Json& j) {
  GroupPtr H = group_from_json(field(j, "H"));
  GroupPtr G = group_from_json(field(j, "G"));
  GroupPtr K = group_from_json(field(j, "K"));
  std::optional<std::vector<Elem>> section;
  if (j.contains("section")) section = int_array(j["section"], "section");
  return GroupSES::validate(GroupHom::validate(H, G, int_array(field(j, "t"), "t")),
                            GroupHom::validate(G, K, int_array(field(j, "p"), "p")), std::move(section));
}

CrossedModuleSES crossed_module_ses_from_json(const Json& j) {
  const CrossedModule x0 = crossed_module_from_json(field(j, "xm0"));
  const CrossedModule x1 = crossed_module_from_json(field(j, "xm1"));
  const CrossedModule x2 = crossed_module_from_json(field(j, "xm2"));
  return CrossedModuleSES{hom_from_json(field(j, "f"), x0, x1), hom_from_json(field(j, "p"), x1, x2)};
}

CrossedModule z2_to_z4() {
  GroupPtr z2 = cyclic_group(2), z4 = cyclic_group(4);
  return CrossedModule::validate("Z2->Z4", GroupHom::validate(z2, z4, {0, 2}), GroupAction::trivial(z4, z2));
}

CrossedModule parse_coefficients(const std::string& spec) {
  if (has_prefix(spec, "discrete:")) return discrete_two_group(builtin_group(spec.substr(9)));
  if (has_prefix(spec, "shift:")) return shift_two_group(builtin_group(spec.substr(6)));
  if (has_prefix(spec, "aut:")) return aut_two_group(builtin_group(spec.substr(4)));
  if (has_prefix(spec, "hat:")) return hat_construction(parse_coefficients(spec.substr(4))).hat;
  if (spec == "z2-z4") return z2_to_z4();
  return crossed_module_from_json(read_json_file(spec));
}

SimplicialComplex parse_space(const std::string& spec) {
  for (const std::string& name : standard_space_names())
    if (spec == name) return standard_space(spec);
  if (spec.find('/') == std::string::npos && spec.find(".json") == std::string::npos) return standard_space(spec);
  return complex_from_json(read_json_file(spec));
}

GroupSES parse_group_ses(const std::string& spec) {
  if (spec == "z2-z4-z2") return ses_z2_z4_z2();
  if (spec == "z3-z3-1") return ses_z3_z3_trivial();
  return group_ses_from_json(read_json_file(spec));
}

CrossedModuleSES parse_crossed_module_ses(const std::string& spec) {
  if (has_prefix(spec, "hat:")) return hat_construction(parse_coefficients(spec.substr(4))).ses;
  if (spec == "z2-z4-z2" || spec == "z3-z3-1") return discrete_ses(parse_group_ses(spec));
  const Json j = read_json_file(spec);
  if (j.is_object() && j.contains("xm0")) return crossed_module_ses_from_json(j);
  return discrete_ses(group_ses_from_json(j));
}

}  // namespace cech2
