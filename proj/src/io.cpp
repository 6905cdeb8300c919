#include "lefscalc/io.hpp"

#include "lefscalc/error.hpp"
#include "lefscalc/fixtures.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace lefscalc {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorKind::InvalidInput, what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field '") + key + "'");
  return j.at(key);
}

bool boolean(const Json& j, const char* key, bool fallback = false) {
  if (!j.contains(key) || j.at(key).is_null()) return fallback;
  if (!j.at(key).is_boolean()) bad(std::string("field '") + key + "' must be a boolean");
  return j.at(key).get<bool>();
}

std::string text(const Json& j, const char* what) {
  if (!j.is_string()) bad(std::string(what) + " must be a string");
  return j.get<std::string>();
}

long long integer(const Json& j, const char* what) {
  if (j.is_number_integer()) return j.get<long long>();
  if (j.is_string()) {
    const Rational r = Rational::parse(j.get<std::string>());
    if (r.is_integer()) return static_cast<long long>(r.num());
  }
  bad(std::string(what) + " must be an integer");
}

std::vector<std::string> split_label(const std::string& label) {
  std::vector<std::string> out;
  std::stringstream ss(label);
  std::string part;
  while (std::getline(ss, part, ',')) out.push_back(part);
  return out;
}

std::string sign_text(int s) { return std::to_string(s); }

int sign_from(const Json& j) {
  const long long s = integer(j, "sign");
  if (s < -1 || s > 1) bad("sign out of range");
  return static_cast<int>(s);
}

Regime regime_from_string(const std::string& s) {
  for (Regime r : {Regime::Attracting, Regime::ComplexModel, Regime::NonCharacteristic})
    if (s == to_string(r)) return r;
  bad("unknown regime '" + s + "'");
}

Json assumptions_json(const Assumptions& a) {
  return Json{{"complex_model", a.complex_model}, {"non_characteristic", a.non_characteristic}};
}

Assumptions assumptions_from(const Json& j) {
  if (!j.is_object()) bad("assumptions must be an object");
  for (const auto& [k, v] : j.items())
    if (k != "complex_model" && k != "non_characteristic") bad("unknown assumption '" + k + "'");
  return {boolean(j, "complex_model"), boolean(j, "non_characteristic")};
}

// Resolves a cell reference (label string or vertex-id array) to the
// canonical label of the space.
std::string canonical_label(const Space& space, const Json& ref) {
  if (ref.is_array()) {
    const auto* k = std::get_if<SimplicialComplex>(&space);
    if (!k) bad("cell references in a cell space are id strings");
    std::vector<std::string> ids;
    for (const auto& v : ref) ids.push_back(text(v, "vertex id"));
    return k->simplex_label(k->index_of_ids(ids));
  }
  const std::string s = text(ref, "cell reference");
  if (const auto* k = std::get_if<SimplicialComplex>(&space)) return k->simplex_label(k->index_of_ids(split_label(s)));
  return cell_label(space, cell_index(space, s));
}

Json label_json(const Space& space, const std::string& label) {
  if (std::holds_alternative<SimplicialComplex>(space)) {
    Json a = Json::array();
    for (const auto& id : split_label(label)) a.push_back(id);
    return a;
  }
  return label;
}

std::vector<std::string> label_list(const Space& space, const Json& j, const char* what) {
  if (!j.is_array()) bad(std::string(what) + " must be an array");
  std::set<int> seen;
  for (const auto& ref : j) seen.insert(cell_index(space, canonical_label(space, ref)));
  std::vector<std::string> out;
  for (int i : seen) out.push_back(cell_label(space, i));
  return out;
}

std::map<std::string, GaussianRational> label_values(const Space& space, const Json& j, const char* what) {
  if (!j.is_object()) bad(std::string(what) + " must be an object");
  std::map<std::string, GaussianRational> out;
  for (const auto& [k, v] : j.items()) {
    const std::string label = canonical_label(space, Json(k));
    if (out.count(label)) bad(std::string(what) + " lists cell " + label + " twice");
    out[label] = gaussian_from_json(v);
  }
  return out;
}

Json values_json(const Space& space, const std::map<std::string, GaussianRational>& values) {
  // Cell order, not string order.
  std::vector<std::pair<int, std::string>> order;
  for (const auto& [label, v] : values) order.emplace_back(cell_index(space, label), label);
  std::sort(order.begin(), order.end());
  Json out = Json::object();
  for (const auto& [i, label] : order) out[label] = to_json(values.at(label));
  return out;
}

Json rational_map_json(const std::map<std::string, Rational>& m) {
  Json out = Json::object();
  for (const auto& [k, v] : m) out[k] = to_json(v);
  return out;
}

std::map<std::string, Rational> rational_map_from(const Json& j, const char* what) {
  if (!j.is_object()) bad(std::string(what) + " must be an object");
  std::map<std::string, Rational> out;
  for (const auto& [k, v] : j.items()) out[k] = rational_from_json(v);
  return out;
}

std::map<std::string, GaussianRational> gaussian_map_from(const Json& j, const char* what) {
  if (!j.is_object()) bad(std::string(what) + " must be an object");
  std::map<std::string, GaussianRational> out;
  for (const auto& [k, v] : j.items()) out[k] = gaussian_from_json(v);
  return out;
}

Json gaussian_map_json(const std::map<std::string, GaussianRational>& m) {
  Json out = Json::object();
  for (const auto& [k, v] : m) out[k] = to_json(v);
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// Scalars and blocks.

Json to_json(const Rational& r) { return r.to_string(); }

Json to_json(const GaussianRational& z) {
  if (z.is_real()) return z.re.to_string();
  return Json{{"re", z.re.to_string()}, {"im", z.im.to_string()}};
}

Json to_json(const RationalMatrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_json(m(r, c)));
    rows.push_back(row);
  }
  return rows;
}

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long long>());
  bad("expected a rational \"p/q\", got " + j.dump());
}

GaussianRational gaussian_from_json(const Json& j) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items())
      if (k != "re" && k != "im") bad("unknown Gaussian part '" + k + "'");
    GaussianRational z;
    if (j.contains("re")) z.re = rational_from_json(j.at("re"));
    if (j.contains("im")) z.im = rational_from_json(j.at("im"));
    return z;
  }
  return GaussianRational(rational_from_json(j));
}

RationalMatrix matrix_from_json(const Json& j) {
  if (!j.is_array()) bad("matrix must be an array of rows");
  std::vector<std::vector<Rational>> rows;
  for (const auto& row : j) {
    if (!row.is_array()) bad("matrix row must be an array");
    std::vector<Rational> r;
    for (const auto& x : row) r.push_back(rational_from_json(x));
    rows.push_back(std::move(r));
  }
  if (rows.empty()) return RationalMatrix();
  return RationalMatrix::from_rows(rows);
}

Json to_json(const SimplicialComplex& k) {
  Json out = Json::object();
  Json vertices = Json::array();
  for (int v = 0; v < k.vertex_count(); ++v) vertices.push_back(k.vertex_id(v));
  out["vertices"] = vertices;
  if (k.has_coords()) {
    Json coords = Json::object();
    for (int v = 0; v < k.vertex_count(); ++v) {
      Json c = Json::array();
      for (const auto& x : k.coord(v)) c.push_back(to_json(x));
      coords[k.vertex_id(v)] = c;
    }
    out["coords"] = coords;
  }
  Json simplices = Json::array();
  for (int s = 0; s < k.size(); ++s) simplices.push_back(k.simplex_ids(s));
  out["simplices"] = simplices;
  return out;
}

Json to_json(const CellSpace& c) {
  Json cells = Json::array();
  for (const auto& cell : c.cells()) {
    Json o{{"id", cell.id}, {"dim", cell.dim}};
    if (!cell.component.empty()) o["component"] = cell.component;
    cells.push_back(o);
  }
  return Json{{"cells", cells}};
}

SimplicialComplex complex_from_json(const Json& j) {
  const Json& vj = field(j, "vertices");
  if (!vj.is_array()) bad("vertices must be an array");
  std::vector<std::string> vertices;
  for (const auto& v : vj) vertices.push_back(text(v, "vertex id"));
  std::vector<std::vector<std::string>> simplices;
  if (j.contains("simplices")) {
    if (!j.at("simplices").is_array()) bad("simplices must be an array");
    for (const auto& s : j.at("simplices")) {
      if (!s.is_array()) bad("each simplex must be an array of vertex ids");
      std::vector<std::string> ids;
      for (const auto& v : s) ids.push_back(text(v, "vertex id"));
      simplices.push_back(std::move(ids));
    }
  }
  std::map<std::string, std::vector<Rational>> coords;
  if (j.contains("coords")) {
    if (!j.at("coords").is_object()) bad("coords must be an object");
    for (const auto& [id, c] : j.at("coords").items()) {
      if (!c.is_array()) bad("coordinates of " + id + " must be an array");
      std::vector<Rational> x;
      for (const auto& e : c) x.push_back(rational_from_json(e));
      coords[id] = std::move(x);
    }
  }
  SimplicialComplex k(vertices, simplices, coords);
  require_valid(k);
  return k;
}

CellSpace cellspace_from_json(const Json& j) {
  const Json& cj = field(j, "cells");
  if (!cj.is_array()) bad("cells must be an array");
  std::vector<Cell> cells;
  for (const auto& c : cj) {
    Cell cell;
    cell.id = text(field(c, "id"), "cell id");
    cell.dim = static_cast<int>(integer(field(c, "dim"), "cell dim"));
    if (c.contains("component")) cell.component = text(c.at("component"), "component label");
    cells.push_back(std::move(cell));
  }
  return CellSpace(std::move(cells));
}

// ---------------------------------------------------------------------------
// Problem files.

bool operator==(const ProblemFile& a, const ProblemFile& b) {
  return a.complex == b.complex && a.cells == b.cells && a.map == b.map && a.values == b.values &&
         a.support == b.support && a.subset == b.subset && a.traces == b.traces && a.normal_data == b.normal_data &&
         a.ell == b.ell && a.assumptions.complex_model == b.assumptions.complex_model &&
         a.assumptions.non_characteristic == b.assumptions.non_characteristic;
}

ProblemFile problem_from_json(const Json& j) {
  if (!j.is_object()) bad("problem must be a JSON object");
  if (!j.contains("schema")) bad("missing field 'schema'");
  if (text(j.at("schema"), "schema") != kSchema) bad("unsupported schema '" + j.at("schema").get<std::string>() + "'");
  static const std::set<std::string> known{"schema", "vertices", "coords", "simplices", "cells", "map", "values",
                                           "support", "subset", "traces", "normal_data", "ell", "assumptions"};
  for (const auto& [k, v] : j.items())
    if (!known.count(k)) bad("unknown field '" + k + "'");

  ProblemFile p;
  if (j.contains("vertices") && j.contains("cells")) bad("give either a complex or a cell space, not both");
  if (j.contains("vertices")) p.complex = complex_from_json(j);
  if (j.contains("cells")) p.cells = cellspace_from_json(j);
  if (!p.complex && !p.cells) bad("missing 'vertices' (complex) or 'cells' (cell space)");
  const Space space = problem_space(p);

  if (j.contains("map")) {
    if (!p.complex) bad("a map needs a simplicial complex");
    const Json& m = j.at("map");
    MapBlock block;
    if (m.contains("subdivision_level")) block.subdivision_level = static_cast<int>(integer(m.at("subdivision_level"), "subdivision_level"));
    if (block.subdivision_level < 0) bad("subdivision_level must be nonnegative");
    const Json& vm = field(m, "vertex_map");
    if (!vm.is_object()) bad("vertex_map must be an object");
    for (const auto& [k, v] : vm.items()) block.vertex_map[k] = text(v, "vertex_map value");
    if (m.contains("target")) block.target = complex_from_json(m.at("target"));
    for (const auto& [k, v] : m.items())
      if (k != "subdivision_level" && k != "vertex_map" && k != "target") bad("unknown map field '" + k + "'");
    p.map = std::move(block);
  }
  if (j.contains("values")) p.values = label_values(space, j.at("values"), "values");
  if (j.contains("support")) p.support = label_list(space, j.at("support"), "support");
  if (j.contains("subset")) p.subset = label_list(space, j.at("subset"), "subset");
  if (j.contains("traces")) p.traces = label_values(space, j.at("traces"), "traces");
  if (j.contains("normal_data")) {
    if (!j.at("normal_data").is_object()) bad("normal_data must be an object keyed by component index");
    for (const auto& [k, v] : j.at("normal_data").items()) {
      const long long c = integer(Json(k), "normal_data key");
      if (c < 0) bad("normal_data key must be a component index");
      p.normal_data[static_cast<int>(c)] = matrix_from_json(v);
    }
  }
  if (j.contains("ell")) p.ell = rational_map_from(j.at("ell"), "ell");
  if (j.contains("assumptions")) p.assumptions = assumptions_from(j.at("assumptions"));
  return p;
}

Json to_json(const ProblemFile& p) {
  Json out{{"schema", kSchema}};
  if (p.complex) out.update(to_json(*p.complex));
  if (p.cells) out.update(to_json(*p.cells));
  const Space space = problem_space(p);
  if (p.map) {
    Json vm = Json::object();
    for (const auto& [k, v] : p.map->vertex_map) vm[k] = v;
    Json m{{"subdivision_level", p.map->subdivision_level}, {"vertex_map", vm}};
    if (p.map->target) m["target"] = to_json(*p.map->target);
    out["map"] = m;
  }
  if (p.values) out["values"] = values_json(space, *p.values);
  auto list = [&](const std::vector<std::string>& labels) {
    Json a = Json::array();
    for (const auto& l : labels) a.push_back(label_json(space, l));
    return a;
  };
  if (p.support) out["support"] = list(*p.support);
  if (p.subset) out["subset"] = list(*p.subset);
  if (!p.traces.empty()) out["traces"] = values_json(space, p.traces);
  if (!p.normal_data.empty()) {
    Json nd = Json::object();
    for (const auto& [c, m] : p.normal_data) nd[std::to_string(c)] = to_json(m);
    out["normal_data"] = nd;
  }
  if (p.ell) out["ell"] = rational_map_json(*p.ell);
  if (p.assumptions.complex_model || p.assumptions.non_characteristic) out["assumptions"] = assumptions_json(p.assumptions);
  return out;
}

ProblemFile load_problem(const std::string& path_or_fixture) {
  if (is_fixture(path_or_fixture)) return fixture(path_or_fixture);
  std::ifstream in(path_or_fixture);
  if (!in) bad("cannot open '" + path_or_fixture + "'");
  Json j;
  try {
    j = Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    bad(path_or_fixture + ": " + e.what());
  }
  return problem_from_json(j);
}

// ---------------------------------------------------------------------------
// Builders.

Space problem_space(const ProblemFile& p) {
  if (p.complex) return *p.complex;
  if (p.cells) return *p.cells;
  bad("problem has neither a complex nor a cell space");
}

CellularSubset subset_of(const ProblemFile& p, const std::vector<std::string>& labels) {
  const Space space = problem_space(p);
  std::set<int> cells;
  for (const auto& l : labels) cells.insert(cell_index(space, l));
  return CellularSubset(space, std::vector<int>(cells.begin(), cells.end()));
}

CellularSubset problem_subset(const ProblemFile& p) {
  if (p.subset) return subset_of(p, *p.subset);
  return CellularSubset::all(problem_space(p));
}

ConstructibleFunction problem_function(const ProblemFile& p) {
  const Space space = problem_space(p);
  if (!p.values) return ConstructibleFunction::constant(space, GaussianRational(1));
  std::map<int, GaussianRational> values;
  for (const auto& [label, v] : *p.values) values[cell_index(space, label)] = v;
  return ConstructibleFunction(space, values);
}

SelfMapSpec problem_self_map(const ProblemFile& p) {
  if (!p.complex) bad("a self-map needs a simplicial complex");
  if (!p.map) return SelfMapSpec::identity(*p.complex);
  if (p.map->target) bad("the map has a target complex; it is not a self-map");
  return SelfMapSpec::from_ids(*p.complex, p.map->subdivision_level, p.map->vertex_map);
}

SimplicialMap problem_map(const ProblemFile& p) {
  if (!p.complex) bad("a map needs a simplicial complex");
  if (!p.map || !p.map->target) bad("missing 'map' block with a 'target' complex");
  if (p.map->subdivision_level != 0) bad("maps between complexes take subdivision_level 0");
  return SimplicialMap::from_ids(*p.complex, *p.map->target, p.map->vertex_map);
}

TracedProblem problem_traced(const ProblemFile& p) {
  std::optional<TracedProblem> t;
  if (p.cells) {
    if (p.map) bad("cell spaces carry no maps; the cells are the fixed locus");
    t.emplace(TracedProblem{*p.cells, std::nullopt, {}, {}, p.assumptions});
  } else {
    t.emplace(TracedProblem{problem_self_map(p), std::nullopt, {}, {}, p.assumptions});
  }
  const Space space = t->space();
  if (p.support) t->support = subset_of(p, *p.support);
  for (const auto& [label, v] : p.traces) t->traces[cell_index(space, label)] = v;
  for (const auto& [c, m] : p.normal_data) t->normal_data[c] = NormalData{m};
  validate_problem(*t);
  return *t;
}

VertexFunctional problem_functional(const ProblemFile& p) {
  if (!p.ell) bad("missing 'ell' block");
  return VertexFunctional{*p.ell};
}

// ---------------------------------------------------------------------------
// Reports.

Json to_json(const LocalizationReport& r) {
  Json comps = Json::array();
  for (const auto& c : r.components) {
    comps.push_back(Json{{"component", c.index},
                         {"cells", c.cells},
                         {"integral", to_json(c.integral)},
                         {"value", to_json(c.value)},
                         {"sign", sign_text(c.sign)},
                         {"regime", to_string(c.regime)},
                         {"one_is_eigenvalue", c.one_is_eigenvalue},
                         {"meets_r_geq_1", c.meets_r_geq_1},
                         {"det_sign", sign_text(c.det_sign)},
                         {"normal_dim", c.normal_dim}});
  }
  return Json{{"global", r.global ? to_json(*r.global) : Json()},
              {"sum_of_locals", to_json(r.sum_of_locals)},
              {"equal", r.equal ? Json(*r.equal) : Json()},
              {"assumptions", assumptions_json(r.assumptions)},
              {"components", comps}};
}

LocalizationReport localization_report_from_json(const Json& j) {
  LocalizationReport r;
  if (!field(j, "global").is_null()) r.global = gaussian_from_json(j.at("global"));
  r.sum_of_locals = gaussian_from_json(field(j, "sum_of_locals"));
  if (!field(j, "equal").is_null()) r.equal = boolean(j, "equal");
  r.assumptions = assumptions_from(field(j, "assumptions"));
  for (const auto& c : field(j, "components")) {
    ComponentReport cr;
    cr.index = static_cast<int>(integer(field(c, "component"), "component"));
    for (const auto& l : field(c, "cells")) cr.cells.push_back(text(l, "cell"));
    cr.integral = gaussian_from_json(field(c, "integral"));
    cr.value = gaussian_from_json(field(c, "value"));
    cr.sign = sign_from(field(c, "sign"));
    cr.regime = regime_from_string(text(field(c, "regime"), "regime"));
    cr.one_is_eigenvalue = boolean(c, "one_is_eigenvalue");
    cr.meets_r_geq_1 = boolean(c, "meets_r_geq_1");
    cr.det_sign = sign_from(field(c, "det_sign"));
    cr.normal_dim = static_cast<int>(integer(field(c, "normal_dim"), "normal_dim"));
    r.components.push_back(std::move(cr));
  }
  return r;
}

FunctionReport function_report(const ConstructibleFunction& phi) {
  FunctionReport r;
  for (const auto& [cell, v] : phi.values()) r.values.emplace_back(cell_label(phi.parent(), cell), v);
  return r;
}

Json to_json(const FunctionReport& r) {
  Json out = Json::object();
  for (const auto& [label, v] : r.values) out[label] = to_json(v);
  return out;
}

FunctionReport function_report_from_json(const Json& j) {
  if (!j.is_object()) bad("function must be an object");
  FunctionReport r;
  for (const auto& [label, v] : j.items()) r.values.emplace_back(label, gaussian_from_json(v));
  return r;
}

Json to_json(const MorseReport& r) {
  Json out{{"table", gaussian_map_json(r.table.entries)},
           {"total", to_json(r.table.total())},
           {"integral", to_json(r.integral)},
           {"equal", r.equal},
           {"ell", rational_map_json(r.table.ell.values)},
           {"function", gaussian_map_json(r.table.function)},
           {"sign", sign_text(r.table.sign)}};
  if (r.table.regime) out["regime"] = to_string(*r.table.regime);
  return out;
}

MorseReport morse_report_from_json(const Json& j) {
  MorseReport r;
  r.table.entries = gaussian_map_from(field(j, "table"), "table");
  r.table.ell.values = rational_map_from(field(j, "ell"), "ell");
  r.table.function = gaussian_map_from(field(j, "function"), "function");
  r.table.sign = sign_from(field(j, "sign"));
  if (j.contains("regime")) r.table.regime = regime_from_string(text(j.at("regime"), "regime"));
  r.integral = gaussian_from_json(field(j, "integral"));
  r.equal = boolean(j, "equal");
  if (gaussian_from_json(field(j, "total")) != r.table.total()) bad("table total does not match its entries");
  return r;
}

Json to_json(const IndexCheckReport& r) {
  Json comps = Json::array();
  for (const auto& c : r.components)
    comps.push_back(Json{{"component", c.component},
                         {"microlocal_index", to_json(c.microlocal_index)},
                         {"signed_contribution", to_json(c.signed_contribution)},
                         {"equal", c.equal}});
  return Json{{"integral", to_json(r.integral)},
              {"index_sum", to_json(r.index_sum)},
              {"index_sum_negated", to_json(r.index_sum_negated)},
              {"components", comps},
              {"equal", r.equal}};
}

IndexCheckReport index_check_report_from_json(const Json& j) {
  IndexCheckReport r;
  r.integral = gaussian_from_json(field(j, "integral"));
  r.index_sum = gaussian_from_json(field(j, "index_sum"));
  r.index_sum_negated = gaussian_from_json(field(j, "index_sum_negated"));
  for (const auto& c : field(j, "components"))
    r.components.push_back({static_cast<int>(integer(field(c, "component"), "component")),
                            gaussian_from_json(field(c, "microlocal_index")),
                            gaussian_from_json(field(c, "signed_contribution")), boolean(c, "equal")});
  r.equal = boolean(j, "equal");
  return r;
}

Json to_json(const PushforwardReport& r) {
  return Json{{"function", to_json(r.function)},
              {"source_integral", to_json(r.source_integral)},
              {"target_integral", to_json(r.target_integral)},
              {"equal", r.equal}};
}

PushforwardReport pushforward_report_from_json(const Json& j) {
  PushforwardReport r;
  r.function = function_report_from_json(field(j, "function"));
  r.source_integral = gaussian_from_json(field(j, "source_integral"));
  r.target_integral = gaussian_from_json(field(j, "target_integral"));
  r.equal = boolean(j, "equal");
  return r;
}

Json to_json(const Hyperbolicity& h) {
  return Json{{"one_is_eigenvalue", h.one_is_eigenvalue},
              {"meets_r_geq_1", h.meets_r_geq_1},
              {"sign", sign_text(h.sign)},
              {"det_i_minus_a", to_json(h.det_i_minus_a)},
              {"characteristic", h.characteristic.to_string()},
              {"normal_dim", h.normal_dim}};
}

Json to_json(const IntersectionPattern& p) {
  Json comps = Json::array();
  for (const auto& c : p.components) {
    Json cells = Json::array();
    for (const auto& cell : c.cells) cells.push_back(Json{{"id", cell.id}, {"dim", cell.dim}, {"in_v", cell.in_v}});
    comps.push_back(Json{{"label", c.label}, {"chi", c.chi}, {"cells", cells}, {"normal", to_json(c.normal)}});
  }
  return Json{{"complex_model", p.complex_model}, {"components", comps}};
}

IntersectionPattern pattern_from_json(const Json& j) {
  IntersectionPattern p;
  p.complex_model = boolean(j, "complex_model", true);
  for (const auto& c : field(j, "components")) {
    PatternComponent pc;
    pc.label = text(field(c, "label"), "label");
    pc.chi = integer(field(c, "chi"), "chi");
    for (const auto& cell : field(c, "cells"))
      pc.cells.push_back({text(field(cell, "id"), "cell id"), static_cast<int>(integer(field(cell, "dim"), "dim")),
                          boolean(cell, "in_v")});
    pc.normal = matrix_from_json(field(c, "normal"));
    p.components.push_back(std::move(pc));
  }
  return p;
}

Json to_json(const FlagReport& r) {
  Json comps = Json::array();
  for (const auto& c : r.components) {
    Json o{{"label", c.label},
           {"chi", c.chi},
           {"chi_v_cap_m", c.chi_v_cap_m},
           {"contribution", to_json(c.contribution)},
           {"sign", sign_text(c.sign)},
           {"regime", to_string(c.regime)}};
    if (c.microlocal_index) o["microlocal_index"] = to_json(*c.microlocal_index);
    if (c.sphere_trace) o["sphere_trace"] = to_json(*c.sphere_trace);
    comps.push_back(o);
  }
  return Json{{"components", comps},
              {"total", to_json(r.total)},
              {"lefschetz_on_v", r.lefschetz_on_v},
              {"equal", r.equal}};
}

FlagReport flag_report_from_json(const Json& j) {
  FlagReport r;
  for (const auto& c : field(j, "components")) {
    FlagComponentResult fc;
    fc.label = text(field(c, "label"), "label");
    fc.chi = integer(field(c, "chi"), "chi");
    fc.chi_v_cap_m = integer(field(c, "chi_v_cap_m"), "chi_v_cap_m");
    fc.contribution = gaussian_from_json(field(c, "contribution"));
    fc.sign = sign_from(field(c, "sign"));
    fc.regime = regime_from_string(text(field(c, "regime"), "regime"));
    if (c.contains("microlocal_index")) fc.microlocal_index = gaussian_from_json(c.at("microlocal_index"));
    if (c.contains("sphere_trace")) fc.sphere_trace = rational_from_json(c.at("sphere_trace"));
    r.components.push_back(std::move(fc));
  }
  r.total = gaussian_from_json(field(j, "total"));
  r.lefschetz_on_v = integer(field(j, "lefschetz_on_v"), "lefschetz_on_v");
  r.equal = boolean(j, "equal");
  return r;
}

}  // namespace lefscalc
