#include "lefscalc/fixtures.hpp"

#include "lefscalc/error.hpp"

#include <algorithm>

namespace lefscalc {

namespace {

using Coords = std::map<std::string, std::vector<Rational>>;
using Ell = std::map<std::string, Rational>;

std::string pv(int i, int m) { return "v" + std::to_string(((i % m) + m) % m); }
std::string hv(int i) { return pv(i, 6); }

std::vector<std::string> polygon_ids(int m) {
  std::vector<std::string> ids;
  for (int i = 0; i < m; ++i) ids.push_back(pv(i, m));
  return ids;
}

Coords hexagon_coords() {
  const int xy[6][2] = {{2, 0}, {1, 2}, {-1, 2}, {-2, 0}, {-1, -2}, {1, -2}};
  Coords c;
  for (int i = 0; i < 6; ++i) c[hv(i)] = {Rational(xy[i][0]), Rational(xy[i][1])};
  return c;
}

// v0 lowest, v_{m/2} highest.
Ell polygon_ell(int m) {
  Ell e;
  for (int i = 0; i < m; ++i) e[pv(i, m)] = 2 * i <= m ? 2 * i : 2 * (m - i) - 1;
  return e;
}

SimplicialComplex polygon(int m) {
  std::vector<std::vector<std::string>> edges;
  for (int i = 0; i < m; ++i) edges.push_back({pv(i, m), pv(i + 1, m)});
  return SimplicialComplex::from_facets(polygon_ids(m), edges, m == 6 ? hexagon_coords() : Coords{});
}

SimplicialComplex hexagon() { return polygon(6); }

ProblemFile polygon_problem(int m) {
  ProblemFile p;
  p.complex = polygon(m);
  p.ell = polygon_ell(m);
  return p;
}

ProblemFile hexagon_problem() { return polygon_problem(6); }

Ell hexagon_ell() { return polygon_ell(6); }

ProblemFile twelve_gon() {
  const SimplicialComplex base = hexagon();
  const Subdivision sd = barycentric_subdivide(base);
  ProblemFile p;
  p.complex = sd.complex;
  // Interpolated heights stay generic along edges.
  Ell ell;
  const Ell h = hexagon_ell();
  for (int s = 0; s < base.size(); ++s) {
    Rational sum;
    const auto ids = base.simplex_ids(s);
    for (const auto& id : ids) sum += h.at(id);
    ell[sd.complex.vertex_id(sd.barycenter_vertex[s])] = sum / Rational(static_cast<long long>(ids.size()));
  }
  p.ell = ell;
  return p;
}

ProblemFile disk() {
  auto ids = polygon_ids(6);
  ids.push_back("c");
  std::vector<std::vector<std::string>> triangles;
  for (int i = 0; i < 6; ++i) triangles.push_back({"c", hv(i), hv(i + 1)});
  Coords coords = hexagon_coords();
  coords["c"] = {Rational(0), Rational(0)};
  ProblemFile p;
  p.complex = SimplicialComplex::from_facets(ids, triangles, coords);
  Ell ell = hexagon_ell();
  ell["c"] = Rational(7, 2);
  p.ell = ell;
  return p;
}

SimplicialComplex sphere() {
  Coords coords{{"p", {0, 0, 0}}, {"q1", {1, 0, 0}}, {"q2", {0, 1, 0}}, {"q3", {0, 0, 1}}};
  return SimplicialComplex::from_facets({"p", "q1", "q2", "q3"},
                                        {{"p", "q1", "q2"}, {"p", "q1", "q3"}, {"p", "q2", "q3"}, {"q1", "q2", "q3"}},
                                        coords);
}

ProblemFile polygon_self_map(int m, int level, const std::map<std::string, std::string>& vm,
                             std::map<int, RationalMatrix> normal, Assumptions a) {
  ProblemFile p = polygon_problem(m);
  p.map = MapBlock{level, vm, std::nullopt};
  p.normal_data = std::move(normal);
  p.assumptions = a;
  return p;
}

void require_even_polygon(int m) {
  if (m < 4 || m % 2) throw Error(ErrorKind::InvalidInput, "polygon maps need an even vertex count >= 4");
}

}  // namespace

ProblemFile polygon_doubling(int m) {
  require_even_polygon(m);
  // On sd(m-gon): v_j -> v_2j, midpoint of v_j v_j+1 -> v_2j+1.
  std::map<std::string, std::string> vm;
  for (int j = 0; j < m; ++j) {
    vm[pv(j, m)] = pv(2 * j, m);
    std::vector<std::string> edge{pv(j, m), pv(j + 1, m)};
    std::sort(edge.begin(), edge.end());
    vm[barycenter_id(edge)] = pv(2 * j + 1, m);
  }
  return polygon_self_map(m, 1, vm, {{0, RationalMatrix::from_rows({{2}})}}, Assumptions{false, true});
}

ProblemFile polygon_reflection(int m) {
  require_even_polygon(m);
  std::map<std::string, std::string> vm;
  for (int i = 0; i < m; ++i) vm[pv(i, m)] = pv(-i, m);
  return polygon_self_map(m, 0, vm, {{0, RationalMatrix::from_rows({{-1}})}, {1, RationalMatrix::from_rows({{-1}})}}, {});
}

namespace {

ProblemFile rotation() {
  std::map<std::string, std::string> vm;
  for (int i = 0; i < 6; ++i) vm[hv(i)] = hv(i + 1);
  return polygon_self_map(6, 0, vm, {}, {});
}

ProblemFile flag3() {
  const BruhatCellSpace space = flag_cellspace(3);
  ProblemFile p;
  p.cells = space.cells;
  return p;
}

ProblemFile collapse() {
  ProblemFile p;
  p.complex = SimplicialComplex::from_facets({"a", "b"}, {{"a", "b"}}, {{"a", {0}}, {"b", {1}}});
  p.map = MapBlock{0, {{"a", "p"}, {"b", "p"}}, SimplicialComplex::from_facets({"p"}, {{"p"}})};
  return p;
}

ProblemFile square() {
  ProblemFile p;
  p.complex = SimplicialComplex::from_facets({"a", "b", "c", "d"}, {{"a", "b", "c"}, {"a", "c", "d"}},
                                             {{"a", {0, 0}}, {"b", {1, 0}}, {"c", {1, 1}}, {"d", {0, 1}}});
  p.map = MapBlock{0, {{"a", "x"}, {"b", "y"}, {"c", "y"}, {"d", "x"}},
                   SimplicialComplex::from_facets({"x", "y"}, {{"x", "y"}}, {{"x", {0}}, {"y", {1}}})};
  return p;
}

}  // namespace

const std::vector<std::string>& fixture_names() {
  static const std::vector<std::string> names{"point",      "interval", "hexagon", "12gon", "disk",
                                              "s2",         "cp1",      "doubling", "reflection",
                                              "rotation",   "flag3",    "collapse", "square"};
  return names;
}

bool is_fixture(const std::string& name) {
  const auto& names = fixture_names();
  return std::find(names.begin(), names.end(), name) != names.end();
}

ProblemFile fixture(const std::string& name) {
  ProblemFile p;
  if (name == "point") {
    p.complex = SimplicialComplex::from_facets({"P"}, {{"P"}});
    p.ell = Ell{{"P", 0}};
  } else if (name == "interval") {
    p.complex = SimplicialComplex::from_facets({"a", "b"}, {{"a", "b"}}, {{"a", {0}}, {"b", {1}}});
    p.ell = Ell{{"a", 0}, {"b", 1}};
  } else if (name == "hexagon") {
    p = hexagon_problem();
  } else if (name == "12gon") {
    p = twelve_gon();
  } else if (name == "disk") {
    p = disk();
  } else if (name == "s2") {
    p.complex = sphere();
    p.ell = Ell{{"p", 0}, {"q1", 1}, {"q2", 2}, {"q3", 3}};
  } else if (name == "cp1") {
    p.cells = CellSpace({{"pt", 0, "cp1"}, {"cell", 2, "cp1"}});
  } else if (name == "doubling") {
    p = polygon_doubling(6);
  } else if (name == "reflection") {
    p = polygon_reflection(6);
  } else if (name == "rotation") {
    p = rotation();
  } else if (name == "flag3") {
    p = flag3();
  } else if (name == "collapse") {
    p = collapse();
  } else if (name == "square") {
    p = square();
  } else {
    throw Error(ErrorKind::UnknownCell, "unknown fixture '" + name + "'");
  }
  return p;
}

}  // namespace lefscalc
