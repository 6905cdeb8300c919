#include "lefscalc/complex.hpp"
#include "lefscalc/error.hpp"
#include "lefscalc/euler.hpp"
#include "lefscalc/fixtures.hpp"
#include "lefscalc/homology.hpp"
#include "lefscalc/random_models.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace lefscalc;

namespace {

SimplicialComplex triangle() { return SimplicialComplex::from_facets({"a", "b", "c"}, {{"a", "b", "c"}}); }

SimplicialComplex hexagon() { return *fixture("hexagon").complex; }

std::vector<std::string> labels(const CellularSubset& s) { return s.labels(); }

bool has_issue(const std::vector<std::string>& issues, const std::string& needle) {
  return std::any_of(issues.begin(), issues.end(), [&](const std::string& s) { return s.find(needle) != std::string::npos; });
}

int count_dim(const SimplicialComplex& k, int d) { return static_cast<int>(k.simplices_of_dim(d).size()); }

}  // namespace

TEST_CASE("validate") {
  CHECK(validate(triangle()).empty());

  const SimplicialComplex missing({"a", "b", "c"}, {{"a"}, {"b"}, {"c"}, {"a", "c"}, {"b", "c"}, {"a", "b", "c"}});
  CHECK(has_issue(validate(missing), "not face-closed"));
  CHECK_THROWS_AS(require_valid(missing), Error);

  const SimplicialComplex flat({"a", "b"}, {{"a"}, {"b"}, {"a", "b"}}, {{"a", {1, 1}}, {"b", {1, 1}}});
  CHECK(has_issue(validate(flat), "affinely dependent"));

  CHECK_THROWS_AS(SimplicialComplex({"a", "a"}, {}), Error);
  CHECK_THROWS_AS(SimplicialComplex({"a"}, {{"a", "z"}}), Error);
}

TEST_CASE("canonical order does not depend on input order") {
  const SimplicialComplex a({"b", "a", "c"}, {{"c", "a"}, {"a"}, {"c"}, {"b"}});
  const SimplicialComplex b({"a", "b", "c"}, {{"a"}, {"b"}, {"c"}, {"a", "c"}});
  CHECK(a == b);
  CHECK(a.simplex_label(3) == "a,c");
}

TEST_CASE("star") {
  const SimplicialComplex point({"P"}, {{"P"}});
  CHECK(labels(star(point, "P")) == std::vector<std::string>{"P"});
  const SimplicialComplex edge = SimplicialComplex::from_facets({"a", "b"}, {{"a", "b"}});
  CHECK(labels(star(edge, "a")) == std::vector<std::string>{"a", "a,b"});
  CHECK(labels(star(hexagon(), "v0")) == std::vector<std::string>{"v0", "v0,v1", "v0,v5"});
  CHECK_THROWS_AS(star(hexagon(), "nope"), Error);
}

TEST_CASE("link and closure") {
  const SimplicialComplex l = link(hexagon(), "v0");
  CHECK(l.vertex_count() == 2);
  CHECK(l.size() == 2);

  const SimplicialComplex t = triangle();
  const CellularSubset edge(t, {t.index_of_ids({"a", "b"})});
  CHECK(labels(closure(edge)) == std::vector<std::string>{"a", "b", "a,b"});
  CHECK(!is_closed(edge));
  CHECK(is_locally_closed(edge));
}

TEST_CASE("link of an interior disk vertex is a circle") {
  const SimplicialComplex disk = *fixture("disk").complex;
  // Brute force: drop c from every simplex that contains it.
  std::set<std::vector<std::string>> expected;
  for (int i = 0; i < disk.size(); ++i) {
    auto ids = disk.simplex_ids(i);
    auto it = std::find(ids.begin(), ids.end(), "c");
    if (it == ids.end() || ids.size() == 1) continue;
    ids.erase(it);
    expected.insert(ids);
  }
  const SimplicialComplex l = link(disk, "c");
  std::set<std::vector<std::string>> got;
  for (int i = 0; i < l.size(); ++i) got.insert(l.simplex_ids(i));
  CHECK(got == expected);
  for (int v = 0; v < l.vertex_count(); ++v) {
    int degree = 0;
    for (int e : l.simplices_of_dim(1))
      if (std::count(l.simplex(e).begin(), l.simplex(e).end(), v)) ++degree;
    CHECK(degree == 2);
  }
  CHECK(betti(l) == std::vector<int>{1, 1});
}

TEST_CASE("connected components") {
  const SimplicialComplex two = SimplicialComplex::from_facets({"a", "b", "c", "d"}, {{"a", "b"}, {"c", "d"}});
  CHECK(connected_components(two).size() == 2);
  CHECK(connected_components(hexagon()).size() == 1);
  const SimplicialComplex h = hexagon();
  const CellularSubset fixed(h, {h.index_of_ids({"v0"}), h.index_of_ids({"v3"})});
  const auto parts = connected_components(fixed);
  REQUIRE(parts.size() == 2);
  CHECK(labels(parts[0]) == std::vector<std::string>{"v0"});
  CHECK(labels(parts[1]) == std::vector<std::string>{"v3"});
}

TEST_CASE("star is locally closed and components partition") {
  for (int i = 0; i < 60; ++i) {
    Rng rng = make_rng(11, 1, i);
    const SimplicialComplex k = random_complex(rng);
    for (int v = 0; v < k.vertex_count(); ++v) CHECK(is_locally_closed(star(k, v)));
    std::vector<int> seen;
    for (const auto& c : connected_components(k)) seen.insert(seen.end(), c.cells().begin(), c.cells().end());
    std::sort(seen.begin(), seen.end());
    std::vector<int> all(k.size());
    for (int j = 0; j < k.size(); ++j) all[j] = j;
    CHECK(seen == all);
  }
}

TEST_CASE("barycentric subdivision") {
  const SimplicialComplex edge = SimplicialComplex::from_facets({"a", "b"}, {{"a", "b"}});
  const Subdivision se = barycentric_subdivide(edge);
  CHECK(count_dim(se.complex, 0) == 3);
  CHECK(count_dim(se.complex, 1) == 2);
  CHECK(se.complex.find_vertex("[a|b]"));

  const Subdivision sh = barycentric_subdivide(hexagon());
  CHECK(count_dim(sh.complex, 0) == 12);
  CHECK(count_dim(sh.complex, 1) == 12);
  CHECK(sh.complex == *fixture("12gon").complex);

  const Subdivision st = barycentric_subdivide(triangle());
  const auto chains = oracle::chain_counts(3);
  REQUIRE(chains.size() == 3);
  CHECK(count_dim(st.complex, 0) == chains[0]);
  CHECK(count_dim(st.complex, 1) == chains[1]);
  CHECK(count_dim(st.complex, 2) == chains[2]);
  CHECK(chains == std::vector<int>{7, 12, 6});
  CHECK(validate(st.complex).empty());
  CHECK(st.complex.find_vertex("[a|b|c]"));
}

TEST_CASE("subdivision keeps coordinates and Euler characteristic") {
  const Subdivision sd = barycentric_subdivide(hexagon());
  const auto& mid = sd.complex.coord(sd.complex.vertex_index("[v0|v1]"));
  CHECK(mid == std::vector<Rational>{Rational(3) / Rational(2), 1});
  CHECK(validate(sd.complex).empty());

  for (int i = 0; i < 100; ++i) {
    Rng rng = make_rng(11, 2, i);
    const SimplicialComplex k = random_complex(rng);
    const SimplicialComplex s = barycentric_subdivide(k).complex;
    CHECK(chi_c(CellularSubset::all(k)) == chi_c(CellularSubset::all(s)));
  }
}

TEST_CASE("subdivision tower tracks carriers") {
  const SubdivisionTower t(triangle(), 2);
  CHECK(t.levels() == 2);
  CHECK(count_dim(t.top(), 2) == 36);
  for (int v = 0; v < t.top().vertex_count(); ++v) {
    Rational total;
    for (const auto& [b, w] : t.barycentric(v)) total += w;
    CHECK(total == 1);
  }
  for (const auto& [b, w] : t.barycentric(t.top().vertex_index("[a|b|c]"))) CHECK(w == Rational(1) / Rational(3));

}

TEST_CASE("simplicial maps") {
  const SimplicialComplex edge = SimplicialComplex::from_facets({"a", "b"}, {{"a", "b"}});
  const SimplicialComplex two({"x", "y"}, {{"x"}, {"y"}});
  CHECK_THROWS_AS(SimplicialMap::from_ids(edge, two, {{"a", "x"}, {"b", "y"}}), Error);
  const SimplicialMap g = SimplicialMap::from_ids(edge, two, {{"a", "x"}, {"b", "x"}});
  CHECK(g.image(edge.index_of_ids({"a", "b"})) == two.index_of_ids({"x"}));
  const SimplicialMap id = SimplicialMap::identity(edge);
  CHECK(compose(g, id).vertex_map() == g.vertex_map());
}

TEST_CASE("cell spaces") {
  const CellSpace cp1 = *fixture("cp1").cells;
  CHECK(cp1.size() == 2);
  CHECK(cp1.cell(0).id == "cell");
  CHECK_THROWS_AS(CellSpace({{"x", 0, ""}, {"x", 2, ""}}), Error);
  CHECK_THROWS_AS(require_complex(Space(cp1), "homology"), Error);
}
