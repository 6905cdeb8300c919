#include "lefscalc/error.hpp"
#include "lefscalc/fixtures.hpp"
#include "lefscalc/homology.hpp"
#include "lefscalc/io.hpp"
#include "lefscalc/random_models.hpp"

#include <doctest.h>

#include <algorithm>

using namespace lefscalc;

namespace {

SimplicialComplex fx(const std::string& name) { return *fixture(name).complex; }

SelfMapSpec self_map(const std::string& name) { return problem_self_map(fixture(name)); }

CellularSubset vertices(const SimplicialComplex& k, const std::vector<std::string>& ids) {
  std::vector<int> cells;
  for (const auto& id : ids) cells.push_back(k.index_of_ids({id}));
  std::sort(cells.begin(), cells.end());
  return CellularSubset(k, cells);
}

/// The same complex and map with every vertex renamed, which reorders the
/// chain bases and flips orientations.
struct Renamed {
  SimplicialComplex complex;
  SimplicialMap map;
};

Renamed rename(const SimplicialMap& g, const std::vector<std::string>& names) {
  const SimplicialComplex& k = g.source();
  std::map<std::string, std::string> to;
  for (int v = 0; v < k.vertex_count(); ++v) to[k.vertex_id(v)] = names[v];
  std::vector<std::vector<std::string>> simplices;
  for (int i = 0; i < k.size(); ++i) {
    std::vector<std::string> ids;
    for (const auto& id : k.simplex_ids(i)) ids.push_back(to[id]);
    simplices.push_back(ids);
  }
  std::vector<std::string> ids;
  for (const auto& [from, name] : to) ids.push_back(name);
  const SimplicialComplex r(ids, simplices);
  std::map<std::string, std::string> vm;
  for (int v = 0; v < k.vertex_count(); ++v) vm[to[k.vertex_id(v)]] = to[k.vertex_id(g(v))];
  return {r, SimplicialMap::from_ids(r, r, vm)};
}

}  // namespace

TEST_CASE("chain complexes") {
  const SimplicialComplex point({"P"}, {{"P"}});
  const ChainComplexQ cp = chain_complex(point);
  CHECK(cp.top_degree() == 0);
  CHECK(cp.rank_in(0) == 1);

  const ChainComplexQ ch = chain_complex(fx("hexagon"));
  CHECK(ch.rank_in(0) == 6);
  CHECK(ch.rank_in(1) == 6);
  CHECK(rank(ch.boundary[1]) == 5);
  // Each column of the edge boundary is (-1, +1) in sorted vertex order.
  for (std::size_t c = 0; c < ch.boundary[1].cols(); ++c) {
    Rational sum;
    int nonzero = 0;
    for (std::size_t r = 0; r < ch.boundary[1].rows(); ++r) {
      sum += ch.boundary[1](r, c);
      if (!ch.boundary[1](r, c).is_zero()) ++nonzero;
    }
    CHECK(sum == 0);
    CHECK(nonzero == 2);
  }

  const ChainComplexQ cs = chain_complex(fx("s2"));
  CHECK(cs.rank_in(0) == 4);
  CHECK(cs.rank_in(1) == 6);
  CHECK(cs.rank_in(2) == 4);
  for (int k = 2; k <= cs.top_degree(); ++k) CHECK(cs.boundary[k - 1] * cs.boundary[k] == RationalMatrix(cs.rank_in(k - 2), cs.rank_in(k)));
}

TEST_CASE("betti numbers") {
  CHECK(betti(fx("hexagon")) == std::vector<int>{1, 1});
  CHECK(betti(fx("s2")) == std::vector<int>{1, 0, 1});
  CHECK(betti(fx("disk")) == std::vector<int>{1, 0, 0});

  const SimplicialComplex disk = fx("disk");
  CHECK(relative_betti(disk, vertices(disk, {})) == betti(disk));
  std::vector<int> boundary;
  for (int i = 0; i < disk.size(); ++i) {
    const auto ids = disk.simplex_ids(i);
    if (std::find(ids.begin(), ids.end(), "c") == ids.end()) boundary.push_back(i);
  }
  CHECK(relative_betti(disk, CellularSubset(disk, boundary)) == std::vector<int>{0, 0, 1});
  const CellularSubset open_edge(disk, {disk.index_of_ids({"v0", "v1"})});
  CHECK_THROWS_AS(relative_betti(disk, open_edge), Error);
}

TEST_CASE("betti numbers survive subdivision") {
  for (int i = 0; i < 40; ++i) {
    Rng rng = make_rng(13, 1, i);
    const SimplicialComplex k = random_complex(rng, 25);
    CHECK(betti(k) == betti(barycentric_subdivide(k).complex));
  }
}

TEST_CASE("chain maps") {
  const SimplicialComplex h = fx("hexagon");
  const ChainMapQ id = chain_map_of(SimplicialMap::identity(h));
  CHECK(id.degree[0] == RationalMatrix::identity(6));
  CHECK(id.degree[1] == RationalMatrix::identity(6));

  const ChainMapQ rot = chain_map_of(self_map("rotation"));
  for (std::size_t c = 0; c < 6; ++c) {
    int nonzero = 0;
    for (std::size_t r = 0; r < 6; ++r)
      if (!rot.degree[1](r, c).is_zero()) {
        ++nonzero;
        CHECK(abs(rot.degree[1](r, c)) == 1);
      }
    CHECK(nonzero == 1);
  }
  // v5 -> v0 reverses the orientation of the edge {v4,v5}.
  const int e45 = h.index_of_ids({"v4", "v5"});
  const int e05 = h.index_of_ids({"v0", "v5"});
  const auto pos = [&](int simplex) {
    const auto& b = id.source.basis[1];
    return static_cast<std::size_t>(std::find(b.begin(), b.end(), simplex) - b.begin());
  };
  CHECK(rot.degree[1](pos(e05), pos(e45)) == -1);
}

TEST_CASE("hopf trace") {
  CHECK(hopf_trace(chain_map_of(SimplicialMap::identity(fx("hexagon")))) == 0);
  CHECK(hopf_trace(chain_map_of(self_map("rotation"))) == 0);
  CHECK(hopf_trace(chain_map_of(SimplicialMap::identity(fx("s2")))) == 2);
}

TEST_CASE("homology traces of the fixture maps") {
  const ChainMapQ refl = chain_map_of(self_map("reflection"));
  CHECK(homology_trace(refl, 0) == 1);
  CHECK(homology_trace(refl, 1) == -1);
  CHECK(lefschetz_number(refl) == 2);

  const ChainMapQ dbl = chain_map_of(self_map("doubling"));
  CHECK(homology_trace(dbl, 0) == 1);
  CHECK(homology_trace(dbl, 1) == 2);
  CHECK(lefschetz_number(dbl) == -1);
  CHECK(hopf_trace(dbl) == -1);

  for (const auto& name : fixture_names()) {
    const ProblemFile p = fixture(name);
    if (!p.complex) continue;
    CAPTURE(name);
    CHECK(lefschetz_number(chain_map_of(SimplicialMap::identity(*p.complex))) == chi_c(CellularSubset::all(*p.complex)));
  }
}

TEST_CASE("homology trace does not depend on the basis") {
  const SimplicialMap refl = self_map("reflection").map();
  const Renamed r = rename(refl, {"z5", "z4", "z3", "z2", "z1", "z0"});
  CHECK(homology_trace(chain_map_of(r.map), 0) == 1);
  CHECK(homology_trace(chain_map_of(r.map), 1) == -1);

  for (int i = 0; i < 60; ++i) {
    Rng rng = make_rng(13, 2, i);
    const SimplicialComplex k = random_complex(rng, 30);
    const SimplicialMap g = random_map(rng, k, k);
    std::vector<std::string> names;
    for (int v = 0; v < k.vertex_count(); ++v) names.push_back("n" + std::to_string(v));
    std::shuffle(names.begin(), names.end(), rng);
    const Renamed r2 = rename(g, names);
    const ChainMapQ a = chain_map_of(g), b = chain_map_of(r2.map);
    for (int d = 0; d <= a.source.top_degree(); ++d) CHECK(homology_trace(a, d) == homology_trace(b, d));
  }
}

TEST_CASE("functoriality of induced maps") {
  for (int i = 0; i < 40; ++i) {
    Rng rng = make_rng(13, 3, i);
    const SimplicialComplex k = random_complex(rng, 30);
    const SimplicialMap g = random_map(rng, k, k), h = random_map(rng, k, k);
    const ChainMapQ direct = chain_map_of(compose(g, h));
    const ChainMapQ composite = compose(chain_map_of(g), chain_map_of(h));
    for (int d = 0; d <= direct.source.top_degree(); ++d) CHECK(homology_trace(direct, d) == homology_trace(composite, d));
  }
}

TEST_CASE("subdivided self-maps") {
  // Identity presented through sd: every subdivision vertex goes to a vertex of its carrier.
  const SimplicialComplex h = fx("hexagon");
  const Subdivision sd = barycentric_subdivide(h);
  std::map<std::string, std::string> vm;
  for (int v = 0; v < sd.complex.vertex_count(); ++v) {
    const int carrier = sd.carrier[sd.complex.index_of({v})];
    vm[sd.complex.vertex_id(v)] = h.vertex_id(h.simplex(carrier).front());
  }
  const SelfMapSpec f = SelfMapSpec::from_ids(h, 1, vm);
  CHECK(homology_trace(chain_map_of(f), 1) == 1);
  CHECK(lefschetz_number(chain_map_of(f)) == 0);
}

TEST_CASE("relative lefschetz numbers") {
  const SimplicialComplex disk = fx("disk");
  std::vector<int> boundary;
  for (int i = 0; i < disk.size(); ++i) {
    const auto ids = disk.simplex_ids(i);
    if (std::find(ids.begin(), ids.end(), "c") == ids.end()) boundary.push_back(i);
  }
  const SelfMapSpec id = SelfMapSpec::identity(disk);
  CHECK(relative_lefschetz_number(id, CellularSubset(disk, boundary)) == 1);

  const SelfMapSpec refl = self_map("reflection");
  const SimplicialComplex h = fx("hexagon");
  CHECK(relative_lefschetz_number(refl, CellularSubset(h, {})) == lefschetz_number(chain_map_of(refl)));
  // Additivity: L(K) - L(L) with L = {v0, v3}, both points fixed.
  CHECK(relative_lefschetz_number(refl, vertices(h, {"v0", "v3"})) == 2 - 2);
  CHECK_THROWS_AS(relative_lefschetz_number(refl, vertices(h, {"v1"})), Error);
  CHECK(pair_lefschetz_number(refl, CellularSubset::all(h), vertices(h, {"v0", "v3"})) == 0);
}
