#include "lefscalc/error.hpp"
#include "lefscalc/euler.hpp"
#include "lefscalc/fixtures.hpp"
#include "lefscalc/flag.hpp"
#include "lefscalc/io.hpp"
#include "lefscalc/random_models.hpp"

#include <doctest.h>

using namespace lefscalc;

namespace {

SimplicialComplex fx(const std::string& name) { return *fixture(name).complex; }

}  // namespace

TEST_CASE("compactly supported Euler characteristic") {
  const SimplicialComplex disk = fx("disk");
  for (int i = 0; i < disk.size(); ++i) CHECK(chi_c(CellularSubset(disk, {i})) == (disk.dim(i) % 2 == 0 ? 1 : -1));
  CHECK(chi_c(CellularSubset::all(fx("hexagon"))) == 0);
  CHECK(chi_c(CellularSubset::all(*fixture("cp1").cells)) == 2);
  CHECK(chi_c(CellularSubset::all(fx("disk"))) == 1);
  CHECK(chi_c(CellularSubset::all(fx("s2"))) == 2);
}

TEST_CASE("euler integrals") {
  const CellSpace cp1 = *fixture("cp1").cells;
  CHECK(euler_integral(ConstructibleFunction::constant(cp1, 1)) == GaussianRational(2));

  const CellSpace m = fixed_locus_cellspace(3, {2, 1});
  CHECK(euler_integral(ConstructibleFunction::constant(m, 1)) == GaussianRational(6));

  const SimplicialComplex edge = *fixture("interval").complex;
  const GaussianRational c(3, -2);
  const ConstructibleFunction phi(edge, {{edge.index_of_ids({"a", "b"}), c}});
  CHECK(euler_integral(phi) == -c);
  CHECK(euler_integral(ConstructibleFunction(edge)) == GaussianRational());
}

TEST_CASE("restrict and combine") {
  const SimplicialComplex h = fx("hexagon");
  const ConstructibleFunction one = ConstructibleFunction::constant(h, 1);
  CHECK(restrict(one, CellularSubset(h, {})) == ConstructibleFunction(h));
  const CellularSubset s(h, {0, 1, 6});
  CHECK(euler_integral(restrict(one, s)) == GaussianRational(chi_c(s)));

  const CellularSubset v1(h, {0, 6}), v2(h, {6, 7});
  const auto sum = combine(1, ConstructibleFunction::indicator(v1), 1, ConstructibleFunction::indicator(v2));
  CHECK(sum(0) == GaussianRational(1));
  CHECK(sum(6) == GaussianRational(2));
  CHECK(sum(7) == GaussianRational(1));
  CHECK(sum(1) == GaussianRational());
  CHECK(sum.values().count(1) == 0);

  CHECK_THROWS_AS(combine(1, one, 1, ConstructibleFunction::constant(fx("s2"), 1)), Error);
  CHECK_THROWS_AS(ConstructibleFunction(h, {{99, 1}}), Error);
}

TEST_CASE("pushforward") {
  const SimplicialMap collapse = problem_map(fixture("collapse"));
  const auto pushed = pushforward(collapse, ConstructibleFunction::constant(collapse.source(), 1));
  CHECK(pushed(0) == GaussianRational(1));

  const SimplicialComplex h = fx("hexagon");
  Rng rng = make_rng(17, 0, 0);
  const ConstructibleFunction phi = random_function(rng, h);
  CHECK(pushforward(SimplicialMap::identity(h), phi) == phi);

  // Square onto an edge: brute-force the fibres.
  const SimplicialMap square = problem_map(fixture("square"));
  const auto one = ConstructibleFunction::constant(square.source(), 1);
  const auto base = pushforward(square, one);
  for (int t = 0; t < square.target().size(); ++t) {
    GaussianRational expected;
    for (int s = 0; s < square.source().size(); ++s)
      if (square.image(s) == t) expected += GaussianRational((square.source().dim(s) - square.target().dim(t)) % 2 == 0 ? 1 : -1);
    CHECK(base(t) == expected);
    CHECK(base(t) == GaussianRational(1));
  }
}

TEST_CASE("pullback") {
  const SimplicialComplex h = fx("hexagon");
  Rng rng = make_rng(17, 0, 1);
  const ConstructibleFunction phi = random_function(rng, h);
  CHECK(pullback(SimplicialMap::identity(h), phi) == phi);

  const SimplicialMap collapse = problem_map(fixture("collapse"));
  CHECK(pullback(collapse, ConstructibleFunction::constant(collapse.target(), 1)) ==
        ConstructibleFunction::constant(collapse.source(), 1));
}

TEST_CASE("fubini on random maps") {
  for (int i = 0; i < 100; ++i) {
    Rng rng = make_rng(17, 1, i);
    const SimplicialComplex a = random_complex(rng, 30), b = random_complex(rng, 20);
    const SimplicialMap g = random_map(rng, a, b);
    const ConstructibleFunction phi = random_function(rng, a);
    CHECK(euler_integral(pushforward(g, phi)) == euler_integral(phi));
  }
}

TEST_CASE("transport to a subdivision keeps integrals") {
  for (int i = 0; i < 40; ++i) {
    Rng rng = make_rng(17, 2, i);
    const SimplicialComplex k = random_complex(rng, 25);
    const ConstructibleFunction phi = random_function(rng, k);
    CHECK(euler_integral(transport_to_subdivision(phi, barycentric_subdivide(k))) == euler_integral(phi));
  }
}
