#include "lefscalc/error.hpp"
#include "lefscalc/fixtures.hpp"
#include "lefscalc/homology.hpp"
#include "lefscalc/io.hpp"
#include "lefscalc/microlocal.hpp"
#include "lefscalc/random_models.hpp"

#include <doctest.h>

#include <functional>

using namespace lefscalc;

namespace {

SimplicialComplex fx(const std::string& name) { return *fixture(name).complex; }

VertexFunctional ell_of(const std::string& name) { return problem_functional(fixture(name)); }

/// Multiplicity of 1_K at v from the link: 1 - chi(lower link), with chi taken
/// from Betti numbers of the lower link as a complex of its own.
Rational lower_link_oracle(const SimplicialComplex& k, const std::string& v, const VertexFunctional& ell) {
  const SimplicialComplex l = link(k, v);
  std::vector<std::string> ids;
  std::vector<std::vector<std::string>> simplices;
  for (int i = 0; i < l.vertex_count(); ++i)
    if (ell.at(l.vertex_id(i)) < ell.at(v)) ids.push_back(l.vertex_id(i));
  for (int i = 0; i < l.size(); ++i) {
    bool lower = true;
    for (const auto& id : l.simplex_ids(i)) lower = lower && ell.at(id) < ell.at(v);
    if (lower) simplices.push_back(l.simplex_ids(i));
  }
  if (ids.empty()) return 1;
  const auto b = betti(SimplicialComplex(ids, simplices));
  long long chi = 0;
  for (std::size_t d = 0; d < b.size(); ++d) chi += (d % 2 == 0 ? 1 : -1) * b[d];
  return Rational(1 - chi);
}

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error thrown");
  return ErrorKind::InvalidInput;
}

}  // namespace

TEST_CASE("genericity") {
  CHECK(genericity_check(fx("hexagon"), ell_of("hexagon")).empty());
  const SimplicialComplex edge = fx("interval");
  VertexFunctional tie{{{"a", 1}, {"b", 1}}};
  CHECK(genericity_check(edge, tie) == std::vector<std::string>{"a,b"});
  VertexFunctional flat;
  const SimplicialComplex h = fx("hexagon");
  for (int v = 0; v < h.vertex_count(); ++v) flat.values[h.vertex_id(v)] = 0;
  CHECK(genericity_check(h, flat).size() == 6);
  VertexFunctional partial{{{"a", 1}}};
  CHECK(genericity_check(edge, partial).size() == 1);
}

TEST_CASE("morse multiplicities") {
  const SimplicialComplex point = fx("point");
  CHECK(morse_multiplicity(ConstructibleFunction::constant(point, 1), "P", ell_of("point")) == GaussianRational(1));

  const SimplicialComplex edge = fx("interval");
  const auto one = ConstructibleFunction::constant(edge, 1);
  const VertexFunctional up = ell_of("interval");
  CHECK(morse_multiplicity(one, "a", up) == GaussianRational(1));
  CHECK(morse_multiplicity(one, "b", up) == GaussianRational(0));
  CHECK(morse_multiplicity(one, "a", up.negated()) == GaussianRational(0));
  CHECK(morse_multiplicity(one, "b", up.negated()) == GaussianRational(1));

  const SimplicialComplex h = fx("hexagon");
  const VertexFunctional height = ell_of("hexagon");
  const auto table = cc_table(ConstructibleFunction::constant(h, 1), height);
  CHECK(table.entries.at("v0") == GaussianRational(1));
  CHECK(table.entries.at("v3") == GaussianRational(-1));
  for (const auto& v : {"v1", "v2", "v4", "v5"}) CHECK(table.entries.at(v) == GaussianRational(0));

  const CellSpace cp1 = *fixture("cp1").cells;
  CHECK(kind_of([&] { morse_multiplicity(ConstructibleFunction::constant(cp1, 1), "pt", up); }) ==
        ErrorKind::CellSpaceUnsupported);
}

TEST_CASE("multiplicities against the lower link") {
  for (const auto& name : {"hexagon", "disk", "s2", "12gon", "interval"}) {
    const SimplicialComplex k = fx(name);
    const VertexFunctional ell = ell_of(name);
    const auto table = cc_table(ConstructibleFunction::constant(k, 1), ell);
    for (int v = 0; v < k.vertex_count(); ++v) {
      CAPTURE(k.vertex_id(v));
      CHECK(table.entries.at(k.vertex_id(v)) == GaussianRational(lower_link_oracle(k, k.vertex_id(v), ell)));
    }
  }
  for (int i = 0; i < 60; ++i) {
    Rng rng = make_rng(19, 1, i);
    const SimplicialComplex k = random_complex(rng, 30);
    const VertexFunctional ell = random_generic_functional(rng, k);
    const auto table = cc_table(ConstructibleFunction::constant(k, 1), ell);
    for (int v = 0; v < k.vertex_count(); ++v)
      CHECK(table.entries.at(k.vertex_id(v)) == GaussianRational(lower_link_oracle(k, k.vertex_id(v), ell)));
  }
}

TEST_CASE("degenerate functionals") {
  const SimplicialComplex edge = fx("interval");
  VertexFunctional tie{{{"a", 1}, {"b", 1}}};
  try {
    cc_table(ConstructibleFunction::constant(edge, 1), tie);
    FAIL("expected Degenerate");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Degenerate);
    CHECK(e.details() == std::vector<std::string>{"a,b"});
  }
}

TEST_CASE("characteristic cycle tables") {
  const auto pt = cc_table(ConstructibleFunction::constant(fx("point"), 1), ell_of("point"));
  CHECK(pt.entries == std::map<std::string, GaussianRational>{{"P", 1}});

  const auto iv = cc_table(ConstructibleFunction::constant(fx("interval"), 1), ell_of("interval"));
  CHECK(iv.entries == std::map<std::string, GaussianRational>{{"a", 1}, {"b", 0}});
  CHECK(iv.total() == GaussianRational(1));

  for (int i = 0; i < 40; ++i) {
    Rng rng = make_rng(19, 2, i);
    const SimplicialComplex k = random_complex(rng);
    const ConstructibleFunction phi = random_function(rng, k), psi = random_function(rng, k);
    const VertexFunctional ell = random_generic_functional(rng, k);
    const auto lhs = cc_table(combine(2, phi, 1, psi), ell);
    const auto a = cc_table(phi, ell), b = cc_table(psi, ell);
    for (const auto& [v, m] : lhs.entries) CHECK(m == GaussianRational(2) * a.entries.at(v) + b.entries.at(v));
  }
}

TEST_CASE("index sums") {
  CHECK(index_sum(ConstructibleFunction::constant(fx("hexagon"), 1), ell_of("hexagon")) == GaussianRational(0));
  CHECK(index_sum(ConstructibleFunction::constant(fx("interval"), 1), ell_of("interval")) == GaussianRational(1));
  const SimplicialComplex edge = fx("interval");
  const ConstructibleFunction zero_integral(edge, {{edge.index_of_ids({"a"}), GaussianRational(2, 1)},
                                                   {edge.index_of_ids({"a", "b"}), GaussianRational(2, 1)}});
  CHECK(index_sum(zero_integral, ell_of("interval")) == GaussianRational(0));

  for (int i = 0; i < 100; ++i) {
    Rng rng = make_rng(19, 3, i);
    const SimplicialComplex k = random_complex(rng);
    const ConstructibleFunction phi = random_function(rng, k);
    const GaussianRational expected = euler_integral(phi);
    for (int j = 0; j < 3; ++j) CHECK(index_sum(phi, random_generic_functional(rng, k)) == expected);
  }
}

TEST_CASE("lefschetz cycle tables") {
  const TracedProblem d = problem_traced(fixture("doubling"));
  const auto t = lefschetz_cycle_table(d, 0, ell_of("doubling"));
  CHECK(t.entries == std::map<std::string, GaussianRational>{{"v0", -1}});
  CHECK(t.sign == -1);
  CHECK(t.regime == Regime::NonCharacteristic);
  CHECK(microlocal_index(d, 0, ell_of("doubling")) == signed_local_contribution(d, 0).value);

  const TracedProblem s2 = problem_traced(fixture("s2"));
  const auto id = lefschetz_cycle_table(s2, 0, ell_of("s2"));
  CHECK(id.sign == 1);
  CHECK(id.entries == cc_table(ConstructibleFunction::constant(fx("s2"), 1), ell_of("s2")).entries);
  CHECK(microlocal_index(s2, 0, ell_of("s2")) == GaussianRational(2));

  const TracedProblem refl = problem_traced(fixture("reflection"));
  CHECK(lefschetz_cycle_table(refl, 0, ell_of("reflection")).entries == std::map<std::string, GaussianRational>{{"v0", 1}});
  CHECK(lefschetz_cycle_table(refl, 1, ell_of("reflection")).entries == std::map<std::string, GaussianRational>{{"v3", 1}});
}
