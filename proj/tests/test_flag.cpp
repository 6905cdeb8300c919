#include "lefscalc/error.hpp"
#include "lefscalc/euler.hpp"
#include "lefscalc/flag.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

using namespace lefscalc;

namespace {

long long factorial(int n) { return n <= 1 ? 1 : n * factorial(n - 1); }

void compositions(int n, std::vector<int>& prefix, std::vector<std::vector<int>>& out) {
  if (n == 0) {
    out.push_back(prefix);
    return;
  }
  for (int k = 1; k <= n; ++k) {
    prefix.push_back(k);
    compositions(n - k, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

TEST_CASE("bruhat cells of flag manifolds") {
  const BruhatCellSpace f3 = flag_cellspace(3);
  REQUIRE(f3.cells.size() == 6);
  std::multiset<int> dims;
  for (const auto& c : f3.cells.cells()) dims.insert(c.dim);
  CHECK(dims == std::multiset<int>{0, 2, 2, 4, 4, 6});
  CHECK(chi_c(CellularSubset::all(f3.cells)) == 6);

  const BruhatCellSpace f2 = flag_cellspace(2);
  CHECK(f2.cells.size() == 2);
  CHECK(chi_c(CellularSubset::all(f2.cells)) == 2);

  for (int n = 1; n <= kMaxFlagRank; ++n) CHECK(chi_c(CellularSubset::all(flag_cellspace(n).cells)) == factorial(n));
  CHECK_THROWS_AS(flag_cellspace(0), Error);
  CHECK_THROWS_AS(flag_cellspace(kMaxFlagRank + 1), Error);
}

TEST_CASE("bruhat order against the subword criterion") {
  for (int n = 1; n <= 4; ++n) {
    std::vector<int> w(n);
    std::iota(w.begin(), w.end(), 1);
    std::vector<Permutation> all;
    do all.push_back(w);
    while (std::next_permutation(w.begin(), w.end()));
    for (const auto& u : all)
      for (const auto& v : all) {
        CAPTURE(permutation_id(u));
        CAPTURE(permutation_id(v));
        CHECK(bruhat_leq(u, v) == oracle::subword_leq(u, v));
      }
  }
}

TEST_CASE("permutations") {
  CHECK(parse_permutation("321", 3) == Permutation{3, 2, 1});
  CHECK(parse_permutation("(1,3)", 3) == Permutation{3, 2, 1});
  CHECK(parse_permutation("(1 2 3)", 3) == Permutation{2, 3, 1});
  CHECK(parse_permutation("()", 3) == Permutation{1, 2, 3});
  for (const char* bad : {"12", "112", "(1,4)", "abc", "(1,2"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(parse_permutation(bad, 3), Error);
  }
  CHECK(inversions({3, 2, 1}) == 3);
  CHECK(permutation_id({2, 1, 3}) == "213");
}

TEST_CASE("schubert subsets") {
  const BruhatCellSpace f3 = flag_cellspace(3);
  const CellularSubset v = schubert_complement(f3, {3, 2, 1});
  CHECK(v.size() == 5);
  CHECK(chi_c(v) == 5);

  const CellularSubset s = schubert_subset(f3, {2, 1, 3}, true);
  CHECK(s.labels() == std::vector<std::string>{"123", "213"});
  CHECK(chi_c(s) == 2);
  CHECK(schubert_subset(f3, {2, 1, 3}, false).size() == 1);

  // Closed Schubert varieties are unions of cells of even dimension.
  for (const auto& w : f3.permutations) {
    const CellularSubset x = schubert_subset(f3, w, true);
    CHECK(chi_c(x) == x.size());
  }
}

TEST_CASE("fixed loci of diagonal actions") {
  const CellSpace m = fixed_locus_cellspace(3, {2, 1});
  std::map<std::string, std::vector<int>> by_component;
  for (int i = 0; i < m.size(); ++i) by_component[m.cell(i).component].push_back(i);
  CHECK(by_component.size() == 3);
  for (const auto& [label, cells] : by_component) CHECK(chi_c(CellularSubset(m, cells)) == 2);
  CHECK(chi_c(CellularSubset::all(m)) == 6);

  for (int n = 1; n <= 6; ++n) {
    std::vector<int> prefix;
    std::vector<std::vector<int>> all;
    compositions(n, prefix, all);
    for (const auto& blocks : all) CHECK(chi_c(CellularSubset::all(fixed_locus_cellspace(n, blocks))) == factorial(n));
  }
  CHECK_THROWS_AS(fixed_locus_cellspace(3, {2, 2}), Error);
  CHECK_THROWS_AS(fixed_locus_cellspace(3, {3, 0}), Error);
}

TEST_CASE("intersection pattern model") {
  const IntersectionPattern pattern = flag3_default_pattern();
  const FlagReport r = run_flag_model(pattern);
  REQUIRE(r.components.size() == 3);

  const auto closed_b = std::find_if(r.components.begin(), r.components.end(),
                                     [](const FlagComponentResult& c) { return c.label == "L<E,P=E"; });
  REQUIRE(closed_b != r.components.end());
  CHECK(closed_b->contribution == GaussianRational(2));

  GaussianRational sum;
  for (const auto& c : r.components) {
    sum += c.contribution;
    CHECK(c.chi == 2);
    CHECK(c.contribution == GaussianRational(c.sign * c.chi_v_cap_m));
    REQUIRE(c.microlocal_index);
    CHECK(*c.microlocal_index == c.contribution);
    REQUIRE(c.sphere_trace);
    CHECK(GaussianRational(*c.sphere_trace) == c.contribution);
  }
  CHECK(r.total == sum);
  CHECK(r.lefschetz_on_v == chi_c(schubert_complement(flag_cellspace(3), {3, 2, 1})));
  CHECK(r.equal);

  IntersectionPattern reversed = pattern;
  std::reverse(reversed.components.begin(), reversed.components.end());
  for (auto& c : reversed.components) std::reverse(c.cells.begin(), c.cells.end());
  CHECK(run_flag_model(reversed).total == r.total);
}

TEST_CASE("inconsistent patterns") {
  IntersectionPattern bad = flag3_default_pattern();
  bad.components[0].chi = 3;
  CHECK_THROWS_AS(build_flag_model(bad), Error);
  IntersectionPattern dup = flag3_default_pattern();
  dup.components[1].label = dup.components[0].label;
  CHECK_THROWS_AS(build_flag_model(dup), Error);
}
