// Acceptance suite: one PASS/FAIL line per criterion, exact comparisons only.

#include "lefscalc/fixtures.hpp"
#include "lefscalc/homology.hpp"
#include "lefscalc/io.hpp"
#include "lefscalc/random_models.hpp"
#include "lefscalc/verify.hpp"
#include "oracles.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

using namespace lefscalc;

namespace {

constexpr std::uint64_t kSeed = 20240601;

struct Outcome {
  bool pass = true;
  std::string note;
  void expect(bool ok, const std::string& what) {
    if (!ok && pass) note = what;
    pass = pass && ok;
  }
};

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

std::string str(std::size_t i) { return std::to_string(i); }

Outcome hopf_trace_theorem() {
  Outcome o;
  for (int i = 0; i < 200; ++i) {
    Rng rng = make_rng(kSeed, 1, i);
    const SimplicialComplex k = random_complex(rng, 40);
    const SelfMapSpec f = random_self_map(rng, k, uniform(rng, 0, 1));
    const ChainMapQ c = chain_map_of(f);
    Rational alternating;
    for (int d = 0; d <= c.source.top_degree(); ++d) alternating += Rational(parity_sign(d)) * homology_trace(c, d);
    o.expect(hopf_trace(c) == alternating, "case " + str(i));
  }
  return o;
}

Outcome euler_identity() {
  Outcome o;
  for (const auto& name : fixture_names()) {
    const ProblemFile p = fixture(name);
    if (p.complex) {
      const long long chi = chi_c(CellularSubset::all(*p.complex));
      o.expect(lefschetz_number(chain_map_of(SelfMapSpec::identity(*p.complex))) == chi, name);
    }
  }
  for (int n = 1; n <= 6; ++n) {
    o.expect(chi_c(CellularSubset::all(flag_cellspace(n).cells)) == factorial(n), "flag " + str(n));
    std::vector<int> prefix;
    std::vector<std::vector<int>> all;
    compositions(n, prefix, all);
    for (const auto& blocks : all)
      o.expect(chi_c(CellularSubset::all(fixed_locus_cellspace(n, blocks))) == factorial(n), "fixed locus n=" + str(n));
  }
  return o;
}

Outcome localization() {
  Outcome o;
  struct Case {
    const char* name;
    Rational global;
    std::vector<int> signs;
    std::vector<Rational> integrals;
  };
  const Case cases[] = {{"s2", 2, {1}, {2}}, {"reflection", 2, {1, 1}, {1, 1}}, {"doubling", -1, {-1}, {1}}};
  for (const auto& c : cases) {
    const TracedProblem p = problem_traced(fixture(c.name));
    const Rational global = global_trace(p);  // homology
    const auto comps = fixed_components(p);
    GaussianRational sum;
    o.expect(comps.size() == c.signs.size(), std::string(c.name) + " components");
    for (std::size_t i = 0; i < comps.size() && i < c.signs.size(); ++i) {
      const auto s = signed_local_contribution(p, static_cast<int>(i));  // Euler calculus
      o.expect(s.sign == c.signs[i] && s.integral == GaussianRational(c.integrals[i]), std::string(c.name) + " local");
      sum += s.value;
    }
    o.expect(global == c.global && sum == GaussianRational(global), c.name);
  }
  const Hyperbolicity h = hyperbolicity(normal_data_for(problem_traced(fixture("doubling")), 0).matrix);
  o.expect(h.meets_r_geq_1 && !h.one_is_eigenvalue, "doubling is expanding");
  return o;
}

Outcome index_theorem() {
  Outcome o;
  for (int i = 0; i < 300; ++i) {
    Rng rng = make_rng(kSeed, 4, i);
    const SimplicialComplex k = random_complex(rng, 40);
    const ConstructibleFunction phi = random_function(rng, k);
    const GaussianRational integral = euler_integral(phi);
    for (int j = 0; j < 5; ++j) o.expect(index_sum(phi, random_generic_functional(rng, k)) == integral, "case " + str(i));
  }
  return o;
}

Outcome morse_oracle() {
  Outcome o;
  const ProblemFile p = fixture("interval");
  const SimplicialComplex& k = *p.complex;
  const ConstructibleFunction one = ConstructibleFunction::constant(k, 1);
  const VertexFunctional up = problem_functional(p);
  o.expect(up.at("a") < up.at("b"), "interval functional increases");
  // Relative stalk traces by hand: H*(closed star, part strictly below) at each vertex.
  const std::map<std::string, GaussianRational> increasing{{"a", 1}, {"b", 0}}, decreasing{{"a", 0}, {"b", 1}};
  for (const auto& [v, m] : increasing) o.expect(morse_multiplicity(one, v, up) == m, "increasing " + v);
  for (const auto& [v, m] : decreasing) o.expect(morse_multiplicity(one, v, up.negated()) == m, "decreasing " + v);
  o.expect(cc_table(one, up).entries == increasing, "table");
  return o;
}

Outcome fubini() {
  Outcome o;
  for (int i = 0; i < 300; ++i) {
    Rng rng = make_rng(kSeed, 6, i);
    const SimplicialComplex a = random_complex(rng, 40), b = random_complex(rng, 40);
    const SimplicialMap g = random_map(rng, a, b);
    const ConstructibleFunction phi = random_function(rng, a);
    o.expect(euler_integral(pushforward(g, phi)) == euler_integral(phi), "fubini " + str(i));
  }
  for (int i = 0; i < 100; ++i) {
    Rng rng = make_rng(kSeed, 7, i);
    const SimplicialComplex a = random_complex(rng, 30), b = random_complex(rng, 30), c = random_complex(rng, 30);
    const SimplicialMap h = random_map(rng, a, b), g = random_map(rng, b, c);
    const ConstructibleFunction phi = random_function(rng, a);
    o.expect(pushforward(compose(g, h), phi) == pushforward(g, pushforward(h, phi)), "functoriality " + str(i));
  }
  return o;
}

Outcome linearity() {
  Outcome o;
  for (int i = 0; i < 100; ++i) {
    Rng rng = make_rng(kSeed, 8, i);
    const SimplicialComplex k = random_complex(rng, 40);
    const ConstructibleFunction phi = random_function(rng, k), psi = random_function(rng, k);
    const GaussianRational a = random_gaussian(rng), b = random_gaussian(rng);
    const VertexFunctional ell = random_generic_functional(rng, k);
    const ConstructibleFunction mix = combine(a, phi, b, psi);
    const auto t = cc_table(mix, ell), tp = cc_table(phi, ell), tq = cc_table(psi, ell);
    for (const auto& [v, m] : t.entries) o.expect(m == a * tp.entries.at(v) + b * tq.entries.at(v), "table " + str(i));
    o.expect(euler_integral(mix) == a * euler_integral(phi) + b * euler_integral(psi), "integral " + str(i));
    o.expect(index_sum(mix, ell) == a * index_sum(phi, ell) + b * index_sum(psi, ell), "index sum " + str(i));
  }
  return o;
}

Outcome eigenvalue_predicates() {
  Outcome o;
  for (int i = 0; i < 200; ++i) {
    Rng rng = make_rng(kSeed, 9, i);
    const int n = uniform(rng, 1, 4);
    const RationalMatrix a = random_matrix(rng, n);
    const Hyperbolicity h = hyperbolicity(a);
    const Rational d = oracle::cofactor_det(RationalMatrix::identity(n) - a);
    const bool meets = oracle::count_roots_geq(oracle::char_poly(a), 1) > 0;
    o.expect(h.one_is_eigenvalue == d.is_zero(), "det " + str(i));
    o.expect(h.meets_r_geq_1 == meets, "real root >= 1, case " + str(i));
    o.expect(h.sign == d.sign(), "sign " + str(i));
  }
  return o;
}

Outcome flag_example() {
  Outcome o;
  const IntersectionPattern pattern = flag3_default_pattern();
  const FlagReport r = run_flag_model(pattern);
  GaussianRational sum;
  bool found = false;
  for (const auto& c : r.components) {
    sum += c.contribution;
    if (c.label == "L<E,P=E") {
      found = true;
      o.expect(c.contribution == GaussianRational(2), "closure of {b=c=0} contributes 2");
    }
    o.expect(c.microlocal_index && *c.microlocal_index == c.contribution, c.label + " microlocal index");
  }
  o.expect(found, "component L<E,P=E present");
  o.expect(r.total == sum, "total is the sum of components");
  // Independent side: chi_c(V) from the Bruhat cells.
  const long long chi_v = chi_c(schubert_complement(flag_cellspace(3), parse_permutation("(1,3)", 3)));
  o.expect(r.total == GaussianRational(chi_v), "total equals chi_c(V)");

  IntersectionPattern shuffled = pattern;
  Rng rng = make_rng(kSeed, 10, 0);
  for (int t = 0; t < 5; ++t) {
    std::shuffle(shuffled.components.begin(), shuffled.components.end(), rng);
    for (auto& c : shuffled.components) std::shuffle(c.cells.begin(), c.cells.end(), rng);
    o.expect(run_flag_model(shuffled).total == r.total, "stable under reordering");
  }
  std::cout << "  example total " << r.total.to_string() << ", chi_c(V) " << chi_v << "\n";
  return o;
}

Outcome determinism() {
  Outcome o;
  std::string reference;
  for (int threads : {1, 2, 4, 1}) {
    VerifyOptions v;
    v.seed = 42;
    v.threads = threads;
    v.cases = 20;
    const VerifyReport r = run_verify(v);
    const std::string text = format_verify(r) + to_json(r).dump();
    if (reference.empty()) reference = text;
    o.expect(text == reference, "threads " + std::to_string(threads));
    o.expect(r.all_pass(), "verify passes");
  }
  return o;
}

}  // namespace

int main() {
  const auto start = std::chrono::steady_clock::now();
  const std::pair<const char*, std::function<Outcome()>> criteria[] = {
      {"Hopf trace theorem on 200 random self-maps", hopf_trace_theorem},
      {"identity traces, n! for flag manifolds and fixed loci", euler_identity},
      {"localization on s2, reflection, doubling", localization},
      {"index theorem on 300 random triples x 5 functionals", index_theorem},
      {"Morse multiplicities on the interval", morse_oracle},
      {"Fubini on 300 maps, functoriality on 100 pairs", fubini},
      {"linearity on 100 random pairs", linearity},
      {"eigenvalue predicates on 200 random matrices", eigenvalue_predicates},
      {"flag manifold example end to end", flag_example},
      {"verify is byte-identical across runs and threads", determinism},
  };
  int failed = 0;
  int n = 0;
  for (const auto& [name, run] : criteria) {
    ++n;
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.note = std::string("exception: ") + e.what();
    }
    std::cout << "criterion " << n << ": " << (o.pass ? "PASS" : "FAIL") << "  " << name;
    if (!o.pass) std::cout << " (" << o.note << ")";
    std::cout << std::endl;
    if (!o.pass) ++failed;
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::cout << (n - failed) << "/" << n << " criteria passed in " << std::fixed;
  std::cout.precision(2);
  std::cout << seconds << " s" << std::endl;
  return failed == 0 ? 0 : 1;
}
