#include "lefscalc/verify.hpp"

#include "lefscalc/error.hpp"
#include "lefscalc/fixtures.hpp"
#include "lefscalc/homology.hpp"
#include "lefscalc/random_models.hpp"

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>
#include <thread>

namespace lefscalc {

namespace {

using Outcome = std::optional<std::string>;
using RandomCheck = std::function<Outcome(Rng&)>;
using FixedCheck = std::function<Outcome()>;

template <class F>
void parallel_for(int n, int threads, F f) {
  threads = std::max(1, std::min(threads, n));
  if (threads == 1) {
    for (int i = 0; i < n; ++i) f(i);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  for (int t = 0; t < threads; ++t)
    pool.emplace_back([&] {
      for (int i = next++; i < n; i = next++) f(i);
    });
  for (auto& th : pool) th.join();
}

std::string describe(const std::exception& e) {
  if (auto err = dynamic_cast<const Error*>(&e)) {
    std::string s = std::string(to_string(err->kind())) + ": " + err->what();
    for (const auto& d : err->details()) s += "; " + d;
    return s;
  }
  return e.what();
}

template <class F>
Outcome guarded(F&& f) {
  try {
    return f();
  } catch (const std::exception& e) {
    return "unexpected error: " + describe(e);
  }
}

PropertyResult random_property(const std::string& name, std::uint64_t stream, const VerifyOptions& o,
                               const RandomCheck& check) {
  std::vector<Outcome> outcomes(static_cast<std::size_t>(o.cases));
  parallel_for(o.cases, o.threads, [&](int i) {
    Rng rng = make_rng(o.seed, stream, static_cast<std::uint64_t>(i));
    outcomes[i] = guarded([&] { return check(rng); });
  });
  PropertyResult r{name, o.cases, {}};
  for (int i = 0; i < o.cases; ++i)
    if (outcomes[i]) r.failures.push_back("case " + std::to_string(i) + ": " + *outcomes[i]);
  return r;
}

PropertyResult fixed_property(const std::string& name, const std::vector<std::pair<std::string, FixedCheck>>& items,
                              int threads) {
  std::vector<Outcome> outcomes(items.size());
  parallel_for(static_cast<int>(items.size()), threads, [&](int i) { outcomes[i] = guarded(items[i].second); });
  PropertyResult r{name, static_cast<int>(items.size()), {}};
  for (std::size_t i = 0; i < items.size(); ++i)
    if (outcomes[i]) r.failures.push_back(items[i].first + ": " + *outcomes[i]);
  return r;
}

Outcome expect(bool ok, const std::string& what) { return ok ? Outcome() : Outcome(what); }

std::string str(const GaussianRational& z) { return z.to_string(); }

// --- oracles ----------------------------------------------------------------

// Sign variations of the coefficients of (1+x)^d p((a + b x)/(1 + x)); bounds
// the number of roots in (a, b) and is exact when it is 0 or 1.
int descartes_variations(const RationalPolynomial& p, const Rational& a, const Rational& b) {
  const int d = p.degree();
  RationalPolynomial total;
  const RationalPolynomial num(std::vector<Rational>{a, b});
  const RationalPolynomial den(std::vector<Rational>{1, 1});
  for (int k = 0; k <= d; ++k) {
    RationalPolynomial term(std::vector<Rational>{p.coefficient(static_cast<std::size_t>(k))});
    for (int i = 0; i < k; ++i) term = term * num;
    for (int i = k; i < d; ++i) term = term * den;
    total = total + term;
  }
  int changes = 0, last = 0;
  for (const auto& c : total.coefficients()) {
    if (c.is_zero()) continue;
    if (last != 0 && c.sign() != last) ++changes;
    last = c.sign();
  }
  return changes;
}

int isolate(const RationalPolynomial& p, const Rational& a, const Rational& b, int depth) {
  const int v = descartes_variations(p, a, b);
  if (v <= 1) return v;
  if (depth > 200) throw Error(ErrorKind::InvalidInput, "root isolation did not terminate");
  const Rational m = (a + b) / Rational(2);
  return (p(m).is_zero() ? 1 : 0) + isolate(p, a, m, depth + 1) + isolate(p, m, b, depth + 1);
}

// Distinct real roots in [c, inf) by bisection with Descartes' rule.
std::size_t descartes_count_geq(const RationalPolynomial& p, const Rational& c) {
  RationalPolynomial q = square_free_part(p);
  std::size_t count = 0;
  if (q(c).is_zero()) {
    ++count;
    q = divide(q, RationalPolynomial(std::vector<Rational>{-c, 1})).quotient;
  }
  if (q.degree() <= 0) return count;
  Rational bound = 1;
  for (int k = 0; k < q.degree(); ++k) bound += abs(q.coefficient(static_cast<std::size_t>(k)) / q.leading());
  const Rational hi = bound + abs(c) + 1;
  return count + static_cast<std::size_t>(isolate(q, c, hi, 0));
}

// Bruhat order from all subwords of one reduced word.
std::set<Permutation> bruhat_interval_by_subwords(const Permutation& w) {
  Permutation x = w;
  std::vector<std::size_t> word;
  for (bool swapped = true; swapped;) {
    swapped = false;
    for (std::size_t i = 0; i + 1 < x.size(); ++i)
      if (x[i] > x[i + 1]) {
        std::swap(x[i], x[i + 1]);
        word.push_back(i);
        swapped = true;
      }
  }
  std::reverse(word.begin(), word.end());
  std::set<Permutation> out;
  for (std::uint32_t mask = 0; mask < (1u << word.size()); ++mask) {
    Permutation u(w.size());
    std::iota(u.begin(), u.end(), 1);
    for (std::size_t j = 0; j < word.size(); ++j)
      if (mask & (1u << j)) std::swap(u[word[j]], u[word[j] + 1]);
    out.insert(u);
  }
  return out;
}

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

// --- helpers ----------------------------------------------------------------

long long euler_characteristic(const SimplicialComplex& k) { return chi_c(CellularSubset::all(k)); }

// sd K -> K sending each barycenter to the first vertex of its carrier.
std::vector<int> first_vertex_retraction(const SubdivisionTower& tower) {
  const SimplicialComplex& top = tower.top();
  std::vector<int> out;
  for (int w = 0; w < top.vertex_count(); ++w)
    out.push_back(tower.base().simplex(tower.base_carrier(top.index_of({w}))).front());
  return out;
}

std::vector<Rational> homology_traces(const ChainMapQ& c) {
  std::vector<Rational> out;
  for (int k = 0; k <= c.source.top_degree(); ++k) out.push_back(homology_trace(c, k));
  return out;
}

std::vector<std::string> simplicial_fixture_names() {
  std::vector<std::string> out;
  for (const auto& n : fixture_names())
    if (fixture(n).complex) out.push_back(n);
  return out;
}

template <class T, class Print, class Parse>
Outcome round_trip(const T& value, Print print, Parse parse) {
  const Json j = print(value);
  const T back = parse(Json::parse(j.dump()));
  if (!(back == value)) return "value changed after print/parse: " + j.dump();
  if (print(back).dump() != j.dump()) return "printed form changed after print/parse";
  return std::nullopt;
}

// --- the suite ----------------------------------------------------------------

std::vector<PropertyResult> run_all(const VerifyOptions& o) {
  std::vector<PropertyResult> out;
  std::uint64_t stream = 0;
  auto random = [&](const std::string& name, const RandomCheck& check) {
    out.push_back(random_property(name, ++stream, o, check));
  };
  auto fixed = [&](const std::string& name, const std::vector<std::pair<std::string, FixedCheck>>& items) {
    ++stream;
    out.push_back(fixed_property(name, items, o.threads));
  };

  // core-complex
  random("subdivision preserves the euler characteristic", [](Rng& rng) -> Outcome {
    const auto k = random_complex(rng);
    const auto sd = barycentric_subdivide(k);
    return expect(euler_characteristic(k) == euler_characteristic(sd.complex),
                  "chi " + std::to_string(euler_characteristic(k)) + " vs " +
                      std::to_string(euler_characteristic(sd.complex)));
  });
  random("stars are locally closed", [](Rng& rng) -> Outcome {
    const auto k = random_complex(rng);
    for (int v = 0; v < k.vertex_count(); ++v)
      if (!is_locally_closed(star(k, v))) return "star of " + k.vertex_id(v);
    return std::nullopt;
  });
  random("components partition the cells", [](Rng& rng) -> Outcome {
    const auto k = random_complex(rng);
    std::vector<int> cells;
    for (int s = 0; s < k.size(); ++s)
      if (uniform(rng, 0, 2)) cells.push_back(s);
    const CellularSubset s(k, cells);
    std::vector<int> seen;
    std::vector<std::vector<std::string>> labels;
    for (const auto& c : connected_components(s)) {
      seen.insert(seen.end(), c.cells().begin(), c.cells().end());
      labels.push_back(c.labels());
    }
    std::sort(seen.begin(), seen.end());
    if (seen != cells) return std::string("components are not a partition");
    // Same complex from shuffled input lists.
    std::vector<std::string> ids;
    for (int v = 0; v < k.vertex_count(); ++v) ids.push_back(k.vertex_id(v));
    std::vector<std::vector<std::string>> simplices;
    for (int i = 0; i < k.size(); ++i) {
      auto sx = k.simplex_ids(i);
      std::shuffle(sx.begin(), sx.end(), rng);
      simplices.push_back(sx);
    }
    std::shuffle(ids.begin(), ids.end(), rng);
    std::shuffle(simplices.begin(), simplices.end(), rng);
    const SimplicialComplex shuffled(ids, simplices);
    if (!(shuffled == k)) return std::string("canonical order depends on input order");
    std::vector<int> again;
    for (const auto& l : s.labels()) again.push_back(cell_index(shuffled, l));
    std::sort(again.begin(), again.end());
    std::vector<std::vector<std::string>> labels2;
    for (const auto& c : connected_components(CellularSubset(shuffled, again))) labels2.push_back(c.labels());
    return expect(labels == labels2, "components depend on input order");
  });

  // exact-arith
  random("det is multiplicative and rank plus nullity is the column count", [](Rng& rng) -> Outcome {
    const int n = uniform(rng, 1, 4);
    RationalMatrix a(n, n), b(n, n);
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) {
        a(r, c) = uniform(rng, -9, 9);
        b(r, c) = uniform(rng, -9, 9);
      }
    if (det(a) * det(b) != det(a * b)) return std::string("det(A)det(B) != det(AB)");
    if (rank(a) + null_space(a).cols() != a.cols()) return std::string("rank + nullity != cols");
    std::vector<std::size_t> rows(n), cols(n);
    std::iota(rows.begin(), rows.end(), 0);
    std::iota(cols.begin(), cols.end(), 0);
    std::shuffle(rows.begin(), rows.end(), rng);
    const RationalMatrix pa = a.select(rows, cols);
    if (row_echelon(pa).reduced != row_echelon(a).reduced) return std::string("echelon form depends on row order");
    if (abs(det(pa)) != abs(det(a))) return std::string("|det| depends on row order");
    const RationalMatrix conj = a.select(rows, rows);
    return expect(char_poly(conj) == char_poly(a), "char_poly not invariant under simultaneous permutation");
  });
  random("sturm root counts match descartes bisection", [](Rng& rng) -> Outcome {
    const int degree = uniform(rng, 3, 4);
    std::vector<Rational> coeffs;
    for (int k = 0; k < degree; ++k) coeffs.push_back(uniform(rng, -9, 9));
    int lead = 0;
    while (lead == 0) lead = uniform(rng, -9, 9);
    coeffs.push_back(lead);
    RationalPolynomial p(coeffs);
    // Sometimes plant a root at 1, or a double root.
    if (uniform(rng, 0, 3) == 0) p = p * RationalPolynomial(std::vector<Rational>{-1, 1});
    if (uniform(rng, 0, 3) == 0) {
      const Rational r(uniform(rng, -3, 3), uniform(rng, 1, 2));
      p = p * RationalPolynomial(std::vector<Rational>{-r, 1}) * RationalPolynomial(std::vector<Rational>{-r, 1});
    }
    const Rational c = uniform(rng, 0, 2) ? Rational(1) : random_rational(rng);
    const auto got = count_real_roots_geq(p, c);
    const auto want = descartes_count_geq(p, c);
    return expect(got == want, p.to_string() + " from " + c.to_string() + ": " + std::to_string(got) + " vs " +
                                   std::to_string(want));
  });

  // homology
  random("hopf trace theorem", [](Rng& rng) -> Outcome {
    const auto k = random_complex(rng);
    const int level = k.size() <= 12 && uniform(rng, 0, 2) == 0 ? 1 : 0;
    const auto f = random_self_map(rng, k, level);
    const auto c = chain_map_of(f);
    const Rational hopf = hopf_trace(c);
    const Rational lef = lefschetz_number(c);
    return expect(hopf == lef, "hopf " + hopf.to_string() + " vs homology " + lef.to_string());
  });
  {
    std::vector<std::pair<std::string, FixedCheck>> items;
    for (const auto& name : simplicial_fixture_names())
      items.emplace_back(name, [name]() -> Outcome {
        const auto k = *fixture(name).complex;
        const Rational l = lefschetz_number(chain_map_of(SelfMapSpec::identity(k)));
        if (l != Rational(euler_characteristic(k))) return "L(id) = " + l.to_string();
        if (betti(k) != betti(barycentric_subdivide(k).complex)) return std::string("betti numbers change under sd");
        return std::nullopt;
      });
    fixed("lefschetz number of the identity is the euler characteristic", items);
  }
  random("homology and lefschetz numbers survive subdivision", [](Rng& rng) -> Outcome {
    const auto k = random_complex(rng, 20);
    if (betti(k) != betti(barycentric_subdivide(k).complex)) return std::string("betti numbers change under sd");
    const auto f = random_self_map(rng, k, 0);
    const SubdivisionTower tower(k, 1);
    std::vector<int> lifted;
    for (int r : first_vertex_retraction(tower)) lifted.push_back(f.map()(r));
    const SelfMapSpec g(k, 1, lifted);
    const Rational a = lefschetz_number(chain_map_of(f)), b = lefschetz_number(chain_map_of(g));
    return expect(a == b, "L(f) " + a.to_string() + " vs L(f o sd) " + b.to_string());
  });
  random("chain maps are functorial", [](Rng& rng) -> Outcome {
    const auto k = random_complex(rng, 25);
    const auto g = random_map(rng, k, k);
    const auto h = random_map(rng, k, k);
    const auto direct = chain_map_of(compose(g, h));
    const auto composite = compose(chain_map_of(g), chain_map_of(h));
    if (direct.degree != composite.degree) return std::string("chain matrices differ");
    return expect(homology_traces(direct) == homology_traces(composite), "homology traces differ");
  });

  // euler-calculus
  random("fubini for pushforward", [](Rng& rng) -> Outcome {
    const auto k1 = random_complex(rng);
    const auto k2 = random_complex(rng);
    const auto g = random_map(rng, k1, k2);
    const auto phi = random_function(rng, k1);
    const auto a = euler_integral(phi), b = euler_integral(pushforward(g, phi));
    return expect(a == b, str(a) + " vs " + str(b));
  });
  random("pushforward is functorial", [](Rng& rng) -> Outcome {
    const auto k1 = random_complex(rng), k2 = random_complex(rng), k3 = random_complex(rng);
    const auto h = random_map(rng, k1, k2);
    const auto g = random_map(rng, k2, k3);
    const auto phi = random_function(rng, k1);
    return expect(pushforward(compose(g, h), phi) == pushforward(g, pushforward(h, phi)),
                  "(g h)_* != g_* h_*");
  });
  random("integrals, pushforwards and tables are linear", [](Rng& rng) -> Outcome {
    const auto k = random_complex(rng);
    const auto target = random_complex(rng);
    const auto phi = random_function(rng, k), psi = random_function(rng, k);
    const auto a = random_gaussian(rng), b = random_gaussian(rng);
    const auto mix = combine(a, phi, b, psi);
    if (euler_integral(mix) != a * euler_integral(phi) + b * euler_integral(psi))
      return std::string("euler integral not linear");
    const auto g = random_map(rng, k, target);
    if (pushforward(g, mix) != combine(a, pushforward(g, phi), b, pushforward(g, psi)))
      return std::string("pushforward not linear");
    const auto ell = random_generic_functional(rng, k);
    const auto tm = cc_table(mix, ell), tp = cc_table(phi, ell), tq = cc_table(psi, ell);
    for (const auto& [v, m] : tm.entries)
      if (m != a * tp.entries.at(v) + b * tq.entries.at(v)) return "table not linear at " + v;
    return std::nullopt;
  });
  random("euler integral survives subdivision", [](Rng& rng) -> Outcome {
    const auto k = random_complex(rng);
    const auto phi = random_function(rng, k);
    const auto moved = transport_to_subdivision(phi, barycentric_subdivide(k));
    return expect(euler_integral(phi) == euler_integral(moved), "integral changed");
  });

  // fixed-point
  {
    std::vector<std::pair<std::string, FixedCheck>> items;
    auto add = [&](const std::string& label, std::function<ProblemFile()> make) {
      items.emplace_back(label, [make]() -> Outcome {
        const auto r = localization_report(problem_traced(make()));
        if (!r.equal || !*r.equal)
          return "global " + (r.global ? str(*r.global) : std::string("-")) + " vs locals " + str(r.sum_of_locals);
        return std::nullopt;
      });
    };
    for (const auto& name : {"point", "interval", "hexagon", "disk", "s2", "doubling", "reflection", "rotation"})
      add(name, [name] { return fixture(name); });
    for (int m : {12, 24}) {
      add("doubling on the " + std::to_string(m) + "-gon", [m] { return polygon_doubling(m); });
      add("reflection of the " + std::to_string(m) + "-gon", [m] { return polygon_reflection(m); });
    }
    fixed("global trace equals the sum of signed local contributions", items);
  }
  random("fixed subcomplexes are closed and invariant", [](Rng& rng) -> Outcome {
    const auto k = random_complex(rng);
    const auto f = random_self_map(rng, k, 0);
    CellularSubset m;
    try {
      m = fixed_subcomplex(f);
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::FixedPointNotSimplicial) return std::nullopt;
      throw;
    }
    if (!is_closed(m) || !is_invariant(f, m)) return std::string("fixed subcomplex not closed or not invariant");
    return expect(fixed_subcomplex(SelfMapSpec::identity(k)) == CellularSubset::all(k), "identity does not fix K");
  });
  {
    std::vector<std::pair<std::string, FixedCheck>> items;
    items.emplace_back("doubling", []() -> Outcome {
      const auto base = signed_local_contribution(problem_traced(polygon_doubling(6)), 0).value;
      for (int m : {12, 24})
        if (signed_local_contribution(problem_traced(polygon_doubling(m)), 0).value != base)
          return "changes on the " + std::to_string(m) + "-gon";
      return std::nullopt;
    });
    items.emplace_back("reflection", []() -> Outcome {
      const auto t6 = problem_traced(polygon_reflection(6));
      for (int m : {12, 24}) {
        const auto t = problem_traced(polygon_reflection(m));
        for (int i : {0, 1})
          if (signed_local_contribution(t, i).value != signed_local_contribution(t6, i).value)
            return "changes on the " + std::to_string(m) + "-gon";
      }
      return std::nullopt;
    });
    fixed("signed contributions survive refinement", items);
  }

  // microlocal
  random("index sum equals the euler integral", [](Rng& rng) -> Outcome {
    const auto k = random_complex(rng);
    const auto phi = random_function(rng, k);
    const auto ell = random_generic_functional(rng, k);
    return expect(index_sum(phi, ell) == euler_integral(phi), str(index_sum(phi, ell)) + " vs " + str(euler_integral(phi)));
  });
  random("index sum does not depend on the functional", [](Rng& rng) -> Outcome {
    const auto k = random_complex(rng);
    const auto phi = random_function(rng, k);
    const auto first = index_sum(phi, random_generic_functional(rng, k));
    for (int i = 0; i < 4; ++i) {
      const auto ell = random_generic_functional(rng, k);
      if (index_sum(phi, ell) != first || index_sum(phi, ell.negated()) != first)
        return std::string("index sum changed with the functional");
    }
    return std::nullopt;
  });
  {
    std::vector<std::pair<std::string, FixedCheck>> items;
    for (const auto& name : {"doubling", "reflection", "s2", "disk", "interval"})
      items.emplace_back(name, [name]() -> Outcome {
        const auto r = index_check_report(fixture(name));
        return expect(r.equal, to_json(r).dump());
      });
    items.emplace_back("flag spheres", []() -> Outcome {
      const auto r = run_flag_model(flag3_default_pattern());
      for (const auto& c : r.components)
        if (!c.microlocal_index || *c.microlocal_index != c.contribution) return "component " + c.label;
      return std::nullopt;
    });
    fixed("microlocal index equals the signed contribution", items);
  }

  // flag-models
  {
    std::vector<std::pair<std::string, FixedCheck>> items;
    for (int n = 1; n <= kMaxFlagRank; ++n)
      items.emplace_back("n=" + std::to_string(n), [n]() -> Outcome {
        const auto space = flag_cellspace(n);
        if (chi_c(CellularSubset::all(space.cells)) != factorial(n)) return std::string("chi != n!");
        std::vector<int> prefix;
        std::vector<std::vector<int>> parts;
        compositions(n, prefix, parts);
        for (const auto& blocks : parts) {
          const CellSpace m = fixed_locus_cellspace(n, blocks);
          long long multinomial = factorial(n);
          for (int b : blocks) multinomial /= factorial(b);
          std::set<std::string> labels;
          for (const auto& c : m.cells()) labels.insert(c.component);
          if (chi_c(CellularSubset::all(m)) != factorial(n) || static_cast<long long>(labels.size()) != multinomial) {
            std::string b;
            for (int x : blocks) b += std::to_string(x) + " ";
            return "fixed locus for blocks " + b;
          }
        }
        return std::nullopt;
      });
    fixed("flag manifolds and fixed loci have euler characteristic n!", items);
  }
  {
    std::vector<std::pair<std::string, FixedCheck>> items;
    for (int n = 1; n <= 4; ++n)
      items.emplace_back("n=" + std::to_string(n), [n]() -> Outcome {
        const auto space = flag_cellspace(n);
        for (const auto& w : space.permutations) {
          const auto below = bruhat_interval_by_subwords(w);
          for (const auto& u : space.permutations)
            if (bruhat_leq(u, w) != (below.count(u) > 0)) return permutation_id(u) + " vs " + permutation_id(w);
        }
        return std::nullopt;
      });
    fixed("bruhat order matches the subword criterion", items);
  }
  random("unions of schubert varieties are additive", [](Rng& rng) -> Outcome {
    const int n = uniform(rng, 2, 4);
    const auto space = flag_cellspace(n);
    std::set<int> cells;
    const int picks = uniform(rng, 1, 3);
    for (int i = 0; i < picks; ++i) {
      const auto& w = space.permutations[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(space.permutations.size()) - 1))];
      const CellularSubset closed = schubert_subset(space, w, true);
      cells.insert(closed.cells().begin(), closed.cells().end());
    }
    const CellularSubset v(space.cells, std::vector<int>(cells.begin(), cells.end()));
    for (int c : cells)
      for (int d = 0; d < static_cast<int>(space.permutations.size()); ++d)
        if (space.leq(d, c) && !cells.count(d)) return std::string("union is not closed downward");
    return expect(chi_c(v) == static_cast<long long>(cells.size()), "chi_c != cell count");
  });

  // cli
  {
    std::vector<std::pair<std::string, FixedCheck>> items;
    for (const auto& name : fixture_names())
      items.emplace_back("problem " + name, [name]() -> Outcome {
        return round_trip(fixture(name), [](const ProblemFile& p) { return to_json(p); }, problem_from_json);
      });
    for (const auto& name : {"doubling", "reflection", "s2", "rotation"})
      items.emplace_back(std::string("localization ") + name, [name]() -> Outcome {
        return round_trip(localization_report(problem_traced(fixture(name))),
                          [](const LocalizationReport& r) { return to_json(r); }, localization_report_from_json);
      });
    for (const auto& name : {"interval", "hexagon", "disk"})
      items.emplace_back(std::string("morse ") + name, [name]() -> Outcome {
        const auto p = fixture(name);
        return round_trip(morse_report(problem_function(p), problem_functional(p)),
                          [](const MorseReport& r) { return to_json(r); }, morse_report_from_json);
      });
    items.emplace_back("lefschetz cycle table", []() -> Outcome {
      const auto p = fixture("doubling");
      MorseReport r;
      r.table = lefschetz_cycle_table(problem_traced(p), 0, problem_functional(p));
      r.integral = r.table.total();
      r.equal = true;
      return round_trip(r, [](const MorseReport& x) { return to_json(x); }, morse_report_from_json);
    });
    items.emplace_back("index check", []() -> Outcome {
      return round_trip(index_check_report(fixture("doubling")), [](const IndexCheckReport& r) { return to_json(r); },
                        index_check_report_from_json);
    });
    for (const auto& name : {"collapse", "square"})
      items.emplace_back(std::string("pushforward ") + name, [name]() -> Outcome {
        const auto p = fixture(name);
        return round_trip(pushforward_report(problem_map(p), problem_function(p)),
                          [](const PushforwardReport& r) { return to_json(r); }, pushforward_report_from_json);
      });
    items.emplace_back("flag report", []() -> Outcome {
      return round_trip(run_flag_model(flag3_default_pattern()), [](const FlagReport& r) { return to_json(r); },
                        flag_report_from_json);
    });
    items.emplace_back("intersection pattern", []() -> Outcome {
      const auto p = flag3_default_pattern();
      const auto back = pattern_from_json(to_json(p));
      return expect(to_json(back).dump() == to_json(p).dump(), "pattern changed");
    });
    fixed("reports survive print and parse", items);
  }
  if (o.fixtures_dir) {
    std::vector<std::pair<std::string, FixedCheck>> items;
    std::vector<std::filesystem::path> files;
    std::error_code ec;
    for (const auto& entry : std::filesystem::directory_iterator(*o.fixtures_dir, ec))
      if (entry.path().extension() == ".json") files.push_back(entry.path());
    std::sort(files.begin(), files.end());
    if (ec) {
      items.emplace_back(*o.fixtures_dir, [msg = ec.message()]() -> Outcome { return "cannot read directory: " + msg; });
    } else if (files.empty()) {
      items.emplace_back(*o.fixtures_dir, []() -> Outcome { return std::string("no .json files"); });
    }
    for (const auto& file : files)
      items.emplace_back(file.filename().string(), [file]() -> Outcome {
        try {
          const ProblemFile p = load_problem(file.string());
          const std::string stem = file.stem().string();
          if (is_fixture(stem) && !(p == fixture(stem))) return std::string("differs from the built-in fixture");
          return std::nullopt;
        } catch (const Error& e) {
          return describe(e);
        }
      });
    fixed("fixture files validate", items);
  }
  return out;
}

}  // namespace

bool VerifyReport::all_pass() const {
  return std::all_of(properties.begin(), properties.end(), [](const PropertyResult& p) { return p.pass(); });
}

VerifyReport run_verify(const VerifyOptions& options) {
  if (options.cases < 1) throw Error(ErrorKind::InvalidInput, "cases must be positive");
  VerifyReport r;
  r.seed = options.seed;
  r.cases = options.cases;
  r.properties = run_all(options);
  return r;
}

std::string format_verify(const VerifyReport& report) {
  std::ostringstream os;
  os << "seed " << report.seed << ", " << report.cases << " random cases per property\n";
  int passed = 0;
  for (const auto& p : report.properties) {
    os << (p.pass() ? "PASS " : "FAIL ") << p.name << " (" << p.checked << " checks)\n";
    for (const auto& f : p.failures) os << "    " << f << "\n";
    if (p.pass()) ++passed;
  }
  os << passed << "/" << report.properties.size() << " properties passed\n";
  return os.str();
}

Json to_json(const VerifyReport& report) {
  Json props = Json::array();
  for (const auto& p : report.properties)
    props.push_back(Json{{"name", p.name}, {"pass", p.pass()}, {"checked", p.checked}, {"failures", p.failures}});
  return Json{{"seed", std::to_string(report.seed)},
              {"cases", report.cases},
              {"all_pass", report.all_pass()},
              {"properties", props}};
}

VerifyReport verify_report_from_json(const Json& j) {
  VerifyReport r;
  try {
    r.seed = std::stoull(j.at("seed").get<std::string>());
    r.cases = j.at("cases").get<int>();
    for (const auto& p : j.at("properties"))
      r.properties.push_back({p.at("name").get<std::string>(), p.at("checked").get<int>(),
                              p.at("failures").get<std::vector<std::string>>()});
  } catch (const std::exception& e) {
    throw Error(ErrorKind::InvalidInput, std::string("malformed verify report: ") + e.what());
  }
  return r;
}

}  // namespace lefscalc
