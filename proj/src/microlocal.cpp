#include "lefscalc/microlocal.hpp"

#include "lefscalc/error.hpp"

#include <algorithm>

namespace lefscalc {

const Rational& VertexFunctional::at(const std::string& vertex) const {
  auto it = values.find(vertex);
  if (it == values.end()) throw Error(ErrorKind::UnknownCell, "functional has no value at vertex '" + vertex + "'");
  return it->second;
}

VertexFunctional VertexFunctional::negated() const {
  VertexFunctional out;
  for (const auto& [v, x] : values) out.values[v] = -x;
  return out;
}

std::vector<std::string> genericity_check(const SimplicialComplex& k, const VertexFunctional& ell) {
  std::vector<std::string> issues;
  for (int v = 0; v < k.vertex_count(); ++v)
    if (!ell.values.count(k.vertex_id(v))) issues.push_back("vertex " + k.vertex_id(v) + " has no value");
  if (!issues.empty()) return issues;
  for (int e : k.simplices_of_dim(1)) {
    const Simplex& s = k.simplex(e);
    if (ell.at(k.vertex_id(s[0])) == ell.at(k.vertex_id(s[1]))) issues.push_back(k.simplex_label(e));
  }
  return issues;
}

namespace {

GaussianRational lower_star_sum(const SimplicialComplex& k, const ConstructibleFunction& phi, int v,
                                const std::vector<Rational>& height) {
  GaussianRational m;
  for (int s = 0; s < k.size(); ++s) {
    const Simplex& sx = k.simplex(s);
    if (!std::binary_search(sx.begin(), sx.end(), v)) continue;
    const bool v_is_max = std::all_of(sx.begin(), sx.end(), [&](int w) { return w == v || height[w] < height[v]; });
    if (!v_is_max) continue;
    const auto value = phi(s);
    if (value.is_zero()) continue;
    if (parity_sign(k.dim(s)) > 0)
      m += value;
    else
      m -= value;
  }
  return m;
}

std::vector<Rational> heights(const SimplicialComplex& k, const VertexFunctional& ell) {
  std::vector<Rational> h;
  for (int v = 0; v < k.vertex_count(); ++v) h.push_back(ell.at(k.vertex_id(v)));
  return h;
}

}  // namespace

GaussianRational morse_multiplicity(const ConstructibleFunction& phi, const std::string& vertex,
                                    const VertexFunctional& ell) {
  const SimplicialComplex& k = require_complex(phi.parent(), "morse_multiplicity");
  const int v = k.vertex_index(vertex);
  const Rational& hv = ell.at(vertex);
  std::vector<std::string> ties;
  for (int e : k.simplices_of_dim(1)) {
    const Simplex& s = k.simplex(e);
    if (s[0] != v && s[1] != v) continue;
    const int w = s[0] == v ? s[1] : s[0];
    if (ell.at(k.vertex_id(w)) == hv) ties.push_back(k.simplex_label(e));
  }
  if (!ties.empty()) throw Error(ErrorKind::Degenerate, "functional ties along an edge at " + vertex, ties);
  return lower_star_sum(k, phi, v, heights(k, ell));
}

GaussianRational MultiplicityTable::total() const {
  GaussianRational t;
  for (const auto& [v, m] : entries) t += m;
  return t;
}

MultiplicityTable cc_table(const ConstructibleFunction& phi, const VertexFunctional& ell) {
  const SimplicialComplex& k = require_complex(phi.parent(), "cc_table");
  auto issues = genericity_check(k, ell);
  if (!issues.empty()) throw Error(ErrorKind::Degenerate, "functional is not generic", issues);
  MultiplicityTable t;
  t.ell = ell;
  for (const auto& [cell, value] : phi.values()) t.function[k.simplex_label(cell)] = value;
  const auto h = heights(k, ell);
  for (int v = 0; v < k.vertex_count(); ++v) t.entries[k.vertex_id(v)] = lower_star_sum(k, phi, v, h);
  return t;
}

GaussianRational index_sum(const ConstructibleFunction& phi, const VertexFunctional& ell) {
  return cc_table(phi, ell).total();
}

MultiplicityTable lefschetz_cycle_table(const TracedProblem& p, int component, const VertexFunctional& ell) {
  require_complex(p.space(), "lefschetz_cycle_table");
  const auto components = fixed_components(p);
  if (component < 0 || component >= static_cast<int>(components.size()))
    throw Error(ErrorKind::UnknownCell, "no fixed component " + std::to_string(component));
  const Hyperbolicity h = hyperbolicity(normal_data_for(p, component).matrix);
  const Regime regime = applicable_regime(h, p.assumptions);

  const Subcomplex sub = subcomplex(components[component]);
  const ConstructibleFunction phi = local_trace_function(p);
  ConstructibleFunction local(sub.complex);
  for (int i = 0; i < sub.complex.size(); ++i) local.set(i, phi(sub.parent_index[i]));

  // The functional only needs values on the component.
  VertexFunctional on_component;
  for (int v = 0; v < sub.complex.vertex_count(); ++v) {
    const auto& id = sub.complex.vertex_id(v);
    if (auto it = ell.values.find(id); it != ell.values.end()) on_component.values.insert(*it);
  }
  MultiplicityTable t = cc_table(local, on_component);
  t.regime = regime;
  t.sign = regime_sign(regime, h);
  if (t.sign < 0)
    for (auto& [v, m] : t.entries) m = -m;
  return t;
}

GaussianRational microlocal_index(const TracedProblem& p, int component, const VertexFunctional& ell) {
  return lefschetz_cycle_table(p, component, ell).total();
}

}  // namespace lefscalc
