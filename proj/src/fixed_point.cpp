#include "lefscalc/fixed_point.hpp"

#include "lefscalc/error.hpp"
#include "lefscalc/homology.hpp"

#include <algorithm>
#include <set>

namespace lefscalc {

Space TracedProblem::space() const {
  if (auto f = std::get_if<SelfMapSpec>(&model)) return f->base();
  return std::get<CellSpace>(model);
}

namespace {

// Pair (closure V, closure V \ V) for a locally closed support.
std::pair<CellularSubset, CellularSubset> support_pair(const CellularSubset& v) {
  if (!is_locally_closed(v)) throw Error(ErrorKind::InvalidInput, "support is not locally closed");
  CellularSubset a = closure(v);
  std::vector<int> rest;
  std::set_difference(a.cells().begin(), a.cells().end(), v.cells().begin(), v.cells().end(), std::back_inserter(rest));
  return {a, CellularSubset(v.parent(), std::move(rest))};
}

// Throws when an affine fixed point of f lies inside the open top simplex t.
void check_subdivided_simplex(const SelfMapSpec& f, int t) {
  const SubdivisionTower& tower = f.tower();
  const SimplicialComplex& top = tower.top();
  const SimplicialComplex& base = tower.base();
  const int carrier = tower.base_carrier(t);
  if (f.map().image(t) != carrier) return;

  const Simplex& tau = top.simplex(t);
  const Simplex& sigma = base.simplex(carrier);
  const std::size_t n = sigma.size();  // equals tau.size(): image covers the carrier
  RationalMatrix m(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t j = 0; j < n; ++j) {
      const auto& bary = tower.barycentric(tau[j]);
      auto it = bary.find(sigma[r]);
      if (it != bary.end()) m(r, j) += it->second;
      if (f.map()(tau[j]) == sigma[r]) m(r, j) -= 1;
    }
  const RationalMatrix kernel = null_space(m);
  // Fixed points are kernel vectors with coordinate sum 1.
  std::vector<std::vector<Rational>> affine;
  for (std::size_t c = 0; c < kernel.cols(); ++c) affine.push_back(kernel.column(c));
  std::vector<Rational> sums;
  for (const auto& v : affine) {
    Rational s;
    for (const auto& x : v) s += x;
    sums.push_back(s);
  }
  const auto nonzero = std::count_if(sums.begin(), sums.end(), [](const Rational& s) { return !s.is_zero(); });
  if (nonzero == 0) return;
  if (kernel.cols() > 1)
    throw Error(ErrorKind::FixedPointNotSimplicial,
                "positive-dimensional fixed locus across subdivision simplex {" + top.simplex_label(t) +
                    "}; subdivide further");
  std::vector<Rational> point = affine.front();
  bool interior = true;
  for (auto& x : point) {
    x /= sums.front();
    if (x.sign() <= 0) interior = false;
  }
  if (interior)
    throw Error(ErrorKind::FixedPointNotSimplicial,
                "fixed point inside subdivision simplex {" + top.simplex_label(t) + "}; subdivide further");
}

bool component_is_open(const SimplicialComplex& k, const CellularSubset& c) {
  std::set<int> vertices;
  for (int s : c.cells())
    for (int v : k.simplex(s)) vertices.insert(v);
  for (int s = 0; s < k.size(); ++s) {
    const Simplex& sx = k.simplex(s);
    const bool touches = std::any_of(sx.begin(), sx.end(), [&](int v) { return vertices.count(v) > 0; });
    if (touches && !c.contains(s)) return false;
  }
  return true;
}

}  // namespace

void validate_problem(const TracedProblem& p) {
  const Space space = p.space();
  if (p.support && !(p.support->parent() == space))
    throw Error(ErrorKind::InvalidInput, "support does not live on the problem's space");
  if (auto f = std::get_if<SelfMapSpec>(&p.model); f && p.support) {
    auto [a, b] = support_pair(*p.support);
    if (!is_invariant(*f, a) || !is_invariant(*f, b))
      throw Error(ErrorKind::NotInvariant, "support is not invariant under the map");
  }
  if (!p.traces.empty()) {
    const CellularSubset fixed = fixed_cells(p);
    for (const auto& [cell, v] : p.traces)
      if (!fixed.contains(cell))
        throw Error(ErrorKind::InvalidInput, "trace keyed on non-fixed cell '" + cell_label(space, cell) + "'");
  }
  const auto components = fixed_components(p);
  for (const auto& [i, nd] : p.normal_data) {
    if (i < 0 || i >= static_cast<int>(components.size()))
      throw Error(ErrorKind::InvalidInput, "normal data for nonexistent component " + std::to_string(i));
    if (!nd.matrix.is_square()) throw Error(ErrorKind::ShapeMismatch, "normal data must be square");
  }
}

CellularSubset fixed_subcomplex(const SelfMapSpec& f) {
  const SimplicialComplex& base = f.base();
  std::vector<int> cells;
  if (f.level() == 0) {
    for (int s = 0; s < base.size(); ++s) {
      if (f.map().image(s) != s) continue;
      const Simplex& sx = base.simplex(s);
      const bool pointwise = std::all_of(sx.begin(), sx.end(), [&](int v) { return f.map()(v) == v; });
      if (!pointwise)
        throw Error(ErrorKind::FixedPointNotSimplicial,
                    "simplex {" + base.simplex_label(s) + "} is permuted onto itself; subdivide further");
      cells.push_back(s);
    }
    return CellularSubset(base, std::move(cells));
  }

  const SubdivisionTower& tower = f.tower();
  const SimplicialComplex& top = tower.top();
  for (int w = 0; w < top.vertex_count(); ++w) {
    const auto& bary = tower.barycentric(w);
    if (bary.size() == 1 && f.map()(w) == bary.begin()->first) cells.push_back(base.index_of({f.map()(w)}));
  }
  for (int t = 0; t < top.size(); ++t)
    if (top.dim(t) >= 1) check_subdivided_simplex(f, t);
  return CellularSubset(base, std::move(cells));
}

std::vector<CellularSubset> fixed_components(const SelfMapSpec& f) {
  return connected_components(fixed_subcomplex(f));
}

std::vector<CellularSubset> fixed_components(const TracedProblem& p) {
  if (auto f = std::get_if<SelfMapSpec>(&p.model)) return fixed_components(*f);
  const CellSpace& cells = std::get<CellSpace>(p.model);
  // Unlabelled cells are singleton components; ordered by smallest member.
  std::map<std::string, std::vector<int>> labelled;
  std::vector<std::vector<int>> groups;
  for (int i = 0; i < cells.size(); ++i) {
    const auto& label = cells.cell(i).component;
    if (label.empty())
      groups.push_back({i});
    else
      labelled[label].push_back(i);
  }
  for (auto& [label, members] : labelled) groups.push_back(std::move(members));
  std::sort(groups.begin(), groups.end(), [](const auto& a, const auto& b) { return a.front() < b.front(); });
  std::vector<CellularSubset> out;
  for (auto& g : groups) out.emplace_back(cells, std::move(g));
  return out;
}

CellularSubset fixed_cells(const TracedProblem& p) {
  if (auto f = std::get_if<SelfMapSpec>(&p.model)) return fixed_subcomplex(*f);
  return CellularSubset::all(p.space());
}

ConstructibleFunction local_trace_function(const TracedProblem& p) {
  const Space space = p.space();
  if (!p.traces.empty()) return ConstructibleFunction(space, p.traces);
  const CellularSubset fixed = fixed_cells(p);
  ConstructibleFunction phi(space);
  for (int c : fixed.cells())
    if (!p.support || p.support->contains(c)) phi.set(c, 1);
  return phi;
}

NormalData normal_data_for(const TracedProblem& p, int component) {
  if (auto it = p.normal_data.find(component); it != p.normal_data.end()) return it->second;
  if (auto f = std::get_if<SelfMapSpec>(&p.model)) {
    const auto components = fixed_components(*f);
    if (component >= 0 && component < static_cast<int>(components.size()) &&
        component_is_open(f->base(), components[component]))
      return NormalData{RationalMatrix(0, 0)};
  }
  throw Error(ErrorKind::MissingNormalData, "no normal data for fixed component " + std::to_string(component));
}

Hyperbolicity hyperbolicity(const RationalMatrix& a) {
  if (!a.is_square()) throw Error(ErrorKind::ShapeMismatch, "normal data must be square");
  Hyperbolicity h;
  h.normal_dim = static_cast<int>(a.rows());
  h.det_i_minus_a = det(RationalMatrix::identity(a.rows()) - a);
  h.one_is_eigenvalue = h.det_i_minus_a.is_zero();
  h.sign = h.det_i_minus_a.sign();
  h.characteristic = char_poly(a);
  h.meets_r_geq_1 = count_real_roots_geq(h.characteristic, 1) > 0;
  return h;
}

std::vector<Hyperbolicity> hyperbolicity_report(const TracedProblem& p) {
  std::vector<Hyperbolicity> out;
  const auto n = fixed_components(p).size();
  for (std::size_t i = 0; i < n; ++i) out.push_back(hyperbolicity(normal_data_for(p, static_cast<int>(i)).matrix));
  return out;
}

GaussianRational local_contribution(const TracedProblem& p, int component, bool force) {
  const auto components = fixed_components(p);
  if (component < 0 || component >= static_cast<int>(components.size()))
    throw Error(ErrorKind::UnknownCell, "no fixed component " + std::to_string(component));
  if (!force && hyperbolicity(normal_data_for(p, component).matrix).one_is_eigenvalue)
    throw Error(ErrorKind::NotLocalizable, "1 is a normal eigenvalue on component " + std::to_string(component));
  return euler_integral(restrict(local_trace_function(p), components[component]));
}

const char* to_string(Regime r) {
  switch (r) {
    case Regime::Attracting: return "attracting";
    case Regime::ComplexModel: return "complex";
    case Regime::NonCharacteristic: return "non-characteristic";
  }
  return "unknown";
}

Regime applicable_regime(const Hyperbolicity& h, const Assumptions& a) {
  if (h.one_is_eigenvalue) throw Error(ErrorKind::NotHyperbolic, "det(I - A) = 0");
  if (!h.meets_r_geq_1) return Regime::Attracting;
  if (a.complex_model) return Regime::ComplexModel;
  if (a.non_characteristic) return Regime::NonCharacteristic;
  throw Error(ErrorKind::NoApplicableRegime,
              "a real normal eigenvalue is >= 1 and neither complex_model nor non_characteristic is asserted");
}

int regime_sign(Regime r, const Hyperbolicity& h) { return r == Regime::NonCharacteristic ? h.sign : 1; }

SignedContribution signed_local_contribution(const TracedProblem& p, int component) {
  const Hyperbolicity h = hyperbolicity(normal_data_for(p, component).matrix);
  SignedContribution out;
  out.regime = applicable_regime(h, p.assumptions);
  out.sign = regime_sign(out.regime, h);
  out.integral = local_contribution(p, component);
  out.value = out.sign > 0 ? out.integral : -out.integral;
  return out;
}

Rational global_trace(const TracedProblem& p) {
  const auto* f = std::get_if<SelfMapSpec>(&p.model);
  if (!f) throw Error(ErrorKind::CellSpaceUnsupported, "global trace needs a simplicial self-map");
  if (!p.traces.empty()) throw Error(ErrorKind::InvalidInput, "global trace needs the constant-sheaf model");
  if (!p.support) return lefschetz_number(chain_map_of(*f));
  auto [a, b] = support_pair(*p.support);
  return pair_lefschetz_number(*f, a, b);
}

LocalizationReport localization_report(const TracedProblem& p) {
  validate_problem(p);
  LocalizationReport r;
  r.assumptions = p.assumptions;
  const auto components = fixed_components(p);
  for (int i = 0; i < static_cast<int>(components.size()); ++i) {
    const Hyperbolicity h = hyperbolicity(normal_data_for(p, i).matrix);
    const SignedContribution s = signed_local_contribution(p, i);
    ComponentReport c;
    c.index = i;
    c.cells = components[i].labels();
    c.integral = s.integral;
    c.value = s.value;
    c.sign = s.sign;
    c.regime = s.regime;
    c.one_is_eigenvalue = h.one_is_eigenvalue;
    c.meets_r_geq_1 = h.meets_r_geq_1;
    c.det_sign = h.sign;
    c.normal_dim = h.normal_dim;
    r.sum_of_locals += s.value;
    r.components.push_back(std::move(c));
  }
  if (!p.is_cell_model() && p.traces.empty()) {
    r.global = GaussianRational(global_trace(p));
    r.equal = *r.global == r.sum_of_locals;
  }
  return r;
}

}  // namespace lefscalc
