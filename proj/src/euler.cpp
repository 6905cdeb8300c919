#include "lefscalc/euler.hpp"

#include "lefscalc/error.hpp"

namespace lefscalc {

ConstructibleFunction::ConstructibleFunction(Space parent, const std::map<int, GaussianRational>& values)
    : parent_(std::move(parent)) {
  for (const auto& [cell, v] : values) set(cell, v);
}

ConstructibleFunction ConstructibleFunction::indicator(const CellularSubset& s) {
  ConstructibleFunction f(s.parent());
  for (int c : s.cells()) f.set(c, 1);
  return f;
}

ConstructibleFunction ConstructibleFunction::constant(const Space& parent, const GaussianRational& c) {
  ConstructibleFunction f(parent);
  for (int i = 0; i < cell_count(parent); ++i) f.set(i, c);
  return f;
}

GaussianRational ConstructibleFunction::operator()(int cell) const {
  auto it = values_.find(cell);
  return it == values_.end() ? GaussianRational() : it->second;
}

void ConstructibleFunction::set(int cell, const GaussianRational& value) {
  if (cell < 0 || cell >= cell_count(parent_))
    throw Error(ErrorKind::UnknownCell, "cell index " + std::to_string(cell) + " outside the function's space");
  if (value.is_zero())
    values_.erase(cell);
  else
    values_[cell] = value;
}

long long chi_c(const CellularSubset& s) {
  long long total = 0;
  for (int c : s.cells()) total += parity_sign(cell_dim(s.parent(), c));
  return total;
}

GaussianRational euler_integral(const ConstructibleFunction& phi) {
  GaussianRational total;
  for (const auto& [cell, v] : phi.values()) {
    if (parity_sign(cell_dim(phi.parent(), cell)) > 0)
      total += v;
    else
      total -= v;
  }
  return total;
}

ConstructibleFunction restrict(const ConstructibleFunction& phi, const CellularSubset& s) {
  if (!(s.parent() == phi.parent())) throw Error(ErrorKind::UnknownCell, "restriction to cells of another space");
  ConstructibleFunction out(phi.parent());
  for (const auto& [cell, v] : phi.values())
    if (s.contains(cell)) out.set(cell, v);
  return out;
}

ConstructibleFunction combine(const GaussianRational& a, const ConstructibleFunction& phi,
                              const GaussianRational& b, const ConstructibleFunction& psi) {
  if (!(phi.parent() == psi.parent())) throw Error(ErrorKind::InvalidInput, "combining functions on different spaces");
  ConstructibleFunction out(phi.parent());
  for (int i = 0; i < cell_count(phi.parent()); ++i) out.set(i, a * phi(i) + b * psi(i));
  return out;
}

ConstructibleFunction pushforward(const SimplicialMap& g, const ConstructibleFunction& phi) {
  const auto* k = std::get_if<SimplicialComplex>(&phi.parent());
  if (!k || !(*k == g.source())) throw Error(ErrorKind::InvalidInput, "pushforward of a function not on the map's source");
  std::map<int, GaussianRational> acc;
  for (const auto& [s, v] : phi.values()) {
    const int t = g.image(s);
    const int codim = g.source().dim(s) - g.target().dim(t);
    if (parity_sign(codim) > 0)
      acc[t] += v;
    else
      acc[t] -= v;
  }
  return ConstructibleFunction(g.target(), acc);
}

ConstructibleFunction pullback(const SimplicialMap& g, const ConstructibleFunction& psi) {
  const auto* k = std::get_if<SimplicialComplex>(&psi.parent());
  if (!k || !(*k == g.target())) throw Error(ErrorKind::InvalidInput, "pullback of a function not on the map's target");
  ConstructibleFunction out(g.source());
  for (int s = 0; s < g.source().size(); ++s) out.set(s, psi(g.image(s)));
  return out;
}

ConstructibleFunction transport_to_subdivision(const ConstructibleFunction& phi, const Subdivision& sd) {
  ConstructibleFunction out(sd.complex);
  for (int j = 0; j < sd.complex.size(); ++j) out.set(j, phi(sd.carrier[j]));
  return out;
}

}  // namespace lefscalc
