#pragma once

#include "lefscalc/complex.hpp"
#include "lefscalc/rational.hpp"

#include <map>

namespace lefscalc {

/// Q(i)-valued function constant on the open cells of a space. Cells not
/// keyed carry 0; zero values are never stored.
class ConstructibleFunction {
 public:
  ConstructibleFunction() = default;
  explicit ConstructibleFunction(Space parent) : parent_(std::move(parent)) {}
  /// Throws UnknownCell for cells outside the parent.
  ConstructibleFunction(Space parent, const std::map<int, GaussianRational>& values);
  /// Indicator of a cellular subset.
  static ConstructibleFunction indicator(const CellularSubset& s);
  static ConstructibleFunction constant(const Space& parent, const GaussianRational& c);

  const Space& parent() const { return parent_; }
  GaussianRational operator()(int cell) const;
  void set(int cell, const GaussianRational& value);
  /// Nonzero values only.
  const std::map<int, GaussianRational>& values() const { return values_; }

  friend bool operator==(const ConstructibleFunction& a, const ConstructibleFunction& b) {
    return a.values_ == b.values_ && a.parent_ == b.parent_;
  }

 private:
  Space parent_;
  std::map<int, GaussianRational> values_;
};

/// Compactly supported Euler characteristic: sum over member cells of (-1)^dim.
long long chi_c(const CellularSubset& s);
/// Sum over cells of (-1)^dim * phi(cell).
GaussianRational euler_integral(const ConstructibleFunction& phi);
/// Values kept on s, zero elsewhere. Throws UnknownCell when s has another parent.
ConstructibleFunction restrict(const ConstructibleFunction& phi, const CellularSubset& s);
/// a*phi + b*psi cellwise. Throws InvalidInput when parents differ.
ConstructibleFunction combine(const GaussianRational& a, const ConstructibleFunction& phi,
                              const GaussianRational& b, const ConstructibleFunction& psi);

/// Fibrewise compactly supported Euler integral along g:
/// (g_* phi)(t) = sum over s with g(s) = t of (-1)^(dim s - dim t) phi(s).
/// Throws InvalidInput when phi does not live on g's source.
ConstructibleFunction pushforward(const SimplicialMap& g, const ConstructibleFunction& phi);
/// (g^* psi)(s) = psi(g(s)).
ConstructibleFunction pullback(const SimplicialMap& g, const ConstructibleFunction& psi);

/// Moves phi to sd(K): each subdivision cell takes the value of its carrier.
ConstructibleFunction transport_to_subdivision(const ConstructibleFunction& phi, const Subdivision& sd);

}  // namespace lefscalc
