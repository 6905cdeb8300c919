#pragma once

#include "lefscalc/euler.hpp"
#include "lefscalc/fixed_point.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace lefscalc {

/// Rational values on vertices, standing in for the differential of a Morse
/// function (a section of the cotangent bundle).
struct VertexFunctional {
  std::map<std::string, Rational> values;

  /// Throws UnknownCell when the vertex has no value.
  const Rational& at(const std::string& vertex) const;
  VertexFunctional negated() const;
  friend bool operator==(const VertexFunctional&, const VertexFunctional&) = default;
};

/// Edges "a,b" on which the functional ties, plus vertices without a value.
std::vector<std::string> genericity_check(const SimplicialComplex& k, const VertexFunctional& ell);

/// Sum over simplices s containing v on which v is the strict maximum of ell,
/// of (-1)^dim s * phi(s). Throws Degenerate on a tie along an edge at v and
/// CellSpaceUnsupported for cell-space functions.
GaussianRational morse_multiplicity(const ConstructibleFunction& phi, const std::string& vertex,
                                    const VertexFunctional& ell);

/// Multiplicity per vertex: the characteristic cycle of phi paired with d(ell).
struct MultiplicityTable {
  std::map<std::string, GaussianRational> entries;
  VertexFunctional ell;
  /// Cell label -> value of the function the table was computed from.
  std::map<std::string, GaussianRational> function;
  /// Set for Lefschetz-cycle tables.
  std::optional<Regime> regime;
  int sign = 1;

  GaussianRational total() const;
  friend bool operator==(const MultiplicityTable&, const MultiplicityTable&) = default;
};

/// Throws Degenerate listing all tied edges.
MultiplicityTable cc_table(const ConstructibleFunction& phi, const VertexFunctional& ell);
/// Sum of the multiplicities; equals euler_integral(phi).
GaussianRational index_sum(const ConstructibleFunction& phi, const VertexFunctional& ell);

/// sign * cc_table of the local trace function on one fixed component (as a
/// complex of its own), with the regime that fixed the sign.
MultiplicityTable lefschetz_cycle_table(const TracedProblem& p, int component, const VertexFunctional& ell);
GaussianRational microlocal_index(const TracedProblem& p, int component, const VertexFunctional& ell);

}  // namespace lefscalc
