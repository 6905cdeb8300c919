#pragma once

#include "lefscalc/complex.hpp"
#include "lefscalc/euler.hpp"
#include "lefscalc/linalg.hpp"
#include "lefscalc/self_map.hpp"

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace lefscalc {

/// Normal derivative of the map along one fixed component, constant along
/// it. A 0x0 matrix describes an open component.
struct NormalData {
  RationalMatrix matrix;
  int dim() const { return static_cast<int>(matrix.rows()); }
};

/// Caller assertions that cannot be checked combinatorially.
struct Assumptions {
  bool complex_model = false;       // complex-analytic setting
  bool non_characteristic = false;  // signed localization applies
};

/// A self-map with coefficient data. The model is either a simplicial
/// self-map, or a cell space that already *is* the (pointwise fixed) fixed
/// locus, with components given by cell labels.
struct TracedProblem {
  std::variant<SelfMapSpec, CellSpace> model;
  /// Support V of a constant-sheaf model; for cell models, the cells of V inside M.
  std::optional<CellularSubset> support;
  /// User-supplied local traces per fixed cell; overrides the constant-sheaf model.
  std::map<int, GaussianRational> traces;
  /// Keyed by component index.
  std::map<int, NormalData> normal_data;
  Assumptions assumptions;

  Space space() const;
  bool is_cell_model() const { return std::holds_alternative<CellSpace>(model); }
};

/// Throws InvalidInput / NotInvariant on inconsistent problems.
void validate_problem(const TracedProblem& p);

/// Pointwise fixed simplices of K. Throws FixedPointNotSimplicial when some
/// fixed point is not a vertex of, or interior to, a pointwise fixed simplex.
CellularSubset fixed_subcomplex(const SelfMapSpec& f);
std::vector<CellularSubset> fixed_components(const SelfMapSpec& f);
std::vector<CellularSubset> fixed_components(const TracedProblem& p);
/// Union of all fixed cells of the problem.
CellularSubset fixed_cells(const TracedProblem& p);

/// Local trace per fixed cell: user traces when given, else the indicator of V n M.
ConstructibleFunction local_trace_function(const TracedProblem& p);

/// Supplied normal data, or the 0x0 matrix for a component that is open in K.
/// Throws MissingNormalData otherwise.
NormalData normal_data_for(const TracedProblem& p, int component);

struct Hyperbolicity {
  bool one_is_eigenvalue = false;
  bool meets_r_geq_1 = false;   // some real eigenvalue >= 1 (1 itself included)
  int sign = 0;                 // sign of det(I - A), 0 when singular
  Rational det_i_minus_a;
  RationalPolynomial characteristic;
  int normal_dim = 0;
};
Hyperbolicity hyperbolicity(const RationalMatrix& a);
std::vector<Hyperbolicity> hyperbolicity_report(const TracedProblem& p);

/// Euler integral of the local trace function over one component. Throws
/// NotLocalizable when 1 is a normal eigenvalue, unless forced.
GaussianRational local_contribution(const TracedProblem& p, int component, bool force = false);

enum class Regime {
  Attracting,         // no real normal eigenvalue >= 1
  ComplexModel,
  NonCharacteristic,  // sign-corrected localization
};
const char* to_string(Regime r);
/// Regime that applies to a component. Throws NotHyperbolic when det(I - A) = 0,
/// NoApplicableRegime when an eigenvalue >= 1 exists and no assumption covers it.
Regime applicable_regime(const Hyperbolicity& h, const Assumptions& a);
/// +1 except in the non-characteristic regime, where it is sgn det(I - A).
int regime_sign(Regime r, const Hyperbolicity& h);

struct SignedContribution {
  GaussianRational value;     // sign * integral
  GaussianRational integral;
  int sign = 1;
  Regime regime = Regime::Attracting;
};
SignedContribution signed_local_contribution(const TracedProblem& p, int component);

struct ComponentReport {
  int index = 0;
  std::vector<std::string> cells;
  GaussianRational integral;
  GaussianRational value;
  int sign = 1;
  Regime regime = Regime::Attracting;
  bool one_is_eigenvalue = false;
  bool meets_r_geq_1 = false;
  int det_sign = 0;
  int normal_dim = 0;
  friend bool operator==(const ComponentReport&, const ComponentReport&) = default;
};

struct LocalizationReport {
  std::optional<GaussianRational> global;  // absent without a constant-sheaf simplicial model
  GaussianRational sum_of_locals;
  std::optional<bool> equal;
  std::vector<ComponentReport> components;
  Assumptions assumptions;
  friend bool operator==(const LocalizationReport& a, const LocalizationReport& b) {
    return a.global == b.global && a.sum_of_locals == b.sum_of_locals && a.equal == b.equal &&
           a.components == b.components && a.assumptions.complex_model == b.assumptions.complex_model &&
           a.assumptions.non_characteristic == b.assumptions.non_characteristic;
  }
};

/// Global trace via homology of V (as the pair (closure V, closure V \ V))
/// against the sum of signed local contributions. Equality is reported.
LocalizationReport localization_report(const TracedProblem& p);
/// Global side alone. Throws CellSpaceUnsupported for cell models and
/// InvalidInput when user traces replace the constant-sheaf model.
Rational global_trace(const TracedProblem& p);

}  // namespace lefscalc
