#pragma once

#include "lefscalc/complex.hpp"
#include "lefscalc/fixed_point.hpp"

#include <optional>
#include <string>
#include <vector>

namespace lefscalc {

/// One-line notation, values 1..n.
using Permutation = std::vector<int>;

int inversions(const Permutation& w);
/// Bruhat order by the tableau criterion: sorted prefixes of u are
/// entrywise below those of w.
bool bruhat_leq(const Permutation& u, const Permutation& w);
/// Digits of the one-line notation, e.g. "321".
std::string permutation_id(const Permutation& w);
/// Accepts one-line digits ("321") or cycle notation ("(1,3)", "(1 3)(2 4)", "()").
Permutation parse_permutation(const std::string& text, int n);

inline constexpr int kMaxFlagRank = 6;

/// Bruhat cells of the complete flag manifold of C^n, one per permutation,
/// of real dimension 2 * inversions.
struct BruhatCellSpace {
  int n = 0;
  std::vector<Permutation> permutations;  // lexicographic; index matches cells
  CellSpace cells;

  int index_of(const Permutation& w) const;
  bool leq(int a, int b) const { return bruhat_leq(permutations.at(a), permutations.at(b)); }
};

/// Throws BoundExceeded unless 1 <= n <= kMaxFlagRank.
BruhatCellSpace flag_cellspace(int n);
/// Closed: the Schubert variety {t <= w}; open: the cell of w alone.
/// Throws UnknownCell.
CellularSubset schubert_subset(const BruhatCellSpace& space, const Permutation& w, bool closed);
/// Every cell except the open cell of w.
CellularSubset schubert_complement(const BruhatCellSpace& space, const Permutation& w);

/// Fixed locus of diag(l1 x n1, ..., lk x nk) acting on the flag manifold:
/// one component per arrangement of the block letters, each a product of
/// smaller flag manifolds. Component labels are the arrangement words.
/// Throws BadPartition unless the blocks are positive and sum to n.
CellSpace fixed_locus_cellspace(int n, const std::vector<int>& blocks);

// ---------------------------------------------------------------------------
// Fixed locus of diag(a, a, b) on the flag manifold of C^3 against the
// invariant set V = complement of the big cell.

struct PatternCell {
  std::string id;
  int dim = 0;
  bool in_v = false;
};

/// How one fixed component meets V.
struct PatternComponent {
  std::string label;
  long long chi = 0;  // declared Euler characteristic of the component
  std::vector<PatternCell> cells;
  RationalMatrix normal;  // real normal derivative
};

struct IntersectionPattern {
  std::vector<PatternComponent> components;
  bool complex_model = true;
};

/// Pattern for diag(a, a, b) with b/a = 2. Fixed flags (L in P) are
///   L in E = <e1,e2>, P = E;   L in E, P = L + <e3>;   L = <e3>, P = <e3> + l,
/// and V = {L in E} u {e1 in P}. The first two components lie in V; the
/// third meets V only where l = <e1>.
IntersectionPattern flag3_default_pattern();

struct FlagModel {
  TracedProblem problem;  // cell model of the fixed locus
  /// Per component: the identity on a triangulated 2-sphere with the same
  /// V-pattern; empty when the component is not a (0-cell, 2-cell) sphere.
  std::vector<std::optional<TracedProblem>> spheres;
};

/// Throws InconsistentPattern when a component's cells do not add up to its chi.
FlagModel build_flag_model(const IntersectionPattern& pattern);

struct FlagComponentResult {
  std::string label;
  long long chi = 0;
  long long chi_v_cap_m = 0;
  GaussianRational contribution;  // signed, from the cell model
  int sign = 1;
  Regime regime = Regime::Attracting;
  std::optional<GaussianRational> microlocal_index;  // sphere model
  std::optional<Rational> sphere_trace;              // homology of V n M on the sphere model
  friend bool operator==(const FlagComponentResult&, const FlagComponentResult&) = default;
};

struct FlagReport {
  std::vector<FlagComponentResult> components;
  GaussianRational total;
  /// chi_c of V from the Bruhat cells: the Lefschetz number of the map on V,
  /// which is homotopic to the identity there.
  long long lefschetz_on_v = 0;
  bool equal = false;
  friend bool operator==(const FlagReport&, const FlagReport&) = default;
};

FlagReport run_flag_model(const IntersectionPattern& pattern);

}  // namespace lefscalc
