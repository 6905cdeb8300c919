#pragma once

#include "lefscalc/complex.hpp"
#include "lefscalc/linalg.hpp"
#include "lefscalc/self_map.hpp"

#include <vector>

namespace lefscalc {

/// Rational chain complex of a simplicial complex (or of a pair). Degree-k
/// basis lists simplex indices of the parent, oriented by sorted vertex order.
struct ChainComplexQ {
  SimplicialComplex complex;
  std::vector<std::vector<int>> basis;
  /// boundary[k] : C_k -> C_{k-1}; boundary[0] has zero rows.
  std::vector<RationalMatrix> boundary;

  int top_degree() const { return static_cast<int>(basis.size()) - 1; }
  std::size_t rank_in(int k) const { return k >= 0 && k <= top_degree() ? basis[k].size() : 0; }
};

/// Morphism of chain complexes; degree[k] maps source C_k to target C_k.
struct ChainMapQ {
  ChainComplexQ source;
  ChainComplexQ target;
  std::vector<RationalMatrix> degree;
};

/// Throws InvalidComplex when K fails validation.
ChainComplexQ chain_complex(const SimplicialComplex& k);
/// C(A) / C(B) for closed B inside closed A (both cellular subsets of one complex).
ChainComplexQ relative_chain_complex(const CellularSubset& a, const CellularSubset& b);

std::vector<int> betti(const SimplicialComplex& k);
/// Throws InvalidInput when L is not closed.
std::vector<int> relative_betti(const SimplicialComplex& k, const CellularSubset& l);
std::vector<int> betti(const ChainComplexQ& c);

/// Subdivision operator C_*(K) -> C_*(sd K), sd(s) = b_s * sd(ds).
ChainMapQ subdivision_chain_map(const SimplicialComplex& k, const Subdivision& sd);

/// s -> sign * g(s) when g is injective on the vertices of s, else 0.
ChainMapQ chain_map_of(const SimplicialMap& g);
/// g_* o sd^n_*, an endomorphism of C_*(K).
ChainMapQ chain_map_of(const SelfMapSpec& f);
/// Composite c2 o c1. Throws ShapeMismatch.
ChainMapQ compose(const ChainMapQ& c2, const ChainMapQ& c1);

/// Sum_k (-1)^k tr(c_k). Throws ShapeMismatch unless c is an endomorphism.
Rational hopf_trace(const ChainMapQ& c);
/// Trace of the induced map on H_k (cycle basis lifted and reduced modulo boundaries).
Rational homology_trace(const ChainMapQ& c, int k);
Rational lefschetz_number(const ChainMapQ& c);

/// The induced endomorphism of C(A)/C(B). Throws NotInvariant when the chain
/// map does not preserve C(A) or C(B).
ChainMapQ restrict_to_pair(const ChainMapQ& c, const CellularSubset& a, const CellularSubset& b);
/// Alternating trace on H_*(K, L); throws NotInvariant.
Rational relative_lefschetz_number(const ChainMapQ& c, const CellularSubset& l);
/// As above, with invariance checked on the map itself rather than its chains.
Rational relative_lefschetz_number(const SelfMapSpec& f, const CellularSubset& l);
/// Alternating trace on H_*(A, B) for closed invariant B inside closed invariant A.
Rational pair_lefschetz_number(const SelfMapSpec& f, const CellularSubset& a, const CellularSubset& b);

}  // namespace lefscalc
