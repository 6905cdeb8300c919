#pragma once

#include "lefscalc/complex.hpp"

#include <map>
#include <memory>
#include <string>

namespace lefscalc {

/// A self-map of |K| given by a simplicial map sd^n(K) -> K, where sd^n(K)
/// is the n-fold barycentric subdivision with the vertex names produced by
/// barycentric_subdivide().
class SelfMapSpec {
 public:
  /// Throws NonSimplicialMap when some sd^n simplex has no simplex image.
  SelfMapSpec(SimplicialComplex base, int level, std::vector<int> vertex_map);
  static SelfMapSpec from_ids(SimplicialComplex base, int level, const std::map<std::string, std::string>& vertex_map);
  static SelfMapSpec identity(const SimplicialComplex& k);

  const SimplicialComplex& base() const { return tower_->base(); }
  int level() const { return tower_->levels(); }
  const SubdivisionTower& tower() const { return *tower_; }
  /// The underlying map sd^n(K) -> K.
  const SimplicialMap& map() const { return map_; }

 private:
  std::shared_ptr<const SubdivisionTower> tower_;
  SimplicialMap map_;
};

/// True when the map sends the closed set into itself: every sd^n simplex
/// carried by a member has its image among the members.
bool is_invariant(const SelfMapSpec& f, const CellularSubset& closed);

}  // namespace lefscalc
