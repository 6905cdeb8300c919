#include "lefscalc/self_map.hpp"

#include "lefscalc/error.hpp"

#include <numeric>

namespace lefscalc {

SelfMapSpec::SelfMapSpec(SimplicialComplex base, int level, std::vector<int> vertex_map)
    : tower_(std::make_shared<SubdivisionTower>(base, level)),
      map_(tower_->top(), tower_->base(), std::move(vertex_map)) {}

SelfMapSpec SelfMapSpec::from_ids(SimplicialComplex base, int level,
                                  const std::map<std::string, std::string>& vertex_map) {
  SubdivisionTower tower(base, level);
  const SimplicialComplex& top = tower.top();
  std::vector<int> m(top.vertex_count(), -1);
  for (const auto& [from, to] : vertex_map) {
    auto v = top.find_vertex(from);
    if (!v) throw Error(ErrorKind::UnknownCell, "vertex map names unknown subdivision vertex '" + from + "'");
    m[*v] = base.vertex_index(to);
  }
  for (int v = 0; v < top.vertex_count(); ++v)
    if (m[v] < 0) throw Error(ErrorKind::NonSimplicialMap, "subdivision vertex '" + top.vertex_id(v) + "' has no image");
  return SelfMapSpec(std::move(base), level, std::move(m));
}

SelfMapSpec SelfMapSpec::identity(const SimplicialComplex& k) {
  std::vector<int> m(k.vertex_count());
  std::iota(m.begin(), m.end(), 0);
  return SelfMapSpec(k, 0, std::move(m));
}

bool is_invariant(const SelfMapSpec& f, const CellularSubset& closed) {
  const SimplicialComplex& top = f.tower().top();
  for (int t = 0; t < top.size(); ++t)
    if (closed.contains(f.tower().base_carrier(t)) && !closed.contains(f.map().image(t))) return false;
  return true;
}

}  // namespace lefscalc
