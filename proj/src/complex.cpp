#include "lefscalc/complex.hpp"

#include "lefscalc/error.hpp"
#include "lefscalc/linalg.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

namespace lefscalc {

struct SimplicialComplex::Data {
  std::vector<std::string> vertex_ids;
  std::map<std::string, int> vertex_lookup;
  std::vector<Simplex> simplices;
  std::map<Simplex, int> simplex_lookup;
  std::vector<std::vector<int>> by_dim;
  std::map<std::string, std::vector<Rational>> coords;
};

namespace {

bool simplex_order(const Simplex& a, const Simplex& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

const std::vector<int> kNoSimplices;

std::vector<Simplex> proper_faces(const Simplex& s) {
  std::vector<Simplex> faces;
  const std::size_t n = s.size();
  for (std::size_t mask = 1; mask + 1 < (std::size_t{1} << n); ++mask) {
    Simplex f;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (std::size_t{1} << i)) f.push_back(s[i]);
    faces.push_back(std::move(f));
  }
  return faces;
}

}  // namespace

SimplicialComplex::SimplicialComplex() : data_(std::make_shared<Data>()) {}

SimplicialComplex::SimplicialComplex(std::vector<std::string> vertex_ids,
                                     const std::vector<std::vector<std::string>>& simplices,
                                     std::map<std::string, std::vector<Rational>> coords) {
  auto d = std::make_shared<Data>();
  std::sort(vertex_ids.begin(), vertex_ids.end());
  if (std::adjacent_find(vertex_ids.begin(), vertex_ids.end()) != vertex_ids.end())
    throw Error(ErrorKind::InvalidInput, "duplicate vertex identifier");
  for (std::size_t i = 0; i < vertex_ids.size(); ++i) d->vertex_lookup[vertex_ids[i]] = static_cast<int>(i);
  d->vertex_ids = std::move(vertex_ids);

  std::set<Simplex> unique;
  for (const auto& ids : simplices) {
    if (ids.empty()) throw Error(ErrorKind::InvalidInput, "empty simplex");
    Simplex s;
    for (const auto& id : ids) {
      auto it = d->vertex_lookup.find(id);
      if (it == d->vertex_lookup.end()) throw Error(ErrorKind::UnknownCell, "unknown vertex '" + id + "'");
      s.push_back(it->second);
    }
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end())
      throw Error(ErrorKind::InvalidInput, "vertex repeated inside a simplex");
    unique.insert(std::move(s));
  }
  d->simplices.assign(unique.begin(), unique.end());
  std::sort(d->simplices.begin(), d->simplices.end(), simplex_order);
  for (std::size_t i = 0; i < d->simplices.size(); ++i) {
    const auto& s = d->simplices[i];
    d->simplex_lookup[s] = static_cast<int>(i);
    const std::size_t k = s.size() - 1;
    if (d->by_dim.size() <= k) d->by_dim.resize(k + 1);
    d->by_dim[k].push_back(static_cast<int>(i));
  }
  for (const auto& [id, c] : coords)
    if (!d->vertex_lookup.count(id)) throw Error(ErrorKind::UnknownCell, "coordinates for unknown vertex '" + id + "'");
  d->coords = std::move(coords);
  data_ = std::move(d);
}

SimplicialComplex SimplicialComplex::from_facets(std::vector<std::string> vertex_ids,
                                                 const std::vector<std::vector<std::string>>& facets,
                                                 std::map<std::string, std::vector<Rational>> coords) {
  std::set<std::vector<std::string>> all;
  for (const auto& v : vertex_ids) all.insert({v});
  for (auto f : facets) {
    std::sort(f.begin(), f.end());
    f.erase(std::unique(f.begin(), f.end()), f.end());
    const std::size_t n = f.size();
    for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
      std::vector<std::string> face;
      for (std::size_t i = 0; i < n; ++i)
        if (mask & (std::size_t{1} << i)) face.push_back(f[i]);
      all.insert(std::move(face));
    }
  }
  return SimplicialComplex(std::move(vertex_ids), {all.begin(), all.end()}, std::move(coords));
}

int SimplicialComplex::vertex_count() const { return static_cast<int>(data_->vertex_ids.size()); }
const std::string& SimplicialComplex::vertex_id(int v) const { return data_->vertex_ids.at(v); }

std::optional<int> SimplicialComplex::find_vertex(const std::string& id) const {
  auto it = data_->vertex_lookup.find(id);
  if (it == data_->vertex_lookup.end()) return std::nullopt;
  return it->second;
}

int SimplicialComplex::vertex_index(const std::string& id) const {
  if (auto v = find_vertex(id)) return *v;
  throw Error(ErrorKind::UnknownCell, "unknown vertex '" + id + "'");
}

int SimplicialComplex::size() const { return static_cast<int>(data_->simplices.size()); }
const Simplex& SimplicialComplex::simplex(int i) const { return data_->simplices.at(i); }
int SimplicialComplex::dimension() const { return static_cast<int>(data_->by_dim.size()) - 1; }

const std::vector<int>& SimplicialComplex::simplices_of_dim(int k) const {
  if (k < 0 || k >= static_cast<int>(data_->by_dim.size())) return kNoSimplices;
  return data_->by_dim[k];
}

std::optional<int> SimplicialComplex::find(const Simplex& s) const {
  auto it = data_->simplex_lookup.find(s);
  if (it == data_->simplex_lookup.end()) return std::nullopt;
  return it->second;
}

int SimplicialComplex::index_of(const Simplex& s) const {
  if (auto i = find(s)) return *i;
  std::string label;
  for (int v : s) label += (label.empty() ? "" : ",") + (v >= 0 && v < vertex_count() ? vertex_id(v) : "?");
  throw Error(ErrorKind::UnknownCell, "unknown simplex {" + label + "}");
}

int SimplicialComplex::index_of_ids(const std::vector<std::string>& ids) const {
  Simplex s;
  for (const auto& id : ids) s.push_back(vertex_index(id));
  std::sort(s.begin(), s.end());
  return index_of(s);
}

bool SimplicialComplex::has_coords() const { return !data_->coords.empty(); }

const std::vector<Rational>& SimplicialComplex::coord(int v) const {
  auto it = data_->coords.find(vertex_id(v));
  if (it == data_->coords.end()) throw Error(ErrorKind::UnknownCell, "no coordinates for vertex '" + vertex_id(v) + "'");
  return it->second;
}

const std::map<std::string, std::vector<Rational>>& SimplicialComplex::coords() const { return data_->coords; }

std::vector<std::string> SimplicialComplex::simplex_ids(int i) const {
  std::vector<std::string> ids;
  for (int v : simplex(i)) ids.push_back(vertex_id(v));
  return ids;
}

std::string SimplicialComplex::simplex_label(int i) const {
  std::string label;
  for (int v : simplex(i)) {
    if (!label.empty()) label += ",";
    label += vertex_id(v);
  }
  return label;
}

bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
  if (a.data_ == b.data_) return true;
  return a.data_->vertex_ids == b.data_->vertex_ids && a.data_->simplices == b.data_->simplices &&
         a.data_->coords == b.data_->coords;
}

std::vector<std::string> validate(const SimplicialComplex& k) {
  std::vector<std::string> issues;
  for (int v = 0; v < k.vertex_count(); ++v)
    if (!k.find({v})) issues.push_back("vertex '" + k.vertex_id(v) + "' is not a 0-simplex");

  std::set<Simplex> reported;
  for (int i = 0; i < k.size(); ++i) {
    for (const auto& f : proper_faces(k.simplex(i))) {
      if (k.find(f) || !reported.insert(f).second) continue;
      std::string label;
      for (int v : f) label += (label.empty() ? "" : ",") + k.vertex_id(v);
      issues.push_back("not face-closed: face {" + label + "} of {" + k.simplex_label(i) + "} is missing");
    }
  }

  if (k.has_coords()) {
    std::optional<std::size_t> ambient;
    bool complete = true;
    for (int v = 0; v < k.vertex_count(); ++v) {
      auto it = k.coords().find(k.vertex_id(v));
      if (it == k.coords().end()) {
        issues.push_back("vertex '" + k.vertex_id(v) + "' has no coordinates");
        complete = false;
        continue;
      }
      if (!ambient) ambient = it->second.size();
      if (it->second.size() != *ambient) {
        issues.push_back("vertex '" + k.vertex_id(v) + "' has coordinates of inconsistent length");
        complete = false;
      }
    }
    if (complete) {
      for (int i = 0; i < k.size(); ++i) {
        const Simplex& s = k.simplex(i);
        if (s.size() < 2) continue;
        RationalMatrix diffs(s.size() - 1, *ambient);
        const auto& p0 = k.coord(s[0]);
        for (std::size_t r = 1; r < s.size(); ++r) {
          const auto& p = k.coord(s[r]);
          for (std::size_t c = 0; c < *ambient; ++c) diffs(r - 1, c) = p[c] - p0[c];
        }
        if (rank(diffs) < s.size() - 1) issues.push_back("affinely dependent simplex {" + k.simplex_label(i) + "}");
      }
    }
  }
  return issues;
}

void require_valid(const SimplicialComplex& k) {
  auto issues = validate(k);
  if (!issues.empty()) throw Error(ErrorKind::InvalidComplex, "invalid simplicial complex: " + issues.front(), issues);
}

// ---------------------------------------------------------------------------

CellSpace::CellSpace(std::vector<Cell> cells) : cells_(std::move(cells)) {
  std::sort(cells_.begin(), cells_.end(), [](const Cell& a, const Cell& b) { return a.id < b.id; });
  for (std::size_t i = 0; i < cells_.size(); ++i) {
    if (cells_[i].dim < 0) throw Error(ErrorKind::InvalidInput, "cell '" + cells_[i].id + "' has negative dimension");
    if (i > 0 && cells_[i].id == cells_[i - 1].id)
      throw Error(ErrorKind::InvalidInput, "duplicate cell identifier '" + cells_[i].id + "'");
  }
}

std::optional<int> CellSpace::find(const std::string& id) const {
  auto it = std::lower_bound(cells_.begin(), cells_.end(), id, [](const Cell& c, const std::string& s) { return c.id < s; });
  if (it == cells_.end() || it->id != id) return std::nullopt;
  return static_cast<int>(it - cells_.begin());
}

int CellSpace::index_of(const std::string& id) const {
  if (auto i = find(id)) return *i;
  throw Error(ErrorKind::UnknownCell, "unknown cell '" + id + "'");
}

int cell_count(const Space& space) {
  return std::visit([](const auto& s) { return s.size(); }, space);
}

int cell_dim(const Space& space, int i) {
  if (auto k = std::get_if<SimplicialComplex>(&space)) return k->dim(i);
  return std::get<CellSpace>(space).cell(i).dim;
}

std::string cell_label(const Space& space, int i) {
  if (auto k = std::get_if<SimplicialComplex>(&space)) return k->simplex_label(i);
  return std::get<CellSpace>(space).cell(i).id;
}

int cell_index(const Space& space, const std::string& label) {
  if (auto cs = std::get_if<CellSpace>(&space)) return cs->index_of(label);
  const auto& k = std::get<SimplicialComplex>(space);
  std::vector<std::string> ids;
  std::size_t start = 0;
  while (true) {
    auto comma = label.find(',', start);
    ids.push_back(label.substr(start, comma - start));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return k.index_of_ids(ids);
}

const SimplicialComplex& require_complex(const Space& space, const char* operation) {
  if (auto k = std::get_if<SimplicialComplex>(&space)) return *k;
  throw Error(ErrorKind::CellSpaceUnsupported,
              std::string(operation) + " needs incidence data; cell spaces carry none");
}

// ---------------------------------------------------------------------------

CellularSubset::CellularSubset(Space parent, std::vector<int> cells) : parent_(std::move(parent)), cells_(std::move(cells)) {
  std::sort(cells_.begin(), cells_.end());
  cells_.erase(std::unique(cells_.begin(), cells_.end()), cells_.end());
  const int n = cell_count(parent_);
  for (int c : cells_)
    if (c < 0 || c >= n) throw Error(ErrorKind::UnknownCell, "cell index " + std::to_string(c) + " outside parent");
}

CellularSubset CellularSubset::all(const Space& parent) {
  std::vector<int> cells(cell_count(parent));
  std::iota(cells.begin(), cells.end(), 0);
  return CellularSubset(parent, std::move(cells));
}

bool CellularSubset::contains(int cell) const { return std::binary_search(cells_.begin(), cells_.end(), cell); }

std::vector<std::string> CellularSubset::labels() const {
  std::vector<std::string> out;
  for (int c : cells_) out.push_back(cell_label(parent_, c));
  return out;
}

CellularSubset star(const SimplicialComplex& k, int v) {
  if (v < 0 || v >= k.vertex_count()) throw Error(ErrorKind::UnknownCell, "unknown vertex index");
  std::vector<int> cells;
  for (int i = 0; i < k.size(); ++i) {
    const auto& s = k.simplex(i);
    if (std::binary_search(s.begin(), s.end(), v)) cells.push_back(i);
  }
  return CellularSubset(k, std::move(cells));
}

CellularSubset star(const SimplicialComplex& k, const std::string& vertex_id) { return star(k, k.vertex_index(vertex_id)); }

SimplicialComplex link(const SimplicialComplex& k, const std::string& vertex_id) {
  const int v = k.vertex_index(vertex_id);
  std::set<std::string> vertices;
  std::vector<std::vector<std::string>> simplices;
  for (int i = 0; i < k.size(); ++i) {
    const auto& s = k.simplex(i);
    if (!std::binary_search(s.begin(), s.end(), v) || s.size() == 1) continue;
    std::vector<std::string> ids;
    for (int w : s)
      if (w != v) ids.push_back(k.vertex_id(w));
    vertices.insert(ids.begin(), ids.end());
    simplices.push_back(std::move(ids));
  }
  std::map<std::string, std::vector<Rational>> coords;
  for (const auto& id : vertices)
    if (auto it = k.coords().find(id); it != k.coords().end()) coords.insert(*it);
  return SimplicialComplex({vertices.begin(), vertices.end()}, simplices, std::move(coords));
}

CellularSubset closure(const CellularSubset& s) {
  const auto& k = require_complex(s.parent(), "closure");
  std::set<int> cells(s.cells().begin(), s.cells().end());
  for (int c : s.cells())
    for (const auto& f : proper_faces(k.simplex(c))) cells.insert(k.index_of(f));
  return CellularSubset(k, {cells.begin(), cells.end()});
}

bool is_closed(const CellularSubset& s) { return closure(s).cells() == s.cells(); }

bool is_locally_closed(const CellularSubset& s) {
  const CellularSubset c = closure(s);
  std::vector<int> rest;
  std::set_difference(c.cells().begin(), c.cells().end(), s.cells().begin(), s.cells().end(), std::back_inserter(rest));
  return is_closed(CellularSubset(s.parent(), std::move(rest)));
}

std::vector<CellularSubset> connected_components(const CellularSubset& s) {
  const auto& k = require_complex(s.parent(), "connected_components");
  const auto& cells = s.cells();
  std::vector<int> parent(cells.size());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> root = [&](int x) { return parent[x] == x ? x : parent[x] = root(parent[x]); };
  std::map<int, int> position;
  for (std::size_t i = 0; i < cells.size(); ++i) position[cells[i]] = static_cast<int>(i);

  for (std::size_t i = 0; i < cells.size(); ++i) {
    for (const auto& f : proper_faces(k.simplex(cells[i]))) {
      auto fi = k.find(f);
      if (!fi) continue;
      auto it = position.find(*fi);
      if (it == position.end()) continue;
      int a = root(static_cast<int>(i)), b = root(it->second);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }
  // Roots are the smallest member positions, so ordering by root orders by smallest cell.
  std::map<int, std::vector<int>> groups;
  for (std::size_t i = 0; i < cells.size(); ++i) groups[root(static_cast<int>(i))].push_back(cells[i]);
  std::vector<CellularSubset> out;
  for (auto& [r, members] : groups) out.emplace_back(k, std::move(members));
  return out;
}

std::vector<CellularSubset> connected_components(const SimplicialComplex& k) {
  return connected_components(CellularSubset::all(k));
}

Subcomplex subcomplex(const CellularSubset& closed) {
  const auto& k = require_complex(closed.parent(), "subcomplex");
  if (!is_closed(closed)) throw Error(ErrorKind::InvalidInput, "subcomplex requires a closed cellular subset");
  std::set<std::string> vertices;
  std::vector<std::vector<std::string>> simplices;
  for (int c : closed.cells()) {
    auto ids = k.simplex_ids(c);
    vertices.insert(ids.begin(), ids.end());
    simplices.push_back(std::move(ids));
  }
  std::map<std::string, std::vector<Rational>> coords;
  for (const auto& id : vertices)
    if (auto it = k.coords().find(id); it != k.coords().end()) coords.insert(*it);
  Subcomplex out{SimplicialComplex({vertices.begin(), vertices.end()}, simplices, std::move(coords)), {}};
  for (int i = 0; i < out.complex.size(); ++i) out.parent_index.push_back(k.index_of_ids(out.complex.simplex_ids(i)));
  return out;
}

// ---------------------------------------------------------------------------

std::string barycenter_id(const std::vector<std::string>& sorted_ids) {
  if (sorted_ids.size() == 1) return sorted_ids.front();
  std::string id = "[";
  for (std::size_t i = 0; i < sorted_ids.size(); ++i) id += (i ? "|" : "") + sorted_ids[i];
  return id + "]";
}

Subdivision barycentric_subdivide(const SimplicialComplex& k) {
  require_valid(k);
  std::vector<std::string> ids(k.size());
  for (int i = 0; i < k.size(); ++i) ids[i] = barycenter_id(k.simplex_ids(i));

  // chains[i]: all chains of the face order whose top element is simplex i.
  std::vector<std::vector<std::vector<int>>> chains(k.size());
  for (int i = 0; i < k.size(); ++i) {
    chains[i].push_back({i});
    for (const auto& f : proper_faces(k.simplex(i)))
      for (auto c : chains[k.index_of(f)]) {
        c.push_back(i);
        chains[i].push_back(std::move(c));
      }
  }

  std::vector<std::vector<std::string>> simplices;
  std::map<std::vector<std::string>, int> carrier_of;
  for (int i = 0; i < k.size(); ++i)
    for (const auto& c : chains[i]) {
      std::vector<std::string> s;
      for (int member : c) s.push_back(ids[member]);
      std::sort(s.begin(), s.end());
      carrier_of[s] = i;
      simplices.push_back(std::move(s));
    }

  std::map<std::string, std::vector<Rational>> coords;
  if (k.has_coords()) {
    for (int i = 0; i < k.size(); ++i) {
      const Simplex& s = k.simplex(i);
      std::vector<Rational> b = k.coord(s[0]);
      for (std::size_t j = 1; j < s.size(); ++j) {
        const auto& p = k.coord(s[j]);
        for (std::size_t c = 0; c < b.size(); ++c) b[c] += p[c];
      }
      for (auto& x : b) x /= Rational(static_cast<long long>(s.size()));
      coords[ids[i]] = std::move(b);
    }
  }

  Subdivision out{SimplicialComplex(ids, simplices, std::move(coords)), {}, {}};
  out.carrier.resize(out.complex.size());
  for (int j = 0; j < out.complex.size(); ++j) out.carrier[j] = carrier_of.at(out.complex.simplex_ids(j));
  for (int i = 0; i < k.size(); ++i) out.barycenter_vertex.push_back(out.complex.vertex_index(ids[i]));
  return out;
}

SubdivisionTower::SubdivisionTower(const SimplicialComplex& base, int levels) {
  if (levels < 0) throw Error(ErrorKind::InvalidInput, "negative subdivision level");
  require_valid(base);
  complexes_.push_back(base);
  for (int v = 0; v < base.vertex_count(); ++v) barycentric_.push_back({{v, Rational(1)}});
  for (int j = 0; j < levels; ++j) {
    steps_.push_back(barycentric_subdivide(complexes_.back()));
    const Subdivision& sd = steps_.back();
    std::vector<std::map<int, Rational>> next(sd.complex.vertex_count());
    const SimplicialComplex& prev = complexes_.back();
    for (int i = 0; i < prev.size(); ++i) {
      const Simplex& s = prev.simplex(i);
      auto& b = next[sd.barycenter_vertex[i]];
      for (int v : s)
        for (const auto& [w, x] : barycentric_[v]) b[w] += x / Rational(static_cast<long long>(s.size()));
    }
    barycentric_ = std::move(next);
    complexes_.push_back(sd.complex);
  }
  const SimplicialComplex& t = complexes_.back();
  base_carrier_.resize(t.size());
  for (int i = 0; i < t.size(); ++i) {
    std::set<int> support;
    for (int v : t.simplex(i))
      for (const auto& [w, x] : barycentric_[v]) support.insert(w);
    base_carrier_[i] = base.index_of({support.begin(), support.end()});
  }
}

// ---------------------------------------------------------------------------

SimplicialMap::SimplicialMap(SimplicialComplex source, SimplicialComplex target, std::vector<int> vertex_map)
    : source_(std::move(source)), target_(std::move(target)), map_(std::move(vertex_map)) {
  if (static_cast<int>(map_.size()) != source_.vertex_count())
    throw Error(ErrorKind::NonSimplicialMap, "vertex map does not cover every source vertex");
  for (int w : map_)
    if (w < 0 || w >= target_.vertex_count()) throw Error(ErrorKind::NonSimplicialMap, "vertex map leaves the target");
  image_.resize(source_.size());
  for (int i = 0; i < source_.size(); ++i) {
    Simplex img;
    for (int v : source_.simplex(i)) img.push_back(map_[v]);
    std::sort(img.begin(), img.end());
    img.erase(std::unique(img.begin(), img.end()), img.end());
    auto t = target_.find(img);
    if (!t) throw Error(ErrorKind::NonSimplicialMap, "image of {" + source_.simplex_label(i) + "} is not a simplex");
    image_[i] = *t;
  }
}

SimplicialMap SimplicialMap::from_ids(SimplicialComplex source, SimplicialComplex target,
                                      const std::map<std::string, std::string>& vertex_map) {
  std::vector<int> m(source.vertex_count(), -1);
  for (const auto& [from, to] : vertex_map) {
    auto v = source.find_vertex(from);
    if (!v) throw Error(ErrorKind::UnknownCell, "vertex map names unknown source vertex '" + from + "'");
    auto w = target.find_vertex(to);
    if (!w) throw Error(ErrorKind::UnknownCell, "vertex map names unknown target vertex '" + to + "'");
    m[*v] = *w;
  }
  for (int v = 0; v < source.vertex_count(); ++v)
    if (m[v] < 0) throw Error(ErrorKind::NonSimplicialMap, "vertex '" + source.vertex_id(v) + "' has no image");
  return SimplicialMap(std::move(source), std::move(target), std::move(m));
}

SimplicialMap SimplicialMap::identity(const SimplicialComplex& k) {
  std::vector<int> m(k.vertex_count());
  std::iota(m.begin(), m.end(), 0);
  return SimplicialMap(k, k, std::move(m));
}

SimplicialMap compose(const SimplicialMap& g, const SimplicialMap& h) {
  if (!(h.target() == g.source())) throw Error(ErrorKind::ShapeMismatch, "maps are not composable");
  std::vector<int> m(h.source().vertex_count());
  for (int v = 0; v < h.source().vertex_count(); ++v) m[v] = g(h(v));
  return SimplicialMap(h.source(), g.target(), std::move(m));
}

}  // namespace lefscalc
