#pragma once

#include "lefscalc/rational.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace lefscalc {

/// Sorted vertex indices of one simplex.
using Simplex = std::vector<int>;

/// Finite abstract simplicial complex with optional rational vertex
/// coordinates. Vertices are kept in lexicographic order of their
/// identifiers, simplices in (dimension, lexicographic) order, so every
/// derived output is byte-stable. The value is immutable and cheap to copy.
///
/// Construction does not enforce face-closure; use validate() to get the
/// list of violated invariants. Global injectivity of an embedding is a
/// caller obligation: only per-simplex affine independence is checked.
class SimplicialComplex {
 public:
  SimplicialComplex();
  /// Throws InvalidInput on duplicate vertex ids, empty simplices or vertices
  /// repeated inside a simplex, UnknownCell on undeclared vertex ids.
  SimplicialComplex(std::vector<std::string> vertex_ids,
                    const std::vector<std::vector<std::string>>& simplices,
                    std::map<std::string, std::vector<Rational>> coords = {});

  /// Builds the face-closure of the given facets (every vertex becomes a 0-simplex).
  static SimplicialComplex from_facets(std::vector<std::string> vertex_ids,
                                       const std::vector<std::vector<std::string>>& facets,
                                       std::map<std::string, std::vector<Rational>> coords = {});

  int vertex_count() const;
  const std::string& vertex_id(int v) const;
  std::optional<int> find_vertex(const std::string& id) const;
  /// Throws UnknownCell.
  int vertex_index(const std::string& id) const;

  int size() const;
  const Simplex& simplex(int i) const;
  int dim(int i) const { return static_cast<int>(simplex(i).size()) - 1; }
  /// Maximum simplex dimension; -1 when empty.
  int dimension() const;
  const std::vector<int>& simplices_of_dim(int k) const;
  std::optional<int> find(const Simplex& s) const;
  /// Throws UnknownCell.
  int index_of(const Simplex& s) const;
  /// Index of the simplex with these vertex ids (any order). Throws UnknownCell.
  int index_of_ids(const std::vector<std::string>& ids) const;

  bool has_coords() const;
  const std::vector<Rational>& coord(int v) const;
  const std::map<std::string, std::vector<Rational>>& coords() const;

  std::vector<std::string> simplex_ids(int i) const;
  /// Comma-joined vertex ids, e.g. "a,b,c".
  std::string simplex_label(int i) const;

  friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b);

 private:
  struct Data;
  explicit SimplicialComplex(std::shared_ptr<const Data> data) : data_(std::move(data)) {}
  std::shared_ptr<const Data> data_;
};

/// Diagnostics for every violated invariant; empty iff the complex is valid.
std::vector<std::string> validate(const SimplicialComplex& k);
/// Throws InvalidComplex carrying the diagnostics.
void require_valid(const SimplicialComplex& k);

/// Bare cells with dimensions and optional component labels; no incidence.
struct Cell {
  std::string id;
  int dim = 0;
  std::string component;  // empty when unlabelled
  friend bool operator==(const Cell&, const Cell&) = default;
};

class CellSpace {
 public:
  CellSpace() = default;
  /// Cells are sorted by id. Throws InvalidInput on duplicate ids or negative dimensions.
  explicit CellSpace(std::vector<Cell> cells);

  int size() const { return static_cast<int>(cells_.size()); }
  const Cell& cell(int i) const { return cells_.at(i); }
  const std::vector<Cell>& cells() const { return cells_; }
  std::optional<int> find(const std::string& id) const;
  int index_of(const std::string& id) const;

  friend bool operator==(const CellSpace&, const CellSpace&) = default;

 private:
  std::vector<Cell> cells_;
};

/// Either kind of substrate a constructible function or subset can live on.
using Space = std::variant<SimplicialComplex, CellSpace>;

int cell_count(const Space& space);
int cell_dim(const Space& space, int i);
std::string cell_label(const Space& space, int i);
/// Resolves a label ("a,b" for simplices, the id for cells). Throws UnknownCell.
int cell_index(const Space& space, const std::string& label);
/// Throws CellSpaceUnsupported when the space carries no incidence.
const SimplicialComplex& require_complex(const Space& space, const char* operation);

/// Union of open cells of a parent space; no closure requirement.
class CellularSubset {
 public:
  CellularSubset() = default;
  /// Throws UnknownCell for out-of-range indices.
  CellularSubset(Space parent, std::vector<int> cells);
  static CellularSubset all(const Space& parent);

  const Space& parent() const { return parent_; }
  const std::vector<int>& cells() const { return cells_; }
  int size() const { return static_cast<int>(cells_.size()); }
  bool empty() const { return cells_.empty(); }
  bool contains(int cell) const;
  std::vector<std::string> labels() const;

  friend bool operator==(const CellularSubset& a, const CellularSubset& b) {
    return a.cells_ == b.cells_ && a.parent_ == b.parent_;
  }

 private:
  Space parent_;
  std::vector<int> cells_;
};

/// All simplices containing vertex v (an open neighbourhood of v).
CellularSubset star(const SimplicialComplex& k, int v);
CellularSubset star(const SimplicialComplex& k, const std::string& vertex_id);
/// {s : s u {v} in K, v not in s}, as a complex on the vertices it uses.
SimplicialComplex link(const SimplicialComplex& k, const std::string& vertex_id);
/// All faces of members.
CellularSubset closure(const CellularSubset& s);
/// True when every face of a member is a member.
bool is_closed(const CellularSubset& s);
/// closure(s) minus s is closed.
bool is_locally_closed(const CellularSubset& s);

/// Components under the relation "one is a face of the other" (topological
/// connectivity of a union of open simplices), ordered by smallest member.
std::vector<CellularSubset> connected_components(const CellularSubset& s);
std::vector<CellularSubset> connected_components(const SimplicialComplex& k);

/// The closed subcomplex on the members of s (which must be closed), with the
/// parent's vertex ids; index_map[i] is the parent index of simplex i.
struct Subcomplex {
  SimplicialComplex complex;
  std::vector<int> parent_index;
};
Subcomplex subcomplex(const CellularSubset& closed);

struct Subdivision {
  SimplicialComplex complex;
  /// For each simplex of the subdivision, the smallest simplex of the
  /// original complex containing it.
  std::vector<int> carrier;
  /// Vertex of the subdivision standing at the barycenter of each original simplex.
  std::vector<int> barycenter_vertex;
};

/// Id of the subdivision vertex at the barycenter of a simplex with these
/// (sorted) vertex ids: the id itself for a vertex, else "[a|b|...]".
std::string barycenter_id(const std::vector<std::string>& sorted_ids);

/// One vertex per simplex, one simplex per chain of the face order;
/// barycentric coordinates when the input is embedded.
Subdivision barycentric_subdivide(const SimplicialComplex& k);

/// Iterated subdivisions K = K_0, K_1 = sd K_0, ... with barycentric
/// coordinates of the top-level vertices relative to the base vertices.
class SubdivisionTower {
 public:
  SubdivisionTower(const SimplicialComplex& base, int levels);

  int levels() const { return static_cast<int>(steps_.size()); }
  const SimplicialComplex& base() const { return complexes_.front(); }
  const SimplicialComplex& level(int j) const { return complexes_.at(j); }
  const SimplicialComplex& top() const { return complexes_.back(); }
  /// Subdivision taking level j to level j+1.
  const Subdivision& step(int j) const { return steps_.at(j); }
  /// Barycentric coordinates (base vertex -> weight) of a top-level vertex.
  const std::map<int, Rational>& barycentric(int top_vertex) const { return barycentric_.at(top_vertex); }
  /// Smallest base simplex containing a top-level simplex.
  int base_carrier(int top_simplex) const { return base_carrier_.at(top_simplex); }

 private:
  std::vector<SimplicialComplex> complexes_;
  std::vector<Subdivision> steps_;
  std::vector<std::map<int, Rational>> barycentric_;
  std::vector<int> base_carrier_;
};

/// Vertex map between complexes. Construction checks simplicity.
class SimplicialMap {
 public:
  /// Throws NonSimplicialMap when some simplex image is not a simplex.
  SimplicialMap(SimplicialComplex source, SimplicialComplex target, std::vector<int> vertex_map);
  static SimplicialMap from_ids(SimplicialComplex source, SimplicialComplex target,
                                const std::map<std::string, std::string>& vertex_map);
  static SimplicialMap identity(const SimplicialComplex& k);

  const SimplicialComplex& source() const { return source_; }
  const SimplicialComplex& target() const { return target_; }
  int operator()(int v) const { return map_.at(v); }
  const std::vector<int>& vertex_map() const { return map_; }
  /// Index in the target of the image of source simplex i.
  int image(int i) const { return image_.at(i); }

 private:
  SimplicialComplex source_;
  SimplicialComplex target_;
  std::vector<int> map_;
  std::vector<int> image_;
};

/// (g o h): first h, then g.
SimplicialMap compose(const SimplicialMap& g, const SimplicialMap& h);

}  // namespace lefscalc
