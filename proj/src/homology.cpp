#include "lefscalc/homology.hpp"

#include "lefscalc/error.hpp"

#include <algorithm>
#include <map>

namespace lefscalc {

namespace {

// Position of each simplex index inside its degree's basis, -1 when absent.
std::vector<int> basis_positions(const ChainComplexQ& c) {
  std::vector<int> pos(c.complex.size(), -1);
  for (const auto& b : c.basis)
    for (std::size_t i = 0; i < b.size(); ++i) pos[b[i]] = static_cast<int>(i);
  return pos;
}

ChainComplexQ build_chain_complex(const SimplicialComplex& k, const std::vector<bool>& member) {
  ChainComplexQ c;
  c.complex = k;
  for (int d = 0; d <= k.dimension(); ++d) {
    std::vector<int> b;
    for (int i : k.simplices_of_dim(d))
      if (member[i]) b.push_back(i);
    c.basis.push_back(std::move(b));
  }
  while (!c.basis.empty() && c.basis.back().empty()) c.basis.pop_back();

  const auto pos = basis_positions(c);
  for (int d = 0; d <= c.top_degree(); ++d) {
    RationalMatrix m(d == 0 ? 0 : c.basis[d - 1].size(), c.basis[d].size());
    if (d > 0) {
      for (std::size_t j = 0; j < c.basis[d].size(); ++j) {
        const Simplex& s = k.simplex(c.basis[d][j]);
        for (std::size_t i = 0; i < s.size(); ++i) {
          Simplex face = s;
          face.erase(face.begin() + static_cast<long>(i));
          const int f = k.index_of(face);
          if (pos[f] >= 0 && member[f]) m(pos[f], j) = (i % 2 == 0) ? 1 : -1;
        }
      }
    }
    c.boundary.push_back(std::move(m));
  }
  for (int d = 2; d <= c.top_degree(); ++d) {
    const RationalMatrix dd = c.boundary[d - 1] * c.boundary[d];
    if (!(dd == RationalMatrix(dd.rows(), dd.cols())))
      throw Error(ErrorKind::InvalidComplex, "boundary of a boundary is nonzero");
  }
  return c;
}

// Sorts an ordered vertex tuple, returning the permutation sign (0 on repeats).
int sort_with_sign(std::vector<int>& v) {
  int sign = 1;
  for (std::size_t i = 1; i < v.size(); ++i)
    for (std::size_t j = i; j > 0 && v[j - 1] >= v[j]; --j) {
      if (v[j - 1] == v[j]) return 0;
      std::swap(v[j - 1], v[j]);
      sign = -sign;
    }
  return sign;
}

RationalMatrix rows_cols_zero_pad(std::size_t r, std::size_t c) { return RationalMatrix(r, c); }

}  // namespace

ChainComplexQ chain_complex(const SimplicialComplex& k) {
  require_valid(k);
  return build_chain_complex(k, std::vector<bool>(k.size(), true));
}

ChainComplexQ relative_chain_complex(const CellularSubset& a, const CellularSubset& b) {
  const auto& k = require_complex(a.parent(), "relative_chain_complex");
  require_valid(k);
  if (!is_closed(a) || !is_closed(b)) throw Error(ErrorKind::InvalidInput, "relative chains need closed subcomplexes");
  std::vector<bool> member(k.size(), false);
  for (int c : a.cells()) member[c] = !b.contains(c);
  for (int c : b.cells())
    if (!a.contains(c)) throw Error(ErrorKind::InvalidInput, "relative chains need B inside A");
  ChainComplexQ c = build_chain_complex(k, member);
  // Keep a degree slot for every dimension of A so degree indices line up.
  int top = -1;
  for (int x : a.cells()) top = std::max(top, k.dim(x));
  while (c.top_degree() < top) {
    c.boundary.push_back(rows_cols_zero_pad(c.rank_in(c.top_degree()), 0));
    c.basis.emplace_back();
  }
  return c;
}

std::vector<int> betti(const ChainComplexQ& c) {
  std::vector<int> out;
  for (int d = 0; d <= c.top_degree(); ++d) {
    const int n = static_cast<int>(c.rank_in(d));
    const int rank_here = static_cast<int>(rank(c.boundary[d]));
    const int rank_above = d < c.top_degree() ? static_cast<int>(rank(c.boundary[d + 1])) : 0;
    out.push_back(n - rank_here - rank_above);
  }
  return out;
}

std::vector<int> betti(const SimplicialComplex& k) { return betti(chain_complex(k)); }

std::vector<int> relative_betti(const SimplicialComplex& k, const CellularSubset& l) {
  if (!is_closed(l)) throw Error(ErrorKind::InvalidInput, "relative homology needs a closed subcomplex L");
  auto b = betti(relative_chain_complex(CellularSubset::all(k), l));
  b.resize(std::max(0, k.dimension() + 1), 0);
  return b;
}

ChainMapQ subdivision_chain_map(const SimplicialComplex& k, const Subdivision& sd) {
  using Chain = std::map<int, Rational>;  // keyed by sd simplex index
  const SimplicialComplex& fine = sd.complex;
  std::vector<Chain> image(k.size());
  for (int i = 0; i < k.size(); ++i) {  // faces precede cofaces in canonical order
    const Simplex& s = k.simplex(i);
    const int b = sd.barycenter_vertex[i];
    if (s.size() == 1) {
      image[i][fine.index_of({b})] = 1;
      continue;
    }
    Chain& out = image[i];
    for (std::size_t f = 0; f < s.size(); ++f) {
      Simplex face = s;
      face.erase(face.begin() + static_cast<long>(f));
      const Rational face_sign = (f % 2 == 0) ? 1 : -1;
      for (const auto& [t, x] : image[k.index_of(face)]) {
        std::vector<int> cone{b};
        const Simplex& ts = fine.simplex(t);
        cone.insert(cone.end(), ts.begin(), ts.end());
        const int sign = sort_with_sign(cone);
        if (sign == 0) continue;
        out[fine.index_of(cone)] += face_sign * x * Rational(sign);
      }
    }
    std::erase_if(out, [](const auto& e) { return e.second.is_zero(); });
  }

  ChainMapQ c{chain_complex(k), chain_complex(fine), {}};
  const auto pos = basis_positions(c.target);
  for (int d = 0; d <= c.source.top_degree(); ++d) {
    RationalMatrix m(c.target.rank_in(d), c.source.rank_in(d));
    for (std::size_t j = 0; j < c.source.basis[d].size(); ++j)
      for (const auto& [t, x] : image[c.source.basis[d][j]]) m(pos[t], j) = x;
    c.degree.push_back(std::move(m));
  }
  return c;
}

ChainMapQ chain_map_of(const SimplicialMap& g) {
  ChainMapQ c{chain_complex(g.source()), chain_complex(g.target()), {}};
  const auto pos = basis_positions(c.target);
  for (int d = 0; d <= c.source.top_degree(); ++d) {
    RationalMatrix m(c.target.rank_in(d), c.source.rank_in(d));
    for (std::size_t j = 0; j < c.source.basis[d].size(); ++j) {
      std::vector<int> img;
      for (int v : g.source().simplex(c.source.basis[d][j])) img.push_back(g(v));
      const int sign = sort_with_sign(img);
      if (sign == 0) continue;
      m(pos[g.target().index_of(img)], j) = sign;
    }
    c.degree.push_back(std::move(m));
  }
  return c;
}

ChainMapQ compose(const ChainMapQ& c2, const ChainMapQ& c1) {
  ChainMapQ c{c1.source, c2.target, {}};
  for (int d = 0; d <= c1.source.top_degree(); ++d) {
    const std::size_t rows = c2.target.rank_in(d);
    if (d >= static_cast<int>(c2.degree.size())) {
      c.degree.emplace_back(rows, c1.source.rank_in(d));
      continue;
    }
    if (c2.degree[d].cols() != c1.degree[d].rows()) throw Error(ErrorKind::ShapeMismatch, "chain maps are not composable");
    c.degree.push_back(c2.degree[d] * c1.degree[d]);
  }
  return c;
}

ChainMapQ chain_map_of(const SelfMapSpec& f) {
  const SubdivisionTower& tower = f.tower();
  ChainMapQ total = chain_map_of(f.map());
  for (int j = tower.levels() - 1; j >= 0; --j)
    total = compose(total, subdivision_chain_map(tower.level(j), tower.step(j)));
  return total;
}

namespace {

void require_endomorphism(const ChainMapQ& c) {
  if (c.source.top_degree() != c.target.top_degree() || c.degree.size() != c.source.basis.size())
    throw Error(ErrorKind::ShapeMismatch, "trace needs an endomorphism of one chain complex");
  for (int d = 0; d <= c.source.top_degree(); ++d)
    if (c.source.basis[d].size() != c.target.basis[d].size() || !c.degree[d].is_square())
      throw Error(ErrorKind::ShapeMismatch, "trace needs an endomorphism of one chain complex");
}

}  // namespace

Rational hopf_trace(const ChainMapQ& c) {
  require_endomorphism(c);
  Rational total;
  for (int d = 0; d <= c.source.top_degree(); ++d) total += Rational(parity_sign(d)) * trace(c.degree[d]);
  return total;
}

Rational homology_trace(const ChainMapQ& c, int k) {
  require_endomorphism(c);
  const ChainComplexQ& cx = c.source;
  if (k < 0 || k > cx.top_degree() || cx.basis[k].empty()) return 0;
  const std::size_t n = cx.basis[k].size();

  const RationalMatrix cycles = null_space(cx.boundary[k]);
  const RationalMatrix boundaries = k < cx.top_degree() ? cx.boundary[k + 1] : RationalMatrix(n, 0);

  // Cycle columns that are independent modulo the boundaries span H_k.
  RationalMatrix joined(n, boundaries.cols() + cycles.cols());
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t j = 0; j < boundaries.cols(); ++j) joined(r, j) = boundaries(r, j);
    for (std::size_t j = 0; j < cycles.cols(); ++j) joined(r, boundaries.cols() + j) = cycles(r, j);
  }
  std::vector<std::size_t> homology_cols;
  for (auto p : row_echelon(joined).pivots)
    if (p >= boundaries.cols()) homology_cols.push_back(p - boundaries.cols());
  if (homology_cols.empty()) return 0;

  const std::size_t h = homology_cols.size();
  RationalMatrix system(n, h + boundaries.cols());
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t j = 0; j < h; ++j) system(r, j) = cycles(r, homology_cols[j]);
    for (std::size_t j = 0; j < boundaries.cols(); ++j) system(r, h + j) = boundaries(r, j);
  }

  Rational total;
  for (std::size_t i = 0; i < h; ++i) {
    const auto image = c.degree[k] * cycles.column(homology_cols[i]);
    auto sol = solve(system, image);
    if (!sol) throw Error(ErrorKind::ShapeMismatch, "chain map does not send cycles to cycles");
    total += sol->particular[i];
  }
  return total;
}

Rational lefschetz_number(const ChainMapQ& c) {
  Rational total;
  for (int d = 0; d <= c.source.top_degree(); ++d) total += Rational(parity_sign(d)) * homology_trace(c, d);
  return total;
}

ChainMapQ restrict_to_pair(const ChainMapQ& c, const CellularSubset& a, const CellularSubset& b) {
  require_endomorphism(c);
  const ChainComplexQ rel = relative_chain_complex(a, b);
  const ChainComplexQ& full = c.source;
  const auto full_pos = basis_positions(full);

  ChainMapQ out{rel, rel, {}};
  for (int d = 0; d <= rel.top_degree(); ++d) {
    const auto& m = d <= full.top_degree() ? c.degree[d] : RationalMatrix();
    // Chains of A must stay in A, chains of B in B.
    for (std::size_t j = 0; d <= full.top_degree() && j < full.basis[d].size(); ++j) {
      const int col = full.basis[d][j];
      if (!a.contains(col)) continue;
      for (std::size_t i = 0; i < full.basis[d].size(); ++i) {
        if (m(i, j).is_zero()) continue;
        const int row = full.basis[d][i];
        if (!a.contains(row) || (b.contains(col) && !b.contains(row)))
          throw Error(ErrorKind::NotInvariant, "chain map does not preserve the pair at {" +
                                                   full.complex.simplex_label(col) + "}");
      }
    }
    std::vector<std::size_t> idx;
    for (int s : rel.basis[d]) idx.push_back(static_cast<std::size_t>(full_pos[s]));
    out.degree.push_back(d <= full.top_degree() ? m.select(idx, idx) : RationalMatrix(0, 0));
  }
  return out;
}

Rational relative_lefschetz_number(const ChainMapQ& c, const CellularSubset& l) {
  return lefschetz_number(restrict_to_pair(c, CellularSubset::all(c.source.complex), l));
}

Rational pair_lefschetz_number(const SelfMapSpec& f, const CellularSubset& a, const CellularSubset& b) {
  if (!is_closed(a) || !is_closed(b)) throw Error(ErrorKind::InvalidInput, "pair must consist of closed subcomplexes");
  if (!is_invariant(f, a) || !is_invariant(f, b))
    throw Error(ErrorKind::NotInvariant, "subcomplex is not invariant under the map");
  return lefschetz_number(restrict_to_pair(chain_map_of(f), a, b));
}

Rational relative_lefschetz_number(const SelfMapSpec& f, const CellularSubset& l) {
  return pair_lefschetz_number(f, CellularSubset::all(f.base()), l);
}

}  // namespace lefscalc
