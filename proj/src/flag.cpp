#include "lefscalc/flag.hpp"

#include "lefscalc/error.hpp"
#include "lefscalc/homology.hpp"
#include "lefscalc/microlocal.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace lefscalc {

int inversions(const Permutation& w) {
  int count = 0;
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = i + 1; j < w.size(); ++j)
      if (w[i] > w[j]) ++count;
  return count;
}

bool bruhat_leq(const Permutation& u, const Permutation& w) {
  if (u.size() != w.size()) return false;
  for (std::size_t k = 1; k < u.size(); ++k) {
    Permutation a(u.begin(), u.begin() + static_cast<long>(k));
    Permutation b(w.begin(), w.begin() + static_cast<long>(k));
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    for (std::size_t i = 0; i < k; ++i)
      if (a[i] > b[i]) return false;
  }
  return true;
}

std::string permutation_id(const Permutation& w) {
  std::string s;
  for (int x : w) s += std::to_string(x);
  return s;
}

Permutation parse_permutation(const std::string& text, int n) {
  Permutation w(n);
  std::iota(w.begin(), w.end(), 1);
  auto bad = [&]() { return Error(ErrorKind::UnknownCell, "not a permutation of 1.." + std::to_string(n) + ": '" + text + "'"); };
  if (text.find('(') == std::string::npos) {
    if (static_cast<int>(text.size()) != n) throw bad();
    for (int i = 0; i < n; ++i) {
      if (!std::isdigit(static_cast<unsigned char>(text[i]))) throw bad();
      w[i] = text[i] - '0';
    }
  } else {
    // Compose cycles right to left, acting on positions: w = c_1 c_2 ... c_m.
    std::vector<std::vector<int>> cycles;
    std::vector<int> current;
    bool open = false;
    for (char ch : text) {
      if (ch == '(') {
        if (open) throw bad();
        open = true;
        current.clear();
      } else if (ch == ')') {
        if (!open) throw bad();
        open = false;
        cycles.push_back(current);
      } else if (std::isdigit(static_cast<unsigned char>(ch))) {
        if (!open) throw bad();
        current.push_back(ch - '0');
      } else if (ch != ',' && ch != ' ') {
        throw bad();
      }
    }
    if (open) throw bad();
    for (auto it = cycles.rbegin(); it != cycles.rend(); ++it) {
      Permutation c(n);
      std::iota(c.begin(), c.end(), 1);
      for (std::size_t i = 0; i < it->size(); ++i) {
        const int from = (*it)[i], to = (*it)[(i + 1) % it->size()];
        if (from < 1 || from > n || to < 1 || to > n) throw bad();
        c[from - 1] = to;
      }
      Permutation composed(n);
      for (int i = 0; i < n; ++i) composed[i] = c[w[i] - 1];
      w = std::move(composed);
    }
  }
  Permutation sorted = w;
  std::sort(sorted.begin(), sorted.end());
  for (int i = 0; i < n; ++i)
    if (sorted[i] != i + 1) throw bad();
  return w;
}

int BruhatCellSpace::index_of(const Permutation& w) const {
  auto it = std::lower_bound(permutations.begin(), permutations.end(), w);
  if (it == permutations.end() || *it != w) throw Error(ErrorKind::UnknownCell, "unknown permutation " + permutation_id(w));
  return static_cast<int>(it - permutations.begin());
}

BruhatCellSpace flag_cellspace(int n) {
  if (n < 1 || n > kMaxFlagRank)
    throw Error(ErrorKind::BoundExceeded, "flag rank must be in 1.." + std::to_string(kMaxFlagRank));
  BruhatCellSpace space;
  space.n = n;
  Permutation w(n);
  std::iota(w.begin(), w.end(), 1);
  std::vector<Cell> cells;
  do {
    space.permutations.push_back(w);
    cells.push_back({permutation_id(w), 2 * inversions(w), ""});
  } while (std::next_permutation(w.begin(), w.end()));
  space.cells = CellSpace(std::move(cells));
  return space;
}

CellularSubset schubert_subset(const BruhatCellSpace& space, const Permutation& w, bool closed) {
  const int top = space.index_of(w);
  if (!closed) return CellularSubset(space.cells, {top});
  std::vector<int> cells;
  for (int i = 0; i < static_cast<int>(space.permutations.size()); ++i)
    if (space.leq(i, top)) cells.push_back(i);
  return CellularSubset(space.cells, std::move(cells));
}

CellularSubset schubert_complement(const BruhatCellSpace& space, const Permutation& w) {
  const int top = space.index_of(w);
  std::vector<int> cells;
  for (int i = 0; i < static_cast<int>(space.permutations.size()); ++i)
    if (i != top) cells.push_back(i);
  return CellularSubset(space.cells, std::move(cells));
}

CellSpace fixed_locus_cellspace(int n, const std::vector<int>& blocks) {
  if (n < 1 || n > kMaxFlagRank)
    throw Error(ErrorKind::BoundExceeded, "flag rank must be in 1.." + std::to_string(kMaxFlagRank));
  if (blocks.empty() || std::any_of(blocks.begin(), blocks.end(), [](int b) { return b <= 0; }) ||
      std::accumulate(blocks.begin(), blocks.end(), 0) != n)
    throw Error(ErrorKind::BadPartition, "block sizes must be positive and sum to " + std::to_string(n));

  std::vector<BruhatCellSpace> factors;
  for (int b : blocks) factors.push_back(flag_cellspace(b));

  std::string word;
  for (std::size_t j = 0; j < blocks.size(); ++j) word.append(static_cast<std::size_t>(blocks[j]), static_cast<char>('1' + j));

  std::vector<Cell> cells;
  do {
    // Odometer over one Bruhat cell per factor.
    std::vector<std::size_t> pick(factors.size(), 0);
    while (true) {
      std::string id = word + ":";
      int dim = 0;
      for (std::size_t j = 0; j < factors.size(); ++j) {
        const Cell& c = factors[j].cells.cell(static_cast<int>(pick[j]));
        id += (j ? "." : "") + c.id;
        dim += c.dim;
      }
      cells.push_back({id, dim, word});
      std::size_t j = 0;
      while (j < factors.size() && ++pick[j] == factors[j].permutations.size()) pick[j++] = 0;
      if (j == factors.size()) break;
    }
  } while (std::next_permutation(word.begin(), word.end()));
  return CellSpace(std::move(cells));
}

// ---------------------------------------------------------------------------

namespace {

RationalMatrix diagonal(const std::vector<Rational>& d) {
  RationalMatrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

PatternComponent sphere_component(std::string label, bool point_in_v, bool cell_in_v, std::vector<Rational> normal) {
  return {std::move(label), 2, {{"pt", 0, point_in_v}, {"cell", 2, cell_in_v}}, diagonal(normal)};
}

std::optional<TracedProblem> sphere_model(const PatternComponent& c, const Assumptions& assumptions) {
  if (c.cells.size() != 2) return std::nullopt;
  const PatternCell* point = nullptr;
  const PatternCell* disk = nullptr;
  for (const auto& cell : c.cells) {
    if (cell.dim == 0) point = &cell;
    if (cell.dim == 2) disk = &cell;
  }
  if (!point || !disk) return std::nullopt;

  // Boundary of a tetrahedron; vertex p is the 0-cell, the rest is the open 2-cell.
  const auto sphere = SimplicialComplex::from_facets({"p", "q1", "q2", "q3"},
                                                     {{"p", "q1", "q2"}, {"p", "q1", "q3"}, {"p", "q2", "q3"}, {"q1", "q2", "q3"}});
  const int p = sphere.index_of_ids({"p"});
  std::vector<int> v_cells;
  for (int s = 0; s < sphere.size(); ++s)
    if ((s == p && point->in_v) || (s != p && disk->in_v)) v_cells.push_back(s);

  TracedProblem t{SelfMapSpec::identity(sphere), CellularSubset(sphere, v_cells), {}, {{0, NormalData{c.normal}}}, assumptions};
  return t;
}

}  // namespace

IntersectionPattern flag3_default_pattern() {
  const Rational two = 2, half = Rational(1, 2);
  IntersectionPattern p;
  p.complex_model = true;
  // Normal eigenvalues are ratios of the diagonal entries along the normal
  // root directions, realified (each complex eigenvalue twice).
  p.components.push_back(sphere_component("L<E,P=E", true, true, {two, two, two, two}));
  p.components.push_back(sphere_component("L<E,P=L+e3", true, true, {two, two, half, half}));
  // 0-cell at P = <e3,e1>, the only point of this component inside V.
  p.components.push_back(sphere_component("L=e3", true, false, {half, half, half, half}));
  return p;
}

FlagModel build_flag_model(const IntersectionPattern& pattern) {
  if (pattern.components.empty()) throw Error(ErrorKind::InconsistentPattern, "pattern has no components");
  if (pattern.components.size() > 10) throw Error(ErrorKind::BoundExceeded, "at most 10 pattern components");
  std::vector<Cell> cells;
  std::vector<std::string> in_v;
  const Assumptions assumptions{pattern.complex_model, false};
  std::vector<std::optional<TracedProblem>> spheres;
  for (std::size_t i = 0; i < pattern.components.size(); ++i) {
    const auto& c = pattern.components[i];
    long long chi = 0;
    for (const auto& cell : c.cells) {
      if (cell.dim < 0) throw Error(ErrorKind::InconsistentPattern, "negative cell dimension in " + c.label);
      chi += parity_sign(cell.dim);
      // Prefixing with the position keeps components in pattern order.
      const std::string id = "m" + std::to_string(i) + "." + cell.id;
      cells.push_back({id, cell.dim, c.label});
      if (cell.in_v) in_v.push_back(id);
    }
    if (c.cells.empty() || chi != c.chi)
      throw Error(ErrorKind::InconsistentPattern, "component " + c.label + " declares chi " + std::to_string(c.chi) +
                                                      " but its cells give " + std::to_string(chi));
    spheres.push_back(sphere_model(c, assumptions));
  }
  CellSpace space(std::move(cells));
  std::vector<int> support;
  for (const auto& id : in_v) support.push_back(space.index_of(id));
  FlagModel model{TracedProblem{space, CellularSubset(space, support), {}, {}, assumptions}, std::move(spheres)};
  const auto components = fixed_components(model.problem);
  if (components.size() != pattern.components.size())
    throw Error(ErrorKind::InconsistentPattern, "component labels must be distinct");
  for (std::size_t i = 0; i < pattern.components.size(); ++i)
    model.problem.normal_data[static_cast<int>(i)] = NormalData{pattern.components[i].normal};
  validate_problem(model.problem);
  return model;
}

FlagReport run_flag_model(const IntersectionPattern& pattern) {
  const FlagModel model = build_flag_model(pattern);
  const auto components = fixed_components(model.problem);
  FlagReport report;
  const VertexFunctional height{{{"p", 0}, {"q1", 1}, {"q2", 2}, {"q3", 3}}};
  for (std::size_t i = 0; i < components.size(); ++i) {
    FlagComponentResult r;
    r.label = pattern.components[i].label;
    r.chi = chi_c(components[i]);
    std::vector<int> meet;
    for (int c : components[i].cells())
      if (model.problem.support->contains(c)) meet.push_back(c);
    r.chi_v_cap_m = chi_c(CellularSubset(components[i].parent(), meet));
    const SignedContribution s = signed_local_contribution(model.problem, static_cast<int>(i));
    r.contribution = s.value;
    r.sign = s.sign;
    r.regime = s.regime;
    if (const auto& sphere = model.spheres[i]) {
      r.microlocal_index = microlocal_index(*sphere, 0, height);
      r.sphere_trace = global_trace(*sphere);
    }
    report.total += r.contribution;
    report.components.push_back(std::move(r));
  }
  const BruhatCellSpace flag3 = flag_cellspace(3);
  report.lefschetz_on_v = chi_c(schubert_complement(flag3, {3, 2, 1}));
  report.equal = report.total == GaussianRational(Rational(report.lefschetz_on_v));
  return report;
}

}  // namespace lefscalc
