#include "lefscalc/random_models.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace lefscalc {

namespace {

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

}  // namespace

Rng make_rng(std::uint64_t seed, std::uint64_t stream, std::uint64_t index) {
  return Rng(splitmix(splitmix(splitmix(seed) ^ stream) ^ index));
}

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

Rational random_rational(Rng& rng, int num_bound, int den_bound) {
  const int p = uniform(rng, -num_bound, num_bound);
  const int q = uniform(rng, 1, den_bound);
  return Rational(p, q);
}

GaussianRational random_gaussian(Rng& rng) {
  GaussianRational z{random_rational(rng), Rational()};
  if (uniform(rng, 0, 1)) z.im = random_rational(rng);
  return z;
}

SimplicialComplex random_complex(Rng& rng, int max_simplices, int max_vertices, int max_dim) {
  const int n = uniform(rng, 1, max_vertices);
  std::vector<std::string> ids;
  for (int i = 0; i < n; ++i) ids.push_back("x" + std::to_string(i));
  std::vector<std::vector<std::string>> facets;
  SimplicialComplex k = SimplicialComplex::from_facets(ids, facets);
  const int attempts = n < 2 ? 0 : uniform(rng, 1, 8);
  for (int a = 0; a < attempts; ++a) {
    const int size = uniform(rng, 2, std::min(n, max_dim + 1));
    std::vector<std::string> pool = ids;
    std::shuffle(pool.begin(), pool.end(), rng);
    pool.resize(static_cast<std::size_t>(size));
    facets.push_back(pool);
    SimplicialComplex next = SimplicialComplex::from_facets(ids, facets);
    if (next.size() > max_simplices) {
      facets.pop_back();
      continue;
    }
    k = next;
  }
  return k;
}

std::vector<int> random_simplicial_vertex_map(Rng& rng, const SimplicialComplex& source, const SimplicialComplex& target) {
  const int n = source.vertex_count();
  // Simplices are checked once their largest vertex is assigned.
  std::vector<std::vector<int>> closing(n);
  for (int s = 0; s < source.size(); ++s)
    if (source.dim(s) > 0) closing[source.simplex(s).back()].push_back(s);

  std::vector<std::vector<int>> order(n);
  for (auto& o : order) {
    o.resize(static_cast<std::size_t>(target.vertex_count()));
    std::iota(o.begin(), o.end(), 0);
    std::shuffle(o.begin(), o.end(), rng);
  }
  std::vector<int> map(n, -1);
  std::vector<std::size_t> next(n, 0);
  int budget = 5000;
  int v = 0;
  while (v >= 0 && v < n && budget-- > 0) {
    bool placed = false;
    while (next[v] < order[v].size()) {
      map[v] = order[v][next[v]++];
      bool ok = true;
      for (int s : closing[v]) {
        Simplex image;
        for (int w : source.simplex(s)) image.push_back(map[w]);
        std::sort(image.begin(), image.end());
        image.erase(std::unique(image.begin(), image.end()), image.end());
        if (!target.find(image)) {
          ok = false;
          break;
        }
      }
      if (ok) {
        placed = true;
        break;
      }
    }
    if (placed) {
      ++v;
    } else {
      next[v] = 0;
      map[v] = -1;
      --v;
    }
  }
  if (v != n) std::fill(map.begin(), map.end(), uniform(rng, 0, target.vertex_count() - 1));
  return map;
}

SimplicialMap random_map(Rng& rng, const SimplicialComplex& source, const SimplicialComplex& target) {
  return SimplicialMap(source, target, random_simplicial_vertex_map(rng, source, target));
}

SelfMapSpec random_self_map(Rng& rng, const SimplicialComplex& k, int level) {
  const SubdivisionTower tower(k, level);
  return SelfMapSpec(k, level, random_simplicial_vertex_map(rng, tower.top(), k));
}

ConstructibleFunction random_function(Rng& rng, const Space& space) {
  ConstructibleFunction phi(space);
  for (int c = 0; c < cell_count(space); ++c)
    if (uniform(rng, 0, 1)) phi.set(c, random_gaussian(rng));
  return phi;
}

VertexFunctional random_generic_functional(Rng& rng, const SimplicialComplex& k) {
  std::set<Rational> used;
  VertexFunctional ell;
  for (int v = 0; v < k.vertex_count(); ++v) {
    Rational x;
    do {
      x = random_rational(rng, 20, 3);
    } while (used.count(x));
    used.insert(x);
    ell.values[k.vertex_id(v)] = x;
  }
  return ell;
}

RationalMatrix random_matrix(Rng& rng, int dim) {
  const std::size_t n = static_cast<std::size_t>(dim);
  RationalMatrix a(n, n);
  switch (uniform(rng, 0, 3)) {
    case 0:
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) a(r, c) = uniform(rng, -9, 9);
      break;
    case 1: {
      // I - B with B singular.
      RationalMatrix b(n, n);
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) b(r, c) = uniform(rng, -4, 4);
      for (std::size_t c = 0; c < n; ++c) b(n - 1, c) = n > 1 ? b(0, c) * Rational(uniform(rng, -2, 2)) : Rational();
      a = RationalMatrix::identity(n) - b;
      break;
    }
    case 2: {
      static const Rational diag[] = {-2, -1, 0, Rational(1, 2), 1, 2, 3, Rational(3, 2)};
      for (std::size_t r = 0; r < n; ++r) {
        a(r, r) = diag[uniform(rng, 0, 7)];
        for (std::size_t c = r + 1; c < n; ++c) a(r, c) = uniform(rng, -3, 3);
      }
      break;
    }
    default:
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) a(r, c) = random_rational(rng, 9, 5);
  }
  return a;
}

}  // namespace lefscalc
