#pragma once

#include "lefscalc/complex.hpp"
#include "lefscalc/euler.hpp"
#include "lefscalc/linalg.hpp"
#include "lefscalc/microlocal.hpp"
#include "lefscalc/self_map.hpp"

#include <cstdint>
#include <random>

namespace lefscalc {

using Rng = std::mt19937_64;

/// Independent stream for (seed, stream, index); results do not depend on
/// the order in which streams are drawn.
Rng make_rng(std::uint64_t seed, std::uint64_t stream, std::uint64_t index);
/// Uniform in [lo, hi].
int uniform(Rng& rng, int lo, int hi);
/// p/q with |p| <= num_bound, 1 <= q <= den_bound.
Rational random_rational(Rng& rng, int num_bound = 5, int den_bound = 4);
GaussianRational random_gaussian(Rng& rng);

/// Face-closed abstract complex with at most max_simplices simplices,
/// vertices "x0", "x1", ...
SimplicialComplex random_complex(Rng& rng, int max_simplices = 40, int max_vertices = 7, int max_dim = 3);

/// Vertex map source -> target sending simplices to simplices, found by
/// randomized backtracking; falls back to a constant map.
std::vector<int> random_simplicial_vertex_map(Rng& rng, const SimplicialComplex& source, const SimplicialComplex& target);
SimplicialMap random_map(Rng& rng, const SimplicialComplex& source, const SimplicialComplex& target);
SelfMapSpec random_self_map(Rng& rng, const SimplicialComplex& k, int level);

/// Random Gaussian values on roughly half of the cells.
ConstructibleFunction random_function(Rng& rng, const Space& space);
/// Pairwise distinct values on all vertices, hence generic.
VertexFunctional random_generic_functional(Rng& rng, const SimplicialComplex& k);

/// Square matrix of the given size; mixes general integer matrices,
/// matrices with eigenvalue 1, triangular ones with chosen real
/// eigenvalues, and matrices with fractional entries.
RationalMatrix random_matrix(Rng& rng, int dim);

}  // namespace lefscalc
