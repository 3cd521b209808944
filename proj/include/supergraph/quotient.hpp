#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "supergraph/graph.hpp"
#include "supergraph/matrix.hpp"
#include "supergraph/polynomial.hpp"
#include "supergraph/spectrum.hpp"

namespace supergraph {

class Partition;

// k x k quotient of a generalized join of cliques frame[K_{n_1}, ..., K_{n_k}]
// at parameter t in {0, 1}.
//
//   symmetric(i,i)      = r_i - t (r_i + N_i),   r_i = n_i - 1
//   symmetric(i,j)      = sqrt(n_i n_j) rho_ij
//   integer_similar(i,j) = n_j rho_ij            (same diagonal)
//
// with N_i the total size of the blocks adjacent to block i. The two forms
// are similar via diag(sqrt(n_i)), so they share a characteristic polynomial.
struct QuotientMatrix {
  int t = 0;
  std::vector<std::size_t> sizes;
  std::vector<std::int64_t> neighbor_sums;
  SimpleGraph frame;
  RealMatrix symmetric;
  IntMatrix integer_similar;
};

QuotientMatrix quotient_matrix(const SimpleGraph& frame, const std::vector<std::size_t>& sizes, int t);

// Characteristic polynomial of a super graph, read off its quotient. The
// metadata records how it was assembled.
struct SuperCharPoly {
  PolynomialZ poly;
  std::size_t quotient_components = 1;  // > 1: per-component product was used
  bool complete_shortcut = false;       // connected compressed graph with k <= 2
};

SuperCharPoly super_adjacency_charpoly_detailed(const SimpleGraph& graph, const Partition& partition);
SuperCharPoly super_laplacian_charpoly_detailed(const SimpleGraph& graph, const Partition& partition);
// chi(A(super), x) = chi(N(0), x) (x + 1)^{n - k}
PolynomialZ super_adjacency_charpoly(const SimpleGraph& graph, const Partition& partition);
// chi(L(super), x) = chi(-N(1), x) prod_i (x - N_i - n_i)^{n_i - 1}
PolynomialZ super_laplacian_charpoly(const SimpleGraph& graph, const Partition& partition);

// Same routes, numerically: Jacobi on the symmetric quotient plus the
// explicit block eigenvalues.
Spectrum super_adjacency_spectrum(const SimpleGraph& graph, const Partition& partition);
Spectrum super_laplacian_spectrum(const SimpleGraph& graph, const Partition& partition);

// Star frames K_{1,k-1}[K_{n_1}, ..., K_{n_k}] with block 0 at the centre.
PolynomialZ star_join_adjacency_charpoly(const std::vector<std::size_t>& sizes);
Spectrum uniform_star_join_adjacency_spectrum(std::int64_t l, std::int64_t m, std::int64_t k);
Spectrum star_join_laplacian_spectrum(const std::vector<std::size_t>& sizes);

}  // namespace supergraph
