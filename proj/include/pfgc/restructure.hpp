#pragma once

#include "pfgc/types.hpp"

namespace pfgc {

struct SimilarityKernels {
  Matrix attr_sim;  // K: pairwise cosine of feature rows
  Matrix topo_sim;  // B: pairwise cosine of adjacency rows
};

struct RestructuredGraphs {
  Matrix homophilic;    // M, binary symmetric, M_ii = 1 for regular nodes
  Matrix heterophilic;  // G, binary symmetric, zero diagonal
  double epsilon = 0.0;
  int top_k = 0;
};

// K_ij = cos(X_i, X_j), B_ij = cos(A_i, A_j). Zero-norm rows give all-zero
// similarity rows; diagonals are exactly 1 for nonzero rows. Computed through
// sparse Gram products so large sparse datasets stay cheap.
SimilarityKernels similarity_kernels(const AttributedGraph& graph);

// M_ij = 1 iff (K_ij * B_ij)^2 >= epsilon.
Matrix build_homophilic(const SimilarityKernels& kernels, double epsilon);

// Scores Gbar = (1-K) o (1-M), keeps the top_k largest positive scores per
// row (diagonal excluded, ties broken by smaller index), symmetrizes by max.
Matrix build_heterophilic(const SimilarityKernels& kernels, const Matrix& m,
                          int top_k);

RestructuredGraphs restructure(const AttributedGraph& graph, double epsilon,
                               int top_k);

}  // namespace pfgc
