#include "pfgc/restructure.hpp"

#include <Eigen/Sparse>

#include <algorithm>
#include <numeric>
#include <vector>

namespace pfgc {

namespace {

// Dense pairwise cosine of the rows, computed through a sparse Gram product:
// it is the row-normalized sparse matrix times its transpose, so the cost
// scales with the feature overlap instead of N^2 d.
Matrix cosine_gram(const Matrix& rows) {
  const Eigen::Index n = rows.rows();
  const Eigen::Index d = rows.cols();
  std::vector<char> nonzero(n, 0);

  std::vector<Eigen::Triplet<double>> trips;
  trips.reserve(static_cast<size_t>((rows.array() != 0.0).count()));
  for (Eigen::Index i = 0; i < n; ++i) {
    const double norm = rows.row(i).norm();
    if (norm <= 0.0) continue;
    nonzero[i] = 1;
    for (Eigen::Index j = 0; j < d; ++j) {
      const double v = rows(i, j);
      if (v != 0.0) {
        trips.emplace_back(static_cast<int>(i), static_cast<int>(j), v / norm);
      }
    }
  }
  Eigen::SparseMatrix<double> s(n, d);
  s.setFromTriplets(trips.begin(), trips.end());
  Eigen::SparseMatrix<double> st = s.transpose();
  Eigen::SparseMatrix<double> gram = s * st;

  Matrix k = Matrix(gram);
  // The product is only symmetric up to rounding; mirror the upper triangle
  // and pin the diagonal to its exact value.
  for (Eigen::Index i = 0; i < n; ++i) {
    k(i, i) = nonzero[i] ? 1.0 : 0.0;
    for (Eigen::Index j = i + 1; j < n; ++j) k(j, i) = k(i, j);
  }
  k = k.cwiseMax(-1.0).cwiseMin(1.0);
  return k;
}

}  // namespace

SimilarityKernels similarity_kernels(const AttributedGraph& graph) {
  SimilarityKernels kernels;
  kernels.attr_sim = cosine_gram(graph.features);
  kernels.topo_sim = cosine_gram(graph.adjacency);
  return kernels;
}

Matrix build_homophilic(const SimilarityKernels& kernels, double epsilon) {
  if (!(epsilon > 0.0)) {
    fail(ErrorKind::Config, "epsilon must be positive");
  }
  const Eigen::Index n = kernels.attr_sim.rows();
  if (kernels.topo_sim.rows() != n || kernels.attr_sim.cols() != n ||
      kernels.topo_sim.cols() != n) {
    fail(ErrorKind::Shape, "similarity kernels must be square and matching");
  }
  Matrix m(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      const double prod = kernels.attr_sim(i, j) * kernels.topo_sim(i, j);
      m(i, j) = prod * prod >= epsilon ? 1.0 : 0.0;
    }
  }
  return m;
}

Matrix build_heterophilic(const SimilarityKernels& kernels, const Matrix& m,
                          int top_k) {
  const Eigen::Index n = kernels.attr_sim.rows();
  if (top_k <= 0) fail(ErrorKind::Config, "top_k must be positive");
  if (top_k >= n) fail(ErrorKind::Config, "top_k must be smaller than N");
  if (m.rows() != n || m.cols() != n) {
    fail(ErrorKind::Shape, "M does not match the kernels");
  }

  Matrix g = Matrix::Zero(n, n);
  std::vector<int> idx(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    Vector score = ((1.0 - kernels.attr_sim.row(i).transpose().array()) *
                    (1.0 - m.row(i).transpose().array()))
                       .matrix();
    score(i) = 0.0;
    std::iota(idx.begin(), idx.end(), 0);
    std::partial_sort(idx.begin(), idx.begin() + top_k, idx.end(),
                      [&score](int a, int b) {
                        if (score(a) != score(b)) return score(a) > score(b);
                        return a < b;
                      });
    for (int t = 0; t < top_k; ++t) {
      if (score(idx[t]) > 0.0) g(i, idx[t]) = 1.0;
    }
  }
  g = g.cwiseMax(g.transpose()).eval();
  return g;
}

RestructuredGraphs restructure(const AttributedGraph& graph, double epsilon,
                               int top_k) {
  SimilarityKernels kernels = similarity_kernels(graph);
  RestructuredGraphs out;
  out.homophilic = build_homophilic(kernels, epsilon);
  out.heterophilic = build_heterophilic(kernels, out.homophilic, top_k);
  out.epsilon = epsilon;
  out.top_k = top_k;
  return out;
}

}  // namespace pfgc
