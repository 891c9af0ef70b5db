#include "pfgc/types.hpp"

#include <cmath>

namespace pfgc {

const char* error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Load:
      return "load";
    case ErrorKind::Shape:
      return "shape";
    case ErrorKind::Data:
      return "data";
    case ErrorKind::Numerical:
      return "numerical";
    case ErrorKind::Config:
      return "config";
    case ErrorKind::Usage:
      return "usage";
  }
  return "unknown";
}

NormalizedOperators normalize(const Matrix& adjacency) {
  const Eigen::Index n = adjacency.rows();
  if (adjacency.cols() != n) {
    fail(ErrorKind::Shape, "normalize: adjacency must be square");
  }
  Matrix s = adjacency + Matrix::Identity(n, n);
  Vector deg = s.rowwise().sum();
  for (Eigen::Index i = 0; i < n; ++i) {
    if (!(deg(i) > 0.0)) {
      fail(ErrorKind::Data, "normalize: nonpositive augmented degree at row " +
                                std::to_string(i));
    }
  }
  Vector dinv_sqrt = deg.array().rsqrt();
  NormalizedOperators out;
  out.adj_norm = dinv_sqrt.asDiagonal() * s * dinv_sqrt.asDiagonal();
  out.adj_norm = 0.5 * (out.adj_norm + out.adj_norm.transpose()).eval();
  out.laplacian = Matrix::Identity(n, n) - out.adj_norm;
  return out;
}

AttributedGraph graph_from_adjacency(const Matrix& adjacency,
                                     const AttributedGraph& like) {
  if (adjacency.rows() != like.n_nodes || adjacency.cols() != like.n_nodes) {
    fail(ErrorKind::Shape, "graph_from_adjacency: size mismatch");
  }
  AttributedGraph g = like;
  g.adjacency = adjacency;
  g.adjacency.diagonal().setZero();
  return g;
}

std::uint64_t Rng::next_u64() { return engine_(); }

double Rng::uniform01() {
  // 53 high-quality bits mapped to [0, 1); avoids std::uniform_real_distribution
  // so streams are identical across standard library implementations.
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double Rng::uniform(double lo, double hi) {
  return lo + (hi - lo) * uniform01();
}

double Rng::normal() {
  if (have_spare_) {
    have_spare_ = false;
    return spare_;
  }
  double u1 = 0.0;
  do {
    u1 = uniform01();
  } while (u1 <= 0.0);
  double u2 = uniform01();
  double r = std::sqrt(-2.0 * std::log(u1));
  double theta = 2.0 * M_PI * u2;
  spare_ = r * std::sin(theta);
  have_spare_ = true;
  return r * std::cos(theta);
}

int Rng::uniform_int(int n) {
  if (n <= 0) fail(ErrorKind::Config, "uniform_int: n must be positive");
  // Rejection sampling for an unbiased draw.
  const std::uint64_t un = static_cast<std::uint64_t>(n);
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % un;
  std::uint64_t x = 0;
  do {
    x = next_u64();
  } while (x >= limit);
  return static_cast<int>(x % un);
}

}  // namespace pfgc
