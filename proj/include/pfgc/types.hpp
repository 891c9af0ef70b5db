#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace pfgc {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

enum class ErrorKind { Load, Shape, Data, Numerical, Config, Usage };

// Load/Shape/Data/Numerical map to exit code 1 at the CLI, Config/Usage to 2.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& msg)
      : std::runtime_error(msg), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& msg) {
  throw Error(kind, msg);
}

const char* error_kind_name(ErrorKind kind);

// Attributed graph: dense features X (N x d), symmetric binary adjacency A
// with zero diagonal, optional dense labels in [0, C).
struct AttributedGraph {
  int n_nodes = 0;
  int n_features = 0;
  int n_clusters = 0;
  Matrix features;   // N x d
  Matrix adjacency;  // N x N
  std::vector<int> labels;  // empty when absent

  bool has_labels() const { return !labels.empty(); }
};

struct NormalizedOperators {
  Matrix adj_norm;   // D^{-1/2} (A + I) D^{-1/2}, D the degree of A + I
  Matrix laplacian;  // I - adj_norm, spectrum in [0, 2]
};

NormalizedOperators normalize(const Matrix& adjacency);

// Wraps an adjacency produced mid-pipeline (e.g. a restructured graph) as an
// AttributedGraph sharing labels, stripping any self-loops to honor the type
// invariant.
AttributedGraph graph_from_adjacency(const Matrix& adjacency,
                                     const AttributedGraph& like);

// Deterministic RNG used across the project: the raw engine is std::mt19937_64
// but all real-valued draws are derived from raw bits in-house so results do
// not depend on the standard library's distribution implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64();
  double uniform01();                    // [0, 1)
  double uniform(double lo, double hi);  // [lo, hi)
  double normal();                       // standard normal, Box-Muller
  int uniform_int(int n);                // [0, n)

 private:
  std::mt19937_64 engine_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace pfgc
