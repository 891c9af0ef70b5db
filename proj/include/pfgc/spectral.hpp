#pragma once

#include "pfgc/types.hpp"

#include <cstdint>
#include <memory>
#include <string>

namespace pfgc {

struct SpectralBasis {
  Matrix eigvecs;           // U, orthonormal columns
  Vector eigvals;           // ascending
  std::uint64_t source_hash = 0;

  double lambda_min() const { return eigvals(0); }
  double lambda_max() const { return eigvals(eigvals.size() - 1); }
};

using BasisPtr = std::shared_ptr<const SpectralBasis>;

// Full symmetric eigendecomposition, cached in memory and on disk keyed by a
// content hash of the input. Input must be symmetric within 1e-10.
BasisPtr eig_sym(const Matrix& matrix);

// Cache controls. The cache directory defaults to $PFGC_CACHE_DIR or
// ".pfgc-cache"; an empty string disables the disk layer.
void set_eig_cache_dir(const std::string& dir);
std::string eig_cache_dir();
void clear_eig_memory_cache();
// Number of decompositions actually performed by this process (cache misses).
std::size_t eig_compute_count();

enum class FilterKind {
  GlobalLowPass,   // h1: Min-Max normalized exp(1 - lambda)
  LocalLowPass,    // h2: 1 - lambda/lambda_N
  GlobalHighPass,  // h3: Min-Max normalized exp(lambda)
  LocalHighPass,   // h4: lambda/lambda_N
};

// Local filters fix 1/lambda_N to the 2/3 heuristic in production; the
// theorem lab uses the measured spectrum instead.
enum class LocalLambdaMode { FixedTwoThirds, Measured };

FilterKind parse_filter_kind(const std::string& name);
const char* filter_kind_name(FilterKind kind);

// Per-eigenvalue response h(lambda). A degenerate spectrum (lambda_1 =
// lambda_N) makes the Min-Max maps undefined; those return all-ones and warn
// on stderr.
Vector filter_response(FilterKind kind, const SpectralBasis& basis,
                       LocalLambdaMode mode = LocalLambdaMode::FixedTwoThirds);

// U diag(resp) U^T as a dense operator.
Matrix filter_operator(FilterKind kind, const SpectralBasis& basis,
                       LocalLambdaMode mode = LocalLambdaMode::FixedTwoThirds);

// U diag(resp) U^T * signal.
Matrix apply_filter(FilterKind kind, const SpectralBasis& basis,
                    const Matrix& signal,
                    LocalLambdaMode mode = LocalLambdaMode::FixedTwoThirds);

// Direct one-hop form of the local filters: (I - (2/3)L) or (2/3)L applied to
// the signal without any eigendecomposition. Only valid for LocalLowPass and
// LocalHighPass in fixed-2/3 mode.
Matrix apply_filter_direct(FilterKind kind, const Matrix& laplacian,
                           const Matrix& signal);

}  // namespace pfgc
