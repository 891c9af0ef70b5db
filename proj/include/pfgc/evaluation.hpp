#pragma once

#include "pfgc/types.hpp"

#include <vector>

namespace pfgc {

struct KmeansResult {
  Matrix centers;  // C x d
  std::vector<int> assignment;
  double inertia = 0.0;
};

// Lloyd's algorithm with k-means++ seeding; best inertia over `restarts`
// deterministic restarts. Empty clusters are re-seeded from the point
// farthest from its current center.
KmeansResult kmeans(const Matrix& points, int n_clusters, std::uint64_t seed,
                    int restarts = 10);

// Clustering accuracy under the optimal label matching (Hungarian assignment
// on the contingency table).
double accuracy(const std::vector<int>& pred, const std::vector<int>& truth);

// Mutual information normalized by the geometric mean of the entropies. Two
// trivial (single-cluster) partitions score 1; one trivial partition scores 0.
double nmi(const std::vector<int>& pred, const std::vector<int>& truth);

struct ClusterMetrics {
  double acc = 0.0;
  double nmi = 0.0;
  std::vector<int> matched_permutation;  // pred label -> truth label
};

ClusterMetrics cluster_metrics(const std::vector<int>& pred,
                               const std::vector<int>& truth);

enum class AttentionBand { TopThird, MidThird, BottomThird, None };

AttentionBand parse_attention_band(const std::string& name);
const char* attention_band_name(AttentionBand band);

// Zeroes the columns of h whose gate weights rank in the requested band
// (descending weight order, ties by column index). The three bands partition
// the columns exactly.
Matrix mask_by_attention(const Matrix& h, const Vector& gate,
                         AttentionBand band);

}  // namespace pfgc
