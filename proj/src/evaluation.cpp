#include "pfgc/evaluation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <vector>

namespace pfgc {

namespace {

std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b) {
  std::uint64_t x = a + 0x9E3779B97F4A7C15ULL * (b + 1);
  x ^= x >> 30;
  x *= 0xBF58476D1CE4E5B9ULL;
  x ^= x >> 27;
  x *= 0x94D049BB133111EBULL;
  x ^= x >> 31;
  return x;
}

double sq_dist(const Matrix& points, Eigen::Index i, const Matrix& centers,
               Eigen::Index j) {
  return (points.row(i) - centers.row(j)).squaredNorm();
}

KmeansResult kmeans_once(const Matrix& points, int c, Rng& rng) {
  const Eigen::Index n = points.rows();
  Matrix centers(c, points.cols());

  // k-means++ seeding
  centers.row(0) = points.row(rng.uniform_int(static_cast<int>(n)));
  Vector dist2(n);
  for (Eigen::Index i = 0; i < n; ++i) dist2(i) = sq_dist(points, i, centers, 0);
  for (int k = 1; k < c; ++k) {
    const double total = dist2.sum();
    Eigen::Index pick = 0;
    if (total > 0.0) {
      const double threshold = rng.uniform01() * total;
      double acc = 0.0;
      pick = n - 1;
      for (Eigen::Index i = 0; i < n; ++i) {
        acc += dist2(i);
        if (acc >= threshold) {
          pick = i;
          break;
        }
      }
    } else {
      pick = rng.uniform_int(static_cast<int>(n));
    }
    centers.row(k) = points.row(pick);
    for (Eigen::Index i = 0; i < n; ++i) {
      dist2(i) = std::min(dist2(i), sq_dist(points, i, centers, k));
    }
  }

  std::vector<int> assign(n, -1);
  for (int iter = 0; iter < 200; ++iter) {
    bool changed = false;
    for (Eigen::Index i = 0; i < n; ++i) {
      int best = 0;
      double best_d = sq_dist(points, i, centers, 0);
      for (int k = 1; k < c; ++k) {
        const double d = sq_dist(points, i, centers, k);
        if (d < best_d) {
          best_d = d;
          best = k;
        }
      }
      if (assign[i] != best) {
        assign[i] = best;
        changed = true;
      }
    }
    if (!changed && iter > 0) break;

    Matrix sums = Matrix::Zero(c, points.cols());
    std::vector<int> counts(c, 0);
    for (Eigen::Index i = 0; i < n; ++i) {
      sums.row(assign[i]) += points.row(i);
      ++counts[assign[i]];
    }
    for (int k = 0; k < c; ++k) {
      if (counts[k] > 0) {
        centers.row(k) = sums.row(k) / counts[k];
      } else {
        // Re-seed an empty cluster from the farthest point.
        Eigen::Index far = 0;
        double far_d = -1.0;
        for (Eigen::Index i = 0; i < n; ++i) {
          const double d = sq_dist(points, i, centers, assign[i]);
          if (d > far_d) {
            far_d = d;
            far = i;
          }
        }
        centers.row(k) = points.row(far);
      }
    }
  }

  KmeansResult out;
  out.centers = centers;
  out.assignment = assign;
  out.inertia = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) {
    out.inertia += sq_dist(points, i, centers, assign[i]);
  }
  return out;
}

// Min-cost assignment on a square matrix, O(n^3) shortest augmenting paths.
std::vector<int> hungarian_min(const std::vector<std::vector<double>>& cost) {
  const int n = static_cast<int>(cost.size());
  const double inf = std::numeric_limits<double>::infinity();
  std::vector<double> u(n + 1, 0.0), v(n + 1, 0.0);
  std::vector<int> p(n + 1, 0), way(n + 1, 0);
  for (int i = 1; i <= n; ++i) {
    p[0] = i;
    int j0 = 0;
    std::vector<double> minv(n + 1, inf);
    std::vector<char> used(n + 1, 0);
    do {
      used[j0] = 1;
      const int i0 = p[j0];
      double delta = inf;
      int j1 = 0;
      for (int j = 1; j <= n; ++j) {
        if (used[j]) continue;
        const double cur = cost[i0 - 1][j - 1] - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (int j = 0; j <= n; ++j) {
        if (used[j]) {
          u[p[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (p[j0] != 0);
    do {
      const int j1 = way[j0];
      p[j0] = p[j1];
      j0 = j1;
    } while (j0);
  }
  std::vector<int> row_to_col(n, -1);
  for (int j = 1; j <= n; ++j) {
    if (p[j] > 0) row_to_col[p[j] - 1] = j - 1;
  }
  return row_to_col;
}

void check_label_args(const std::vector<int>& pred,
                      const std::vector<int>& truth) {
  if (pred.size() != truth.size()) {
    fail(ErrorKind::Usage, "label vectors differ in length");
  }
  if (pred.empty()) fail(ErrorKind::Usage, "empty label vectors");
  for (size_t i = 0; i < pred.size(); ++i) {
    if (pred[i] < 0 || truth[i] < 0) {
      fail(ErrorKind::Data, "labels must be non-negative");
    }
  }
}

}  // namespace

KmeansResult kmeans(const Matrix& points, int n_clusters, std::uint64_t seed,
                    int restarts) {
  const Eigen::Index n = points.rows();
  if (n_clusters < 1) fail(ErrorKind::Config, "kmeans: need at least 1 cluster");
  if (n_clusters > n) fail(ErrorKind::Usage, "kmeans: more clusters than points");
  if (restarts < 1) fail(ErrorKind::Config, "kmeans: restarts must be >= 1");

  KmeansResult best;
  bool have = false;
  for (int r = 0; r < restarts; ++r) {
    Rng rng(mix_seed(seed, static_cast<std::uint64_t>(r)));
    KmeansResult cur = kmeans_once(points, n_clusters, rng);
    if (!have || cur.inertia < best.inertia) {
      best = std::move(cur);
      have = true;
    }
  }
  return best;
}

double accuracy(const std::vector<int>& pred, const std::vector<int>& truth) {
  check_label_args(pred, truth);
  const int kp = *std::max_element(pred.begin(), pred.end()) + 1;
  const int kt = *std::max_element(truth.begin(), truth.end()) + 1;
  const int k = std::max(kp, kt);
  std::vector<std::vector<double>> counts(k, std::vector<double>(k, 0.0));
  for (size_t i = 0; i < pred.size(); ++i) counts[pred[i]][truth[i]] += 1.0;

  double maxc = 0.0;
  for (const auto& row : counts)
    for (double c : row) maxc = std::max(maxc, c);
  std::vector<std::vector<double>> cost(k, std::vector<double>(k, 0.0));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) cost[i][j] = maxc - counts[i][j];

  const std::vector<int> match = hungarian_min(cost);
  double agree = 0.0;
  for (int i = 0; i < k; ++i) agree += counts[i][match[i]];
  return agree / static_cast<double>(pred.size());
}

double nmi(const std::vector<int>& pred, const std::vector<int>& truth) {
  check_label_args(pred, truth);
  const int kp = *std::max_element(pred.begin(), pred.end()) + 1;
  const int kt = *std::max_element(truth.begin(), truth.end()) + 1;
  const double n = static_cast<double>(pred.size());

  std::vector<std::vector<double>> joint(kp, std::vector<double>(kt, 0.0));
  std::vector<double> mp(kp, 0.0), mt(kt, 0.0);
  for (size_t i = 0; i < pred.size(); ++i) {
    joint[pred[i]][truth[i]] += 1.0;
    mp[pred[i]] += 1.0;
    mt[truth[i]] += 1.0;
  }

  double hp = 0.0, ht = 0.0, mi = 0.0;
  for (double c : mp)
    if (c > 0.0) hp -= (c / n) * std::log(c / n);
  for (double c : mt)
    if (c > 0.0) ht -= (c / n) * std::log(c / n);
  for (int i = 0; i < kp; ++i) {
    for (int j = 0; j < kt; ++j) {
      const double c = joint[i][j];
      if (c > 0.0) mi += (c / n) * std::log(c * n / (mp[i] * mt[j]));
    }
  }

  if (hp <= 0.0 && ht <= 0.0) return 1.0;  // two trivial partitions coincide
  if (hp <= 0.0 || ht <= 0.0) return 0.0;
  return mi / std::sqrt(hp * ht);
}

ClusterMetrics cluster_metrics(const std::vector<int>& pred,
                               const std::vector<int>& truth) {
  ClusterMetrics out;
  out.acc = accuracy(pred, truth);
  out.nmi = nmi(pred, truth);

  const int kp = *std::max_element(pred.begin(), pred.end()) + 1;
  const int kt = *std::max_element(truth.begin(), truth.end()) + 1;
  const int k = std::max(kp, kt);
  std::vector<std::vector<double>> counts(k, std::vector<double>(k, 0.0));
  for (size_t i = 0; i < pred.size(); ++i) counts[pred[i]][truth[i]] += 1.0;
  double maxc = 0.0;
  for (const auto& row : counts)
    for (double c : row) maxc = std::max(maxc, c);
  std::vector<std::vector<double>> cost(k, std::vector<double>(k, 0.0));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) cost[i][j] = maxc - counts[i][j];
  out.matched_permutation = hungarian_min(cost);
  out.matched_permutation.resize(kp);
  return out;
}

AttentionBand parse_attention_band(const std::string& name) {
  if (name == "top_third") return AttentionBand::TopThird;
  if (name == "mid_third") return AttentionBand::MidThird;
  if (name == "bottom_third") return AttentionBand::BottomThird;
  if (name == "none") return AttentionBand::None;
  fail(ErrorKind::Config, "unknown attention band '" + name + "'");
}

const char* attention_band_name(AttentionBand band) {
  switch (band) {
    case AttentionBand::TopThird:
      return "top_third";
    case AttentionBand::MidThird:
      return "mid_third";
    case AttentionBand::BottomThird:
      return "bottom_third";
    case AttentionBand::None:
      return "none";
  }
  return "unknown";
}

Matrix mask_by_attention(const Matrix& h, const Vector& gate,
                         AttentionBand band) {
  const Eigen::Index d = h.cols();
  if (gate.size() != d) {
    fail(ErrorKind::Shape, "mask_by_attention: gate length mismatch");
  }
  if (band == AttentionBand::None) return h;

  std::vector<int> order(d);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&gate](int a, int b) {
    if (gate(a) != gate(b)) return gate(a) > gate(b);
    return a < b;
  });

  const Eigen::Index t1 = d / 3;
  const Eigen::Index t2 = 2 * d / 3;
  Eigen::Index lo = 0, hi = 0;
  switch (band) {
    case AttentionBand::TopThird:
      lo = 0;
      hi = t1;
      break;
    case AttentionBand::MidThird:
      lo = t1;
      hi = t2;
      break;
    case AttentionBand::BottomThird:
      lo = t2;
      hi = d;
      break;
    case AttentionBand::None:
      break;
  }
  Matrix out = h;
  for (Eigen::Index r = lo; r < hi; ++r) out.col(order[r]).setZero();
  return out;
}

}  // namespace pfgc
