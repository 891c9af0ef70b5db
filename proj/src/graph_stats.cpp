#include "pfgc/graph_stats.hpp"

#include <vector>

namespace pfgc {

double homophily_ratio(const AttributedGraph& graph) {
  if (!graph.has_labels()) {
    fail(ErrorKind::Usage, "homophily_ratio needs labels");
  }
  const int n = graph.n_nodes;
  long edges = 0;
  long same = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (graph.adjacency(i, j) != 0.0) {
        ++edges;
        if (graph.labels[i] == graph.labels[j]) ++same;
      }
    }
  }
  if (edges == 0) return 0.0;
  return static_cast<double>(same) / static_cast<double>(edges);
}

CommonalityReport classify_edges_by_commonality(const AttributedGraph& graph) {
  if (!graph.has_labels()) {
    fail(ErrorKind::Usage, "classify_edges_by_commonality needs labels");
  }
  const int n = graph.n_nodes;
  std::vector<std::vector<int>> nbrs(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (j != i && graph.adjacency(i, j) != 0.0) nbrs[i].push_back(j);
    }
  }

  CommonalityReport rep;
  std::vector<char> mark(n, 0);
  for (int i = 0; i < n; ++i) {
    for (int j : nbrs[i]) {
      if (j <= i) continue;
      long inter = 0;
      for (int u : nbrs[i]) mark[u] = 1;
      for (int u : nbrs[j]) inter += mark[u];
      for (int u : nbrs[i]) mark[u] = 0;
      const long uni = static_cast<long>(nbrs[i].size()) +
                       static_cast<long>(nbrs[j].size()) - inter;
      const double jac = uni > 0 ? static_cast<double>(inter) / uni : 0.0;

      CommonalityReport::EdgeRecord rec;
      rec.u = i;
      rec.v = j;
      rec.jaccard = jac;
      rec.predicted_homophilic = jac >= 0.5;
      rec.truly_homophilic = graph.labels[i] == graph.labels[j];
      rep.edges.push_back(rec);

      if (rec.truly_homophilic) {
        ++rep.n_true_homo;
        if (rec.predicted_homophilic) ++rep.n_correct_homo;
      } else {
        ++rep.n_true_hetero;
        if (!rec.predicted_homophilic) ++rep.n_correct_hetero;
      }
      if (rec.predicted_homophilic) {
        ++rep.n_pred_homo;
      } else {
        ++rep.n_pred_hetero;
      }
    }
  }

  auto ratio = [](long num, long den) {
    return den > 0 ? static_cast<double>(num) / den : 0.0;
  };
  rep.recall_homo = ratio(rep.n_correct_homo, rep.n_true_homo);
  rep.recall_hetero = ratio(rep.n_correct_hetero, rep.n_true_hetero);
  rep.precision_homo = ratio(rep.n_correct_homo, rep.n_pred_homo);
  rep.precision_hetero = ratio(rep.n_correct_hetero, rep.n_pred_hetero);
  return rep;
}

}  // namespace pfgc
