#pragma once

#include "pfgc/types.hpp"

#include <vector>

namespace pfgc {

// Fraction of undirected edges whose endpoints share a label. Self-loops are
// ignored; a graph without edges reports 0.
double homophily_ratio(const AttributedGraph& graph);

struct CommonalityReport {
  struct EdgeRecord {
    int u = 0;
    int v = 0;
    double jaccard = 0.0;
    bool predicted_homophilic = false;
    bool truly_homophilic = false;
  };

  std::vector<EdgeRecord> edges;
  long n_true_homo = 0;
  long n_true_hetero = 0;
  long n_pred_homo = 0;
  long n_pred_hetero = 0;
  long n_correct_homo = 0;
  long n_correct_hetero = 0;
  double recall_homo = 0.0;       // correctly identified / true homophilic
  double recall_hetero = 0.0;
  double precision_homo = 0.0;    // true homophilic / predicted homophilic
  double precision_hetero = 0.0;
};

// Predicts each edge homophilic when the Jaccard similarity of the two open
// neighborhoods is >= 0.5, and scores the prediction against the labels.
CommonalityReport classify_edges_by_commonality(const AttributedGraph& graph);

}  // namespace pfgc
