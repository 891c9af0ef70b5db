#pragma once

#include "pfgc/types.hpp"

#include <string>

namespace pfgc {

enum class GraphFormat { CanonicalCsv, WebKB, Planetoid };

// Accepts "canonical_csv", "webkb", "planetoid".
GraphFormat parse_format(const std::string& name);
const char* format_name(GraphFormat format);

// Loads a dataset directory in the given layout. The returned graph is
// cleaned: adjacency symmetrized by max, self-loops stripped, labels remapped
// to a dense 0..C-1 range.
//
// canonical_csv: nodes.csv (header "id,label,f0,...") + edges.csv ("src,dst").
//   Label -1 means unknown; either all labels are -1 (unlabeled dataset) or
//   none are.
// webkb: out1_node_feature_label.txt (tab-separated, comma-packed features)
//   + out1_graph_edges.txt, both with a header line.
// planetoid: one *.content (id, features..., label) and one *.cites file;
//   citation lines mentioning unknown ids are skipped.
AttributedGraph load_graph(const std::string& dir, GraphFormat format);

// Writes the unique undirected edges (i < j) of a binary adjacency in the
// canonical edge format ("src,dst" header). Self-loops are not written.
void write_edges_csv(const std::string& path, const Matrix& adjacency);

}  // namespace pfgc
