#include "pfgc/dataset.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

namespace fs = std::filesystem;

namespace pfgc {

namespace {

std::vector<std::string> read_lines(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::Load, "cannot open " + path);
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(line);
  }
  return lines;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  return out;
}

std::vector<std::string> split_ws(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

double parse_double(const std::string& tok, const std::string& where) {
  try {
    size_t pos = 0;
    double v = std::stod(tok, &pos);
    if (pos != tok.size()) throw std::invalid_argument(tok);
    return v;
  } catch (const std::exception&) {
    fail(ErrorKind::Data, where + ": bad numeric value '" + tok + "'");
  }
}

long parse_long(const std::string& tok, const std::string& where) {
  try {
    size_t pos = 0;
    long v = std::stol(tok, &pos);
    if (pos != tok.size()) throw std::invalid_argument(tok);
    return v;
  } catch (const std::exception&) {
    fail(ErrorKind::Data, where + ": bad integer '" + tok + "'");
  }
}

// Sorted-unique label strings -> dense ids.
std::vector<int> densify_labels(const std::vector<std::string>& raw) {
  std::vector<std::string> uniq(raw);
  std::sort(uniq.begin(), uniq.end());
  uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
  std::unordered_map<std::string, int> id;
  for (size_t i = 0; i < uniq.size(); ++i) id[uniq[i]] = static_cast<int>(i);
  std::vector<int> out;
  out.reserve(raw.size());
  for (const auto& s : raw) out.push_back(id[s]);
  return out;
}

void finalize(AttributedGraph& g) {
  const Eigen::Index n = g.adjacency.rows();
  g.adjacency = g.adjacency.cwiseMax(g.adjacency.transpose()).eval();
  g.adjacency.diagonal().setZero();
  g.n_nodes = static_cast<int>(n);
  g.n_features = static_cast<int>(g.features.cols());
  if (!g.features.allFinite()) {
    fail(ErrorKind::Data, "features contain non-finite values");
  }
  if (g.has_labels()) {
    int c = 0;
    for (int v : g.labels) c = std::max(c, v + 1);
    g.n_clusters = c;
  } else {
    g.n_clusters = 0;
  }
}

AttributedGraph load_webkb(const std::string& dir) {
  auto node_lines = read_lines(dir + "/out1_node_feature_label.txt");
  auto edge_lines = read_lines(dir + "/out1_graph_edges.txt");
  if (node_lines.empty() || edge_lines.empty()) {
    fail(ErrorKind::Load, dir + ": empty node or edge file");
  }

  std::unordered_map<std::string, int> index;
  std::vector<std::vector<double>> feats;
  std::vector<std::string> labels;
  for (size_t li = 1; li < node_lines.size(); ++li) {  // line 0 is the header
    if (node_lines[li].empty()) continue;
    auto cols = split(node_lines[li], '\t');
    if (cols.size() != 3) {
      fail(ErrorKind::Shape, dir + ": node line " + std::to_string(li + 1) +
                                 " does not have 3 tab-separated fields");
    }
    if (!index.emplace(cols[0], static_cast<int>(feats.size())).second) {
      fail(ErrorKind::Data, dir + ": duplicate node id " + cols[0]);
    }
    auto ftoks = split(cols[1], ',');
    std::vector<double> row;
    row.reserve(ftoks.size());
    for (const auto& t : ftoks) row.push_back(parse_double(t, dir));
    if (!feats.empty() && row.size() != feats.front().size()) {
      fail(ErrorKind::Shape, dir + ": inconsistent feature width at node " +
                                 cols[0]);
    }
    feats.push_back(std::move(row));
    labels.push_back(cols[2]);
  }

  const int n = static_cast<int>(feats.size());
  const int d = n ? static_cast<int>(feats.front().size()) : 0;
  AttributedGraph g;
  g.features = Matrix::Zero(n, d);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < d; ++j) g.features(i, j) = feats[i][j];
  g.labels = densify_labels(labels);
  g.adjacency = Matrix::Zero(n, n);
  for (size_t li = 1; li < edge_lines.size(); ++li) {
    if (edge_lines[li].empty()) continue;
    auto cols = split_ws(edge_lines[li]);
    if (cols.size() != 2) {
      fail(ErrorKind::Shape, dir + ": edge line " + std::to_string(li + 1) +
                                 " does not have 2 fields");
    }
    auto a = index.find(cols[0]);
    auto b = index.find(cols[1]);
    if (a == index.end() || b == index.end()) {
      fail(ErrorKind::Data, dir + ": edge references unknown node id");
    }
    g.adjacency(a->second, b->second) = 1.0;
  }
  finalize(g);
  return g;
}

AttributedGraph load_planetoid(const std::string& dir) {
  std::string content_path, cites_path;
  if (!fs::is_directory(dir)) fail(ErrorKind::Load, dir + ": not a directory");
  for (const auto& entry : fs::directory_iterator(dir)) {
    auto p = entry.path().string();
    if (p.size() >= 8 && p.substr(p.size() - 8) == ".content") {
      if (!content_path.empty())
        fail(ErrorKind::Load, dir + ": multiple .content files");
      content_path = p;
    } else if (p.size() >= 6 && p.substr(p.size() - 6) == ".cites") {
      if (!cites_path.empty())
        fail(ErrorKind::Load, dir + ": multiple .cites files");
      cites_path = p;
    }
  }
  if (content_path.empty() || cites_path.empty()) {
    fail(ErrorKind::Load, dir + ": need one .content and one .cites file");
  }

  auto content = read_lines(content_path);
  std::unordered_map<std::string, int> index;
  std::vector<std::vector<double>> feats;
  std::vector<std::string> labels;
  size_t width = 0;
  for (size_t li = 0; li < content.size(); ++li) {
    if (content[li].empty()) continue;
    auto cols = split_ws(content[li]);
    if (cols.size() < 3) {
      fail(ErrorKind::Shape,
           content_path + ": line " + std::to_string(li + 1) + " too short");
    }
    if (width == 0) width = cols.size();
    if (cols.size() != width) {
      fail(ErrorKind::Shape, content_path + ": inconsistent column count at line " +
                                 std::to_string(li + 1));
    }
    if (!index.emplace(cols[0], static_cast<int>(feats.size())).second) {
      fail(ErrorKind::Data, content_path + ": duplicate id " + cols[0]);
    }
    std::vector<double> row;
    row.reserve(width - 2);
    for (size_t j = 1; j + 1 < cols.size(); ++j)
      row.push_back(parse_double(cols[j], content_path));
    feats.push_back(std::move(row));
    labels.push_back(cols.back());
  }

  const int n = static_cast<int>(feats.size());
  const int d = n ? static_cast<int>(feats.front().size()) : 0;
  AttributedGraph g;
  g.features = Matrix::Zero(n, d);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < d; ++j) g.features(i, j) = feats[i][j];
  g.labels = densify_labels(labels);
  g.adjacency = Matrix::Zero(n, n);
  for (const auto& line : read_lines(cites_path)) {
    if (line.empty()) continue;
    auto cols = split_ws(line);
    if (cols.size() != 2) {
      fail(ErrorKind::Shape, cites_path + ": citation line needs 2 fields");
    }
    auto a = index.find(cols[0]);
    auto b = index.find(cols[1]);
    // Citations into ids absent from the content file are dropped.
    if (a == index.end() || b == index.end()) continue;
    g.adjacency(a->second, b->second) = 1.0;
  }
  finalize(g);
  return g;
}

AttributedGraph load_canonical(const std::string& dir) {
  auto node_lines = read_lines(dir + "/nodes.csv");
  auto edge_lines = read_lines(dir + "/edges.csv");
  if (node_lines.empty()) fail(ErrorKind::Load, dir + "/nodes.csv is empty");
  if (edge_lines.empty()) fail(ErrorKind::Load, dir + "/edges.csv is empty");

  auto header = split(node_lines[0], ',');
  if (header.size() < 2 || header[0] != "id" || header[1] != "label") {
    fail(ErrorKind::Shape, dir + "/nodes.csv: header must start with id,label");
  }
  const int d = static_cast<int>(header.size()) - 2;

  const int n_rows = static_cast<int>(
      std::count_if(node_lines.begin() + 1, node_lines.end(),
                    [](const std::string& s) { return !s.empty(); }));
  AttributedGraph g;
  g.features = Matrix::Zero(n_rows, d);
  std::vector<long> raw_labels(n_rows, -1);
  std::vector<bool> seen(n_rows, false);
  for (size_t li = 1; li < node_lines.size(); ++li) {
    if (node_lines[li].empty()) continue;
    auto cols = split(node_lines[li], ',');
    if (static_cast<int>(cols.size()) != d + 2) {
      fail(ErrorKind::Shape, dir + "/nodes.csv: line " + std::to_string(li + 1) +
                                 " has wrong column count");
    }
    long id = parse_long(cols[0], dir + "/nodes.csv");
    if (id < 0 || id >= n_rows) {
      fail(ErrorKind::Data, dir + "/nodes.csv: id " + cols[0] +
                                " outside the dense 0-based range");
    }
    if (seen[id]) fail(ErrorKind::Data, dir + "/nodes.csv: duplicate id " + cols[0]);
    seen[id] = true;
    raw_labels[id] = parse_long(cols[1], dir + "/nodes.csv");
    for (int j = 0; j < d; ++j) {
      g.features(id, j) = parse_double(cols[j + 2], dir + "/nodes.csv");
    }
  }

  const bool any_known =
      std::any_of(raw_labels.begin(), raw_labels.end(), [](long v) { return v >= 0; });
  const bool any_unknown =
      std::any_of(raw_labels.begin(), raw_labels.end(), [](long v) { return v < 0; });
  if (any_known && any_unknown) {
    fail(ErrorKind::Data, dir + "/nodes.csv: mix of labeled and -1 nodes");
  }
  if (any_known) {
    std::vector<long> uniq(raw_labels);
    std::sort(uniq.begin(), uniq.end());
    uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
    std::map<long, int> remap;
    for (size_t i = 0; i < uniq.size(); ++i) remap[uniq[i]] = static_cast<int>(i);
    g.labels.resize(n_rows);
    for (int i = 0; i < n_rows; ++i) g.labels[i] = remap[raw_labels[i]];
  }

  if (split(edge_lines[0], ',') != std::vector<std::string>{"src", "dst"}) {
    fail(ErrorKind::Shape, dir + "/edges.csv: header must be src,dst");
  }
  g.adjacency = Matrix::Zero(n_rows, n_rows);
  for (size_t li = 1; li < edge_lines.size(); ++li) {
    if (edge_lines[li].empty()) continue;
    auto cols = split(edge_lines[li], ',');
    if (cols.size() != 2) {
      fail(ErrorKind::Shape, dir + "/edges.csv: line " + std::to_string(li + 1) +
                                 " has wrong column count");
    }
    long a = parse_long(cols[0], dir + "/edges.csv");
    long b = parse_long(cols[1], dir + "/edges.csv");
    if (a < 0 || a >= n_rows || b < 0 || b >= n_rows) {
      fail(ErrorKind::Data, dir + "/edges.csv: node id out of range at line " +
                                std::to_string(li + 1));
    }
    g.adjacency(a, b) = 1.0;
  }
  finalize(g);
  return g;
}

}  // namespace

GraphFormat parse_format(const std::string& name) {
  if (name == "canonical_csv") return GraphFormat::CanonicalCsv;
  if (name == "webkb") return GraphFormat::WebKB;
  if (name == "planetoid") return GraphFormat::Planetoid;
  fail(ErrorKind::Config, "unknown dataset format '" + name + "'");
}

const char* format_name(GraphFormat format) {
  switch (format) {
    case GraphFormat::CanonicalCsv:
      return "canonical_csv";
    case GraphFormat::WebKB:
      return "webkb";
    case GraphFormat::Planetoid:
      return "planetoid";
  }
  return "unknown";
}

AttributedGraph load_graph(const std::string& dir, GraphFormat format) {
  switch (format) {
    case GraphFormat::CanonicalCsv:
      return load_canonical(dir);
    case GraphFormat::WebKB:
      return load_webkb(dir);
    case GraphFormat::Planetoid:
      return load_planetoid(dir);
  }
  fail(ErrorKind::Config, "unknown dataset format");
}

void write_edges_csv(const std::string& path, const Matrix& adjacency) {
  std::ofstream out(path);
  if (!out) fail(ErrorKind::Load, "cannot write " + path);
  out << "src,dst\n";
  const Eigen::Index n = adjacency.rows();
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i + 1; j < n; ++j) {
      if (adjacency(i, j) != 0.0) out << i << "," << j << "\n";
    }
  }
  if (!out.good()) fail(ErrorKind::Load, "failed writing " + path);
}

}  // namespace pfgc
