#include "minhom/digraph.hpp"

#include <algorithm>

namespace minhom {

namespace {

void insert_sorted(std::vector<int>& v, int x) {
  auto it = std::lower_bound(v.begin(), v.end(), x);
  v.insert(it, x);
}

std::map<std::string, int> build_index(const std::vector<std::string>& labels) {
  std::map<std::string, int> index;
  for (int i = 0; i < static_cast<int>(labels.size()); ++i) {
    if (labels[i].empty()) fail(Errc::parse_error, "empty vertex label");
    if (!index.emplace(labels[i], i).second)
      fail(Errc::parse_error, "duplicate vertex label '" + labels[i] + "'");
  }
  return index;
}

}  // namespace

Digraph::Digraph(std::vector<std::string> labels)
    : labels_(std::move(labels)), index_(build_index(labels_)),
      out_(labels_.size()), in_(labels_.size()) {}

Digraph Digraph::from_arcs(std::vector<std::string> labels,
                           const std::vector<std::pair<std::string, std::string>>& arcs) {
  Digraph d(std::move(labels));
  for (const auto& [a, b] : arcs) d.add_arc(a, b);
  return d;
}

void Digraph::check_vertex(int v) const {
  if (v < 0 || v >= size()) fail(Errc::unknown_label, "vertex index out of range");
}

int Digraph::index_of(const std::string& label) const {
  auto it = index_.find(label);
  if (it == index_.end()) fail(Errc::unknown_label, "unknown vertex '" + label + "'");
  return it->second;
}

std::optional<int> Digraph::try_index(const std::string& label) const {
  auto it = index_.find(label);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool Digraph::add_arc(int from, int to) {
  check_vertex(from);
  check_vertex(to);
  if (from == to) fail(Errc::parse_error, "loop at '" + labels_[from] + "'");
  if (!arcs_.emplace(from, to).second) return false;
  insert_sorted(out_[from], to);
  insert_sorted(in_[to], from);
  return true;
}

bool Digraph::add_arc(const std::string& from, const std::string& to) {
  return add_arc(index_of(from), index_of(to));
}

Digraph Digraph::induced(const std::vector<int>& vertices) const {
  std::vector<std::string> labels;
  labels.reserve(vertices.size());
  std::vector<int> pos(size(), -1);
  for (int i = 0; i < static_cast<int>(vertices.size()); ++i) {
    check_vertex(vertices[i]);
    labels.push_back(labels_[vertices[i]]);
    pos[vertices[i]] = i;
  }
  Digraph result(std::move(labels));
  for (const auto& [a, b] : arcs_)
    if (pos[a] >= 0 && pos[b] >= 0) result.add_arc(pos[a], pos[b]);
  return result;
}

Digraph dual(const Digraph& d) {
  Digraph r(d.labels());
  for (const auto& [a, b] : d.arcs()) r.add_arc(b, a);
  return r;
}

UndirectedGraph::UndirectedGraph(std::vector<std::string> labels)
    : labels_(std::move(labels)), index_(build_index(labels_)), adj_(labels_.size()) {}

UndirectedGraph UndirectedGraph::from_edges(
    std::vector<std::string> labels,
    const std::vector<std::pair<std::string, std::string>>& edges) {
  UndirectedGraph g(std::move(labels));
  for (const auto& [a, b] : edges) g.add_edge(a, b);
  return g;
}

void UndirectedGraph::check_vertex(int v) const {
  if (v < 0 || v >= size()) fail(Errc::unknown_label, "vertex index out of range");
}

int UndirectedGraph::index_of(const std::string& label) const {
  auto it = index_.find(label);
  if (it == index_.end()) fail(Errc::unknown_label, "unknown vertex '" + label + "'");
  return it->second;
}

bool UndirectedGraph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) fail(Errc::parse_error, "loop at '" + labels_[u] + "'");
  if (u > v) std::swap(u, v);
  if (!edges_.emplace(u, v).second) return false;
  insert_sorted(adj_[u], v);
  insert_sorted(adj_[v], u);
  return true;
}

bool UndirectedGraph::add_edge(const std::string& u, const std::string& v) {
  return add_edge(index_of(u), index_of(v));
}

}  // namespace minhom
