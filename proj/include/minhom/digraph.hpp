#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "minhom/errors.hpp"

namespace minhom {

/// Loop-free directed graph over named vertices.
///
/// The declaration order of the vertices is the canonical order; every
/// deterministic tie-break in the library (witnesses, topological orders,
/// assignment ties) is lexicographic with respect to it.  A digon is stored
/// as two ordinary arcs.
class Digraph {
 public:
  Digraph() = default;
  explicit Digraph(std::vector<std::string> labels);

  static Digraph from_arcs(std::vector<std::string> labels,
                           const std::vector<std::pair<std::string, std::string>>& arcs);

  int size() const { return static_cast<int>(labels_.size()); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int v) const { return labels_.at(v); }
  int index_of(const std::string& label) const;
  std::optional<int> try_index(const std::string& label) const;

  /// Inserts an arc; returns false if it was already present.  Loops throw.
  bool add_arc(int from, int to);
  bool add_arc(const std::string& from, const std::string& to);

  bool has_arc(int from, int to) const { return arcs_.count({from, to}) > 0; }
  bool adjacent(int u, int v) const { return has_arc(u, v) || has_arc(v, u); }
  bool has_digon(int u, int v) const { return has_arc(u, v) && has_arc(v, u); }
  int arc_count() const { return static_cast<int>(arcs_.size()); }
  const std::set<std::pair<int, int>>& arcs() const { return arcs_; }

  const std::vector<int>& out_neighbors(int v) const { return out_.at(v); }
  const std::vector<int>& in_neighbors(int v) const { return in_.at(v); }
  int out_degree(int v) const { return static_cast<int>(out_.at(v).size()); }
  int in_degree(int v) const { return static_cast<int>(in_.at(v).size()); }
  bool isolated(int v) const { return out_degree(v) == 0 && in_degree(v) == 0; }

  /// Subgraph induced by `vertices` (pass ascending indices to keep the
  /// canonical order of the host graph).
  Digraph induced(const std::vector<int>& vertices) const;

  bool operator==(const Digraph& other) const {
    return labels_ == other.labels_ && arcs_ == other.arcs_;
  }

 private:
  void check_vertex(int v) const;

  std::vector<std::string> labels_;
  std::map<std::string, int> index_;
  std::set<std::pair<int, int>> arcs_;
  std::vector<std::vector<int>> out_, in_;
};

/// Reverses every arc; vertex labels and order are kept.
Digraph dual(const Digraph& d);

/// Loop-free undirected graph with the same canonical-order conventions.
class UndirectedGraph {
 public:
  UndirectedGraph() = default;
  explicit UndirectedGraph(std::vector<std::string> labels);

  static UndirectedGraph from_edges(std::vector<std::string> labels,
                                    const std::vector<std::pair<std::string, std::string>>& edges);

  int size() const { return static_cast<int>(labels_.size()); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int v) const { return labels_.at(v); }
  int index_of(const std::string& label) const;

  bool add_edge(int u, int v);
  bool add_edge(const std::string& u, const std::string& v);

  bool has_edge(int u, int v) const {
    if (u > v) std::swap(u, v);
    return edges_.count({u, v}) > 0;
  }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  /// Edges normalized as (low, high), in lexicographic order.
  const std::set<std::pair<int, int>>& edges() const { return edges_; }

  const std::vector<int>& neighbors(int v) const { return adj_.at(v); }
  int degree(int v) const { return static_cast<int>(adj_.at(v).size()); }

  bool operator==(const UndirectedGraph& other) const {
    return labels_ == other.labels_ && edges_ == other.edges_;
  }

 private:
  void check_vertex(int v) const;

  std::vector<std::string> labels_;
  std::map<std::string, int> index_;
  std::set<std::pair<int, int>> edges_;
  std::vector<std::vector<int>> adj_;
};

}  // namespace minhom
