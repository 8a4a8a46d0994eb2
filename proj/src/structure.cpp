#include "minhom/structure.hpp"

#include <algorithm>
#include <map>
#include <queue>

namespace minhom {

namespace {

// Rotates a closed cycle sequence (first == last) so the least vertex leads.
std::vector<int> normalize_cycle(std::vector<int> cycle) {
  cycle.pop_back();
  auto least = std::min_element(cycle.begin(), cycle.end());
  std::rotate(cycle.begin(), least, cycle.end());
  cycle.push_back(cycle.front());
  return cycle;
}

std::vector<int> find_directed_cycle(const Digraph& d) {
  const int n = d.size();
  std::vector<int> state(n, 0);  // 0 new, 1 on stack, 2 done
  std::vector<int> stack, next(n, 0);
  for (int root = 0; root < n; ++root) {
    if (state[root] != 0) continue;
    stack.assign(1, root);
    state[root] = 1;
    next[root] = 0;
    while (!stack.empty()) {
      int v = stack.back();
      const auto& out = d.out_neighbors(v);
      if (next[v] == static_cast<int>(out.size())) {
        state[v] = 2;
        stack.pop_back();
        continue;
      }
      int w = out[next[v]++];
      if (state[w] == 1) {
        std::vector<int> cycle;
        auto it = std::find(stack.begin(), stack.end(), w);
        cycle.assign(it, stack.end());
        cycle.push_back(w);
        return normalize_cycle(std::move(cycle));
      }
      if (state[w] == 0) {
        state[w] = 1;
        next[w] = 0;
        stack.push_back(w);
      }
    }
  }
  return {};
}

std::vector<int> underlying_neighbors(const Digraph& d, int v) {
  std::vector<int> merged;
  const auto& a = d.out_neighbors(v);
  const auto& b = d.in_neighbors(v);
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(merged));
  return merged;
}

}  // namespace

StructureReport structure_report(const Digraph& d) {
  const int n = d.size();
  StructureReport r;

  // Topological order via in-degree peeling; the min-heap makes the result
  // the lexicographically least order.
  std::vector<int> indeg(n);
  std::priority_queue<int, std::vector<int>, std::greater<int>> ready;
  for (int v = 0; v < n; ++v) {
    indeg[v] = d.in_degree(v);
    if (indeg[v] == 0) ready.push(v);
  }
  while (!ready.empty()) {
    int v = ready.top();
    ready.pop();
    r.topological_order.push_back(v);
    for (int w : d.out_neighbors(v))
      if (--indeg[w] == 0) ready.push(w);
  }
  r.acyclic = static_cast<int>(r.topological_order.size()) == n;
  if (!r.acyclic) {
    r.topological_order.clear();
    r.cycle_witness = find_directed_cycle(d);
  }

  for (int v = 0; v < n; ++v) {
    if (d.in_degree(v) == 0) r.sources.push_back(v);
    if (d.out_degree(v) == 0) r.sinks.push_back(v);
  }

  // Weak components and a 2-coloring of the underlying graph, both by BFS
  // from the least unvisited vertex.
  std::vector<int> side(n, -1);
  std::vector<int> parent(n, -1);
  for (int root = 0; root < n && r.underlying_bipartite; ++root) {
    if (side[root] != -1) continue;
    std::vector<int> component;
    std::queue<int> queue;
    side[root] = 0;
    queue.push(root);
    while (!queue.empty() && r.underlying_bipartite) {
      int v = queue.front();
      queue.pop();
      component.push_back(v);
      for (int w : underlying_neighbors(d, v)) {
        if (side[w] == -1) {
          side[w] = side[v] ^ 1;
          parent[w] = v;
          queue.push(w);
        } else if (side[w] == side[v]) {
          // Odd cycle: join the two BFS paths at their lowest common ancestor.
          std::vector<int> pv, pw;
          for (int x = v; x != -1; x = parent[x]) pv.push_back(x);
          for (int x = w; x != -1; x = parent[x]) pw.push_back(x);
          while (pv.size() > 1 && pw.size() > 1 &&
                 pv[pv.size() - 2] == pw[pw.size() - 2]) {
            pv.pop_back();
            pw.pop_back();
          }
          std::vector<int> cycle(pv.begin(), pv.end());
          cycle.insert(cycle.end(), pw.rbegin() + 1, pw.rend());
          cycle.push_back(v);
          r.odd_cycle_witness = normalize_cycle(std::move(cycle));
          r.underlying_bipartite = false;
        }
      }
    }
    std::sort(component.begin(), component.end());
    r.weak_components.push_back(std::move(component));
  }
  if (!r.underlying_bipartite) {
    // Finish the component sweep without the coloring.
    std::vector<char> seen(n, 0);
    r.weak_components.clear();
    for (int root = 0; root < n; ++root) {
      if (seen[root]) continue;
      std::vector<int> component;
      std::queue<int> queue;
      seen[root] = 1;
      queue.push(root);
      while (!queue.empty()) {
        int v = queue.front();
        queue.pop();
        component.push_back(v);
        for (int w : underlying_neighbors(d, v))
          if (!seen[w]) {
            seen[w] = 1;
            queue.push(w);
          }
      }
      std::sort(component.begin(), component.end());
      r.weak_components.push_back(std::move(component));
    }
  } else {
    for (int v = 0; v < n; ++v) r.bipartition[side[v]].push_back(v);
  }
  return r;
}

namespace {

std::vector<std::vector<char>> reachability(const Digraph& d,
                                            const std::vector<int>& topo) {
  const int n = d.size();
  std::vector<std::vector<char>> reach(n, std::vector<char>(n, 0));
  for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
    int v = *it;
    for (int w : d.out_neighbors(v)) {
      reach[v][w] = 1;
      for (int x = 0; x < n; ++x)
        if (reach[w][x]) reach[v][x] = 1;
    }
  }
  return reach;
}

}  // namespace

Digraph transitive_closure(const Digraph& d) {
  auto report = structure_report(d);
  if (!report.acyclic) fail(Errc::cyclic_input, "transitive closure needs an acyclic digraph");
  auto reach = reachability(d, report.topological_order);
  Digraph result(d.labels());
  for (int v = 0; v < d.size(); ++v)
    for (int w = 0; w < d.size(); ++w)
      if (reach[v][w]) result.add_arc(v, w);
  return result;
}

Digraph restricted_closure(const Digraph& d) {
  auto report = structure_report(d);
  if (!report.acyclic) fail(Errc::cyclic_input, "restricted closure needs an acyclic digraph");
  for (int v = 0; v < d.size(); ++v)
    if (d.isolated(v))
      fail(Errc::isolated_vertex, "isolated vertex '" + d.label(v) + "'");
  auto reach = reachability(d, report.topological_order);
  std::vector<char> is_source(d.size(), 0), is_sink(d.size(), 0);
  for (int s : report.sources) is_source[s] = 1;
  for (int t : report.sinks) is_sink[t] = 1;
  Digraph result(d.labels());
  for (const auto& [a, b] : d.arcs()) result.add_arc(a, b);
  for (int v = 0; v < d.size(); ++v)
    for (int w = 0; w < d.size(); ++w) {
      if (!reach[v][w] || result.has_arc(v, w)) continue;
      if (is_source[v] && is_sink[w]) continue;
      result.add_arc(v, w);
    }
  return result;
}

std::optional<std::vector<std::vector<int>>> partite_sets(const Digraph& h) {
  const int n = h.size();
  // Nonadjacency neighborhoods, each including the vertex itself.
  std::vector<std::vector<int>> bar(n);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (u == v || !h.adjacent(u, v)) bar[u].push_back(v);
  std::vector<char> assigned(n, 0);
  std::vector<std::vector<int>> classes;
  for (int u = 0; u < n; ++u) {
    if (assigned[u]) continue;
    for (int v : bar[u])
      if (bar[v] != bar[u]) return std::nullopt;
    for (int v : bar[u]) assigned[v] = 1;
    classes.push_back(bar[u]);
  }
  return classes;
}

QuotientInfo similarity_quotient(const Digraph& h) {
  const int n = h.size();
  std::map<std::pair<std::vector<int>, std::vector<int>>, std::vector<int>> buckets;
  for (int v = 0; v < n; ++v)
    buckets[{h.out_neighbors(v), h.in_neighbors(v)}].push_back(v);

  std::vector<std::vector<int>> classes;
  for (auto& [key, members] : buckets) classes.push_back(members);
  std::sort(classes.begin(), classes.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });

  QuotientInfo q;
  q.classes = std::move(classes);
  q.class_of.assign(n, -1);
  std::vector<std::string> base_labels;
  for (int c = 0; c < static_cast<int>(q.classes.size()); ++c) {
    base_labels.push_back(h.label(q.classes[c].front()));
    for (int v : q.classes[c]) q.class_of[v] = c;
  }
  q.base = Digraph(std::move(base_labels));
  for (int a = 0; a < static_cast<int>(q.classes.size()); ++a)
    for (int b = 0; b < static_cast<int>(q.classes.size()); ++b)
      if (a != b && h.has_arc(q.classes[a].front(), q.classes[b].front()))
        q.base.add_arc(a, b);
  return q;
}

bool quotient_matches(const Digraph& h, const QuotientInfo& q) {
  const int n = h.size();
  const int m = static_cast<int>(q.classes.size());
  if (q.base.size() != m || static_cast<int>(q.class_of.size()) != n) return false;
  std::vector<char> seen(n, 0);
  for (int c = 0; c < m; ++c) {
    if (q.classes[c].empty()) return false;
    if (q.base.label(c) != h.label(q.classes[c].front())) return false;
    for (int v : q.classes[c]) {
      if (v < 0 || v >= n || seen[v] || q.class_of[v] != c) return false;
      seen[v] = 1;
      if (h.out_neighbors(v) != h.out_neighbors(q.classes[c].front())) return false;
      if (h.in_neighbors(v) != h.in_neighbors(q.classes[c].front())) return false;
    }
  }
  for (int v = 0; v < n; ++v)
    if (!seen[v]) return false;
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      if (a == b) continue;
      bool host = h.has_arc(q.classes[a].front(), q.classes[b].front());
      if (host != q.base.has_arc(a, b)) return false;
    }
  return true;
}

BaseShape recognize_base(const Digraph& b) {
  const int n = b.size();
  BaseShape shape;
  if (n == 0) return shape;

  auto report = structure_report(b);
  const int full = n * (n - 1) / 2;

  if (report.acyclic && b.arc_count() == full) {
    const auto& order = report.topological_order;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (!b.has_arc(order[i], order[j])) return shape;
    return {BaseFamily::tt, n, order};
  }

  if (n >= 2) {
    bool all_one = true;
    for (int v = 0; v < n && all_one; ++v)
      all_one = b.out_degree(v) == 1 && b.in_degree(v) == 1;
    if (all_one) {
      std::vector<int> walk{0};
      int v = 0;
      for (int step = 0; step < n; ++step) {
        v = b.out_neighbors(v).front();
        walk.push_back(v);
      }
      if (walk.back() == 0 && static_cast<int>(walk.size()) == n + 1) {
        std::vector<char> seen(n, 0);
        bool simple = true;
        for (int i = 0; i < n; ++i) {
          if (seen[walk[i]]) simple = false;
          seen[walk[i]] = 1;
        }
        if (simple) {
          walk.pop_back();
          return {BaseFamily::cycle, n, walk};
        }
      }
    }
  }

  if (n >= 3 && report.acyclic && b.arc_count() == full - 1) {
    // The degree profile of an acyclic tournament minus its source-to-sink
    // arc pins the order down completely.
    std::vector<int> order(n);
    for (int v = 0; v < n; ++v) order[v] = v;
    std::sort(order.begin(), order.end(), [&](int x, int y) {
      if (b.in_degree(x) != b.in_degree(y)) return b.in_degree(x) < b.in_degree(y);
      if (b.out_degree(x) != b.out_degree(y)) return b.out_degree(x) > b.out_degree(y);
      return x < y;
    });
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        bool expect = !(i == 0 && j == n - 1);
        if (b.has_arc(order[i], order[j]) != expect) return shape;
        if (b.has_arc(order[j], order[i])) return shape;
      }
    return {BaseFamily::tt_minus, n, order};
  }

  return shape;
}

}  // namespace minhom
