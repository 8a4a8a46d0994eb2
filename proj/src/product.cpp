#include "minhom/product.hpp"

#include <algorithm>
#include <limits>

namespace minhom {

namespace {

void check_cancel(const std::atomic<bool>* cancel) {
  if (cancel && cancel->load(std::memory_order_relaxed))
    fail(Errc::cancelled, "search cancelled");
}

}  // namespace

ProductGraph homomorphic_product(const HomInstance& inst) {
  if (inst.objective != Objective::max)
    fail(Errc::misuse, "homomorphic product is defined for maximization; complement first");

  const int n = inst.d.size();
  Cost mu = 0;
  for (const auto& row : inst.costs.entries)
    for (Cost c : row) mu = std::max(mu, c);
  const Cost shift = mu * static_cast<Cost>(n);

  ProductGraph pg;
  std::vector<std::vector<int>> id(n);
  std::vector<std::string> labels;
  for (int u = 0; u < n; ++u) {
    id[u].assign(inst.h.size(), -1);
    for (int i : inst.domain(u)) {
      id[u][i] = static_cast<int>(pg.nodes.size());
      pg.nodes.push_back({u, i});
      pg.weights.push_back(inst.cost_at(u, i) + shift);
      labels.push_back(inst.d.label(u) + ":" + inst.h.label(i));
    }
  }
  pg.graph = UndirectedGraph(std::move(labels));
  for (int u = 0; u < n; ++u) {
    const auto dom = inst.domain(u);
    for (std::size_t a = 0; a < dom.size(); ++a)
      for (std::size_t b = a + 1; b < dom.size(); ++b)
        pg.graph.add_edge(id[u][dom[a]], id[u][dom[b]]);
  }
  for (const auto& [u, v] : inst.d.arcs())
    for (int i : inst.domain(u))
      for (int j : inst.domain(v))
        if (!inst.h.has_arc(i, j)) pg.graph.add_edge(id[u][i], id[v][j]);
  return pg;
}

namespace {

struct MwisSearch {
  const UndirectedGraph& g;
  std::span<const Cost> weights;
  const std::atomic<bool>* cancel;
  std::vector<std::vector<char>> adj;
  std::vector<int> best_set, current;
  Cost best_total = -1;
  long long steps = 0;

  // Upper bound: cover the candidates by cliques greedily in weight order;
  // an independent set takes at most the heaviest member of each clique.
  Cost bound(const std::vector<int>& candidates) const {
    std::vector<int> order = candidates;
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return weights[a] > weights[b]; });
    std::vector<std::vector<int>> cliques;
    Cost total = 0;
    for (int v : order) {
      bool placed = false;
      for (auto& clique : cliques) {
        bool fits = true;
        for (int w : clique)
          if (!adj[v][w]) {
            fits = false;
            break;
          }
        if (fits) {
          clique.push_back(v);
          placed = true;
          break;
        }
      }
      if (!placed) {
        cliques.push_back({v});
        total += weights[v];  // first member is the heaviest
      }
    }
    return total;
  }

  void run(const std::vector<int>& candidates, Cost current_total) {
    if (++steps % 4096 == 0) check_cancel(cancel);
    if (candidates.empty()) {
      if (current_total > best_total ||
          (current_total == best_total &&
           std::lexicographical_compare(current.begin(), current.end(),
                                        best_set.begin(), best_set.end()))) {
        best_total = current_total;
        best_set = current;
      }
      return;
    }
    if (current_total + bound(candidates) < best_total) return;
    int v = candidates.front();
    std::vector<int> rest;
    rest.reserve(candidates.size());
    for (std::size_t i = 1; i < candidates.size(); ++i)
      if (!adj[v][candidates[i]]) rest.push_back(candidates[i]);
    current.push_back(v);
    run(rest, current_total + weights[v]);
    current.pop_back();
    rest.assign(candidates.begin() + 1, candidates.end());
    run(rest, current_total);
  }
};

}  // namespace

MwisResult mwis_exact(const UndirectedGraph& g, std::span<const Cost> weights,
                      std::size_t limit, const std::atomic<bool>* cancel) {
  const int n = g.size();
  if (static_cast<std::size_t>(n) > limit)
    fail(Errc::size_limit, "independent-set search limited to " + std::to_string(limit) +
                               " vertices, got " + std::to_string(n));
  if (static_cast<int>(weights.size()) != n)
    fail(Errc::bad_parameter, "one weight per vertex expected");
  for (Cost w : weights)
    if (w < 0) fail(Errc::bad_parameter, "weights must be nonnegative");

  MwisSearch search{g, weights, cancel, {}, {}, {}, -1, 0};
  search.adj.assign(n, std::vector<char>(n, 0));
  for (const auto& [a, b] : g.edges()) {
    search.adj[a][b] = 1;
    search.adj[b][a] = 1;
  }
  std::vector<int> candidates(n);
  for (int v = 0; v < n; ++v) candidates[v] = v;
  search.run(candidates, 0);

  MwisResult result;
  result.vertices = search.best_set;
  std::sort(result.vertices.begin(), result.vertices.end());
  result.total = std::max<Cost>(search.best_total, 0);
  return result;
}

Solution solve_via_product(const HomInstance& inst, std::size_t limit,
                           const std::atomic<bool>* cancel) {
  const HomInstance work =
      inst.objective == Objective::min ? complement_costs(inst) : inst;
  ProductGraph pg = homomorphic_product(work);
  MwisResult mis = mwis_exact(pg.graph, pg.weights, limit, cancel);

  Solution sol;
  sol.solver = "product";
  if (static_cast<int>(mis.vertices.size()) < inst.d.size()) return sol;
  sol.status = Solution::Status::optimal;
  sol.assignment.assign(inst.d.size(), -1);
  for (int node : mis.vertices) sol.assignment[pg.nodes[node].first] = pg.nodes[node].second;
  sol.cost = assignment_cost(inst, sol.assignment);
  return sol;
}

namespace {

struct Backtracker {
  const HomInstance& inst;
  const std::atomic<bool>* cancel;
  bool minimize;
  std::vector<std::vector<char>> domains;  // domains[u][i]
  std::vector<int> assignment, best_assignment;
  Cost best = 0;
  bool found = false;
  long long steps = 0;

  Cost extreme_remaining(int from) const {
    Cost total = 0;
    for (int u = from; u < inst.d.size(); ++u) {
      Cost ext = minimize ? std::numeric_limits<Cost>::max() : 0;
      for (int i = 0; i < inst.h.size(); ++i) {
        if (!domains[u][i]) continue;
        Cost c = inst.cost_at(u, i);
        ext = minimize ? std::min(ext, c) : std::max(ext, c);
      }
      total += ext;
    }
    return total;
  }

  bool prune(Cost current, int next) const {
    if (!found) return false;
    Cost optimistic = current + extreme_remaining(next);
    return minimize ? optimistic >= best : optimistic <= best;
  }

  void search(int u, Cost current) {
    if (++steps % 4096 == 0) check_cancel(cancel);
    if (u == inst.d.size()) {
      if (!found || (minimize ? current < best : current > best)) {
        found = true;
        best = current;
        best_assignment = assignment;
      }
      return;
    }
    if (prune(current, u)) return;
    for (int i = 0; i < inst.h.size(); ++i) {
      if (!domains[u][i]) continue;
      // Forward check against already decided and future vertices.
      bool ok = true;
      for (int w : inst.d.out_neighbors(u))
        if (w < u && !inst.h.has_arc(i, assignment[w])) {
          ok = false;
          break;
        }
      if (ok)
        for (int w : inst.d.in_neighbors(u))
          if (w < u && !inst.h.has_arc(assignment[w], i)) {
            ok = false;
            break;
          }
      if (!ok) continue;

      std::vector<std::pair<int, int>> trimmed;
      for (int w : inst.d.out_neighbors(u)) {
        if (w <= u) continue;
        for (int j = 0; j < inst.h.size(); ++j)
          if (domains[w][j] && !inst.h.has_arc(i, j)) {
            domains[w][j] = 0;
            trimmed.push_back({w, j});
          }
      }
      for (int w : inst.d.in_neighbors(u)) {
        if (w <= u) continue;
        for (int j = 0; j < inst.h.size(); ++j)
          if (domains[w][j] && !inst.h.has_arc(j, i)) {
            domains[w][j] = 0;
            trimmed.push_back({w, j});
          }
      }
      bool wiped = false;
      for (int w = u + 1; w < inst.d.size() && !wiped; ++w)
        wiped = std::none_of(domains[w].begin(), domains[w].end(),
                             [](char x) { return x != 0; });
      if (!wiped) {
        assignment[u] = i;
        search(u + 1, current + inst.cost_at(u, i));
      }
      for (auto [w, j] : trimmed) domains[w][j] = 1;
    }
  }
};

}  // namespace

Solution solve_backtracking(const HomInstance& inst, std::size_t limit,
                            const std::atomic<bool>* cancel) {
  std::size_t nodes = 0;
  for (int u = 0; u < inst.d.size(); ++u) nodes += inst.domain(u).size();
  if (nodes > limit)
    fail(Errc::size_limit, "search limited to " + std::to_string(limit) +
                               " vertex-color pairs, got " + std::to_string(nodes));

  Backtracker bt{inst, cancel, inst.objective == Objective::min, {}, {}, {}, 0, false, 0};
  bt.domains.assign(inst.d.size(), std::vector<char>(inst.h.size(), 0));
  for (int u = 0; u < inst.d.size(); ++u)
    for (int i : inst.domain(u)) bt.domains[u][i] = 1;
  bt.assignment.assign(inst.d.size(), -1);
  bt.search(0, 0);

  Solution sol;
  sol.solver = "backtracking";
  if (!bt.found) return sol;
  sol.status = Solution::Status::optimal;
  sol.assignment = bt.best_assignment;
  sol.cost = bt.best;
  return sol;
}

}  // namespace minhom
