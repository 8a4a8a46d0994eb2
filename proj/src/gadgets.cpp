#include "minhom/gadgets.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <utility>

#include "minhom/errors.hpp"
#include "minhom/product.hpp"

namespace minhom {
namespace {

std::vector<std::string> numbered_labels(int k) {
  std::vector<std::string> labels;
  labels.reserve(k);
  for (int i = 1; i <= k; ++i) labels.push_back(std::to_string(i));
  return labels;
}

Digraph fixed_target(int k, const std::vector<std::pair<int, int>>& arcs) {
  Digraph h(numbered_labels(k));
  for (auto [a, b] : arcs) h.add_arc(a - 1, b - 1);
  return h;
}

int parse_order(const std::string& text) {
  int k = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), k);
  if (ec != std::errc() || ptr != text.data() + text.size())
    fail(Errc::bad_parameter, "order is not a number: " + text);
  if (k < 1 || k > 1000) fail(Errc::bad_parameter, "order out of range: " + text);
  return k;
}

void ensure_subset_size(const UndirectedGraph& g) {
  if (g.size() > 20) fail(Errc::size_limit, "graph too large for subset enumeration");
}

// 2-colorability of the subgraph induced by `mask`.
bool induces_bipartite(const UndirectedGraph& g, unsigned mask) {
  std::vector<int> color(g.size(), -1);
  for (int root = 0; root < g.size(); ++root) {
    if (!(mask >> root & 1) || color[root] != -1) continue;
    color[root] = 0;
    std::vector<int> queue = {root};
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      int u = queue[qi];
      for (int v : g.neighbors(u)) {
        if (!(mask >> v & 1)) continue;
        if (color[v] == -1) {
          color[v] = 1 - color[u];
          queue.push_back(v);
        } else if (color[v] == color[u]) {
          return false;
        }
      }
    }
  }
  return true;
}

}  // namespace

Digraph named_target(const std::string& name) {
  if (name == "ac4")
    return fixed_target(4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}, {2, 4}});
  if (name == "c3tail")
    return fixed_target(4, {{1, 2}, {2, 3}, {3, 1}, {3, 4}, {4, 1}});
  if (name == "bt5")
    return fixed_target(5, {{1, 2}, {2, 3}, {3, 4}, {4, 1}, {1, 5}, {3, 5}});

  auto colon = name.find(':');
  if (colon == std::string::npos)
    fail(Errc::unknown_name, "unknown target name: " + name);
  const std::string head = name.substr(0, colon);
  const int k = parse_order(name.substr(colon + 1));

  if (head == "tt" || head == "ttminus") {
    if (head == "ttminus" && k < 3)
      fail(Errc::bad_parameter, "ttminus needs at least three vertices");
    Digraph h(numbered_labels(k));
    for (int i = 0; i < k; ++i)
      for (int j = i + 1; j < k; ++j) {
        if (head == "ttminus" && i == 0 && j == k - 1) continue;
        h.add_arc(i, j);
      }
    return h;
  }
  if (head == "cycle") {
    if (k < 2) fail(Errc::bad_parameter, "cycle needs at least two vertices");
    Digraph h(numbered_labels(k));
    for (int i = 0; i < k; ++i) h.add_arc(i, (i + 1) % k);
    return h;
  }
  fail(Errc::unknown_name, "unknown target name: " + name);
}

HomInstance ReductionOutput::instance() const {
  HomInstance inst;
  inst.d = d;
  inst.h = h;
  inst.costs = costs;
  inst.objective = Objective::min;
  validate(inst);
  return inst;
}

ReductionOutput reduce_ac(const UndirectedGraph& g, PairMode mode) {
  ReductionOutput out;
  out.source = g;
  out.target_name = "ac4";
  out.pair_mode = mode;
  out.h = named_target("ac4");

  std::vector<std::pair<int, int>> pairs;
  for (int x = 0; x < g.size(); ++x)
    for (int y = x + 1; y < g.size(); ++y) {
      bool selected = mode == PairMode::adjacent ? g.has_edge(x, y) : !g.has_edge(x, y);
      if (selected) pairs.emplace_back(x, y);
    }

  std::vector<std::string> labels = g.labels();
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    labels.push_back("p" + std::to_string(i) + ".u");
    labels.push_back("p" + std::to_string(i) + ".v");
  }
  Digraph d(labels);
  const int base = g.size();
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    int u = base + 2 * static_cast<int>(i);
    int v = u + 1;
    d.add_arc(u, pairs[i].first);
    d.add_arc(u, v);
    d.add_arc(v, pairs[i].second);
    out.gadgets.push_back({"p" + std::to_string(i), g.label(pairs[i].first),
                           g.label(pairs[i].second)});
  }

  const Cost n = d.size();
  const Cost big = n * n + n + 1;
  if (big > kMaxCostEntry)
    fail(Errc::cost_too_large, "source graph too large for the reduction cost scale");
  out.costs.row_labels = d.labels();
  out.costs.col_labels = out.h.labels();
  for (int p = 0; p < d.size(); ++p) {
    if (p < base)
      out.costs.entries.push_back({big, big, 1, n + 1});
    else
      out.costs.entries.push_back({1, 1, 1, big});
  }
  out.d = std::move(d);
  return out;
}

ReductionOutput reduce_c3tail(const UndirectedGraph& g, bool strict_costs) {
  ReductionOutput out;
  out.source = g;
  out.target_name = "c3tail";
  out.strict_costs = strict_costs;
  out.h = named_target("c3tail");

  const std::vector<std::pair<int, int>> edges(g.edges().begin(), g.edges().end());
  std::vector<std::string> labels = g.labels();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const std::string prefix = "e" + std::to_string(i) + ".";
    labels.push_back(prefix + "x");
    labels.push_back(prefix + "y");
    labels.push_back(prefix + "up");
    labels.push_back(prefix + "vp");
    for (int j = 1; j <= 12; ++j) labels.push_back(prefix + "c" + std::to_string(j));
  }
  Digraph d(labels);
  const int base = g.size();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    auto [u, v] = edges[i];
    const int x = base + 16 * static_cast<int>(i);
    const int y = x + 1;
    const int up = x + 2;
    const int vp = x + 3;
    const int c1 = x + 4;  // c1..c12 are consecutive
    d.add_arc(x, y);
    d.add_arc(x, c1);
    d.add_arc(y, c1);
    d.add_arc(c1 + 5, up);   // c6 -> u'
    d.add_arc(up, u);
    d.add_arc(c1 + 10, vp);  // c11 -> v'
    d.add_arc(vp, v);
    for (int j = 0; j < 12; ++j) d.add_arc(c1 + j, c1 + (j + 1) % 12);
    out.gadgets.push_back({"e" + std::to_string(i), g.label(u), g.label(v)});
  }

  out.costs.row_labels = d.labels();
  out.costs.col_labels = out.h.labels();
  for (int p = 0; p < d.size(); ++p) {
    if (p < base) {
      if (strict_costs)
        out.costs.entries.push_back({2, 1, 2, 2});
      else
        out.costs.entries.push_back({2, 1, 1, 1});
    } else {
      out.costs.entries.push_back({1, 1, 1, 1});
    }
  }
  out.d = std::move(d);
  return out;
}

CertifyReport certify_reduction(const ReductionOutput& r, int backtrack_limit) {
  HomInstance inst = r.instance();
  Solution sol = solve_backtracking(inst, backtrack_limit);
  if (sol.status != Solution::Status::optimal)
    fail(Errc::misuse, "reduction produced an infeasible instance");

  CertifyReport rep;
  rep.optimal = sol.cost;
  const int gn = r.source.size();

  auto all_pairs = [&](const std::vector<int>& picked, bool want_adjacent) {
    for (std::size_t a = 0; a < picked.size(); ++a)
      for (std::size_t b = a + 1; b < picked.size(); ++b)
        if (r.source.has_edge(picked[a], picked[b]) != want_adjacent) return false;
    return true;
  };

  if (r.target_name == "ac4") {
    const int color3 = r.h.index_of("3");
    std::vector<int> picked;
    for (int p = 0; p < gn; ++p)
      if (sol.assignment[p] == color3) picked.push_back(p);
    for (int p : picked) rep.extracted.push_back(r.source.label(p));

    const bool adjacent_mode = r.pair_mode == PairMode::adjacent;
    rep.oracle_size = adjacent_mode ? max_independent_set(r.source) : max_clique(r.source);
    const Cost n = r.d.size();
    const Cost selected = static_cast<Cost>(r.gadgets.size());
    rep.expected = 2 * selected + rep.oracle_size +
                   static_cast<Cost>(gn - rep.oracle_size) * (n + 1);
    rep.cost_matches = rep.optimal == rep.expected;
    rep.structure_valid = static_cast<int>(picked.size()) == rep.oracle_size &&
                          all_pairs(picked, !adjacent_mode);
    return rep;
  }

  if (r.target_name == "c3tail") {
    const int color1 = r.h.index_of("1");
    const int color2 = r.h.index_of("2");
    std::vector<int> picked;
    for (int p = 0; p < gn; ++p) {
      bool in_set = r.strict_costs ? sol.assignment[p] == color2
                                   : sol.assignment[p] != color1;
      if (in_set) picked.push_back(p);
    }
    for (int p : picked) rep.extracted.push_back(r.source.label(p));

    rep.oracle_size =
        r.strict_costs ? max_independent_set(r.source) : max_induced_bipartite(r.source);
    rep.expected = static_cast<Cost>(r.d.size()) + gn - rep.oracle_size;
    rep.cost_matches = rep.optimal == rep.expected;

    bool shape_ok;
    if (r.strict_costs) {
      shape_ok = all_pairs(picked, false);
    } else {
      unsigned mask = 0;
      for (int p : picked) mask |= 1u << p;
      shape_ok = induces_bipartite(r.source, mask);
    }
    rep.structure_valid = static_cast<int>(picked.size()) == rep.oracle_size && shape_ok;
    return rep;
  }

  fail(Errc::unknown_name, "unknown reduction kind: " + r.target_name);
}

int max_clique(const UndirectedGraph& g) {
  ensure_subset_size(g);
  int best = 0;
  for (unsigned mask = 0; mask < (1u << g.size()); ++mask) {
    if (std::popcount(mask) <= best) continue;
    bool ok = true;
    for (int a = 0; a < g.size() && ok; ++a) {
      if (!(mask >> a & 1)) continue;
      for (int b = a + 1; b < g.size() && ok; ++b)
        if ((mask >> b & 1) && !g.has_edge(a, b)) ok = false;
    }
    if (ok) best = std::popcount(mask);
  }
  return best;
}

int max_independent_set(const UndirectedGraph& g) {
  ensure_subset_size(g);
  int best = 0;
  for (unsigned mask = 0; mask < (1u << g.size()); ++mask) {
    if (std::popcount(mask) <= best) continue;
    bool ok = true;
    for (auto [a, b] : g.edges())
      if ((mask >> a & 1) && (mask >> b & 1)) {
        ok = false;
        break;
      }
    if (ok) best = std::popcount(mask);
  }
  return best;
}

int max_induced_bipartite(const UndirectedGraph& g) {
  ensure_subset_size(g);
  int best = 0;
  for (unsigned mask = 0; mask < (1u << g.size()); ++mask) {
    if (std::popcount(mask) <= best) continue;
    if (induces_bipartite(g, mask)) best = std::popcount(mask);
  }
  return best;
}

}  // namespace minhom
