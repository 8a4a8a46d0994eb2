#include "minhom/poly.hpp"

#include <algorithm>
#include <optional>
#include <utility>

#include "minhom/antichain.hpp"
#include "minhom/errors.hpp"
#include "minhom/structure.hpp"

namespace minhom {
namespace {

bool improves(Objective obj, Cost candidate, Cost incumbent) {
  return obj == Objective::min ? candidate < incumbent : candidate > incumbent;
}

// Rank of every color under `order`; throws unless `order` is a permutation.
std::vector<int> ranks_under(const std::vector<int>& order, int k) {
  if (static_cast<int>(order.size()) != k)
    fail(Errc::misrouted_instance, "color order does not cover the target");
  std::vector<int> rank(k, -1);
  for (int pos = 0; pos < k; ++pos) {
    int c = order[pos];
    if (c < 0 || c >= k || rank[c] != -1)
      fail(Errc::misrouted_instance, "color order is not a permutation of the colors");
    rank[c] = pos;
  }
  return rank;
}

// The target must be the acyclic tournament on `order`, optionally minus the
// arc from the first to the last color.
void require_tournament(const Digraph& h, const std::vector<int>& order, bool drop_end_arc) {
  const int k = h.size();
  const int expected = k * (k - 1) / 2 - (drop_end_arc ? 1 : 0);
  if (h.arc_count() != expected)
    fail(Errc::misrouted_instance, "target arc count does not match the declared shape");
  for (int a = 0; a < k; ++a)
    for (int b = a + 1; b < k; ++b) {
      bool want = !(drop_end_arc && a == 0 && b == k - 1);
      if (h.has_arc(order[a], order[b]) != want || h.has_arc(order[b], order[a]))
        fail(Errc::misrouted_instance, "target arcs do not follow the declared order");
    }
}

using CostFn = std::function<Cost(int, int)>;

// Extra order arc between two product nodes, given as (vertex, color) pairs.
struct ExtraArc {
  int from_v, from_c, to_v, to_c;
};

struct PosetRun {
  bool feasible = false;
  Cost weight = 0;
  std::vector<int> assign;
};

// Builds the oriented product of `closure` and the ranked colors, closes the
// arc set under reachability, and extracts a maximum-weight antichain.  The
// run is feasible exactly when the antichain covers every vertex, in which
// case it spells out one color per vertex.
PosetRun run_poset(const Digraph& closure, const std::vector<std::vector<int>>& dom,
                   const std::vector<int>& rank, const CostFn& cost, Cost shift,
                   const std::vector<ExtraArc>& extra) {
  const int n = closure.size();
  const int k = static_cast<int>(rank.size());
  std::vector<std::vector<int>> id(n, std::vector<int>(k, -1));
  std::vector<std::pair<int, int>> meta;
  std::vector<Cost> weights;
  for (int u = 0; u < n; ++u) {
    if (dom[u].empty()) return {};
    for (int c : dom[u]) {
      id[u][c] = static_cast<int>(meta.size());
      meta.emplace_back(u, c);
      weights.push_back(cost(u, c) + shift);
    }
  }
  const int m = static_cast<int>(meta.size());
  std::vector<std::vector<int>> out(m);
  for (int u = 0; u < n; ++u)
    for (int i : dom[u])
      for (int j : dom[u])
        if (rank[i] > rank[j]) out[id[u][i]].push_back(id[u][j]);
  for (auto [y, z] : closure.arcs())
    for (int i : dom[y])
      for (int j : dom[z])
        if (rank[i] >= rank[j]) out[id[y][i]].push_back(id[z][j]);
  for (const auto& e : extra) {
    int a = id[e.from_v][e.from_c];
    int b = id[e.to_v][e.to_c];
    if (a >= 0 && b >= 0) out[a].push_back(b);
  }

  // Reachability closure: the raw arc set can miss compositions through
  // pairs the restricted closure skips, but any directed walk between two
  // nodes still rules out using both, so ordering by reachability keeps
  // exactly the colorings as antichains.
  Poset poset;
  poset.element_count = m;
  std::vector<char> seen(m, 0);
  std::vector<int> stack;
  for (int a = 0; a < m; ++a) {
    std::fill(seen.begin(), seen.end(), 0);
    stack.assign(out[a].begin(), out[a].end());
    while (!stack.empty()) {
      int b = stack.back();
      stack.pop_back();
      if (seen[b]) continue;
      seen[b] = 1;
      poset.less_than.emplace_back(a, b);
      stack.insert(stack.end(), out[b].begin(), out[b].end());
    }
  }

  AntichainResult res = max_weight_antichain(poset, weights, false);
  if (static_cast<int>(res.elements.size()) != n) return {};
  PosetRun run;
  run.feasible = true;
  run.weight = res.total;
  run.assign.assign(n, -1);
  for (int e : res.elements) run.assign[meta[e].first] = meta[e].second;
  return run;
}

// Maximum-cost coloring over the closure with the given domains; among the
// optima, returns the lexicographically least assignment (vertex by vertex
// in canonical order, smaller color index first).  The lexicographic choice
// is made by fixing one vertex at a time to the smallest color that keeps
// the optimal antichain weight reachable.
std::optional<std::vector<int>> lex_least_assignment(const Digraph& closure,
                                                     std::vector<std::vector<int>> dom,
                                                     const std::vector<int>& rank,
                                                     const CostFn& cost,
                                                     const std::vector<ExtraArc>& extra) {
  const int n = closure.size();
  Cost mu = 1;
  for (int u = 0; u < n; ++u)
    for (int c : dom[u]) mu = std::max(mu, cost(u, c));
  const Cost shift = mu * static_cast<Cost>(n);

  PosetRun base = run_poset(closure, dom, rank, cost, shift, extra);
  if (!base.feasible) return std::nullopt;
  std::vector<int> assign = base.assign;
  for (int u = 0; u < n; ++u) {
    for (int c : dom[u]) {
      if (c == assign[u]) {
        dom[u] = {c};
        break;
      }
      std::vector<std::vector<int>> trial = dom;
      trial[u] = {c};
      PosetRun run = run_poset(closure, trial, rank, cost, shift, extra);
      if (run.feasible && run.weight == base.weight) {
        dom[u] = {c};
        assign = run.assign;
        break;
      }
    }
  }
  return assign;
}

Solution infeasible_for(const char* solver) {
  Solution out;
  out.status = Solution::Status::infeasible;
  out.solver = solver;
  return out;
}

Solution finish(const HomInstance& inst, std::vector<int> assign, const char* solver) {
  if (!is_homomorphism(inst, assign))
    fail(Errc::misrouted_instance, "solver produced an invalid coloring");
  Solution out;
  out.status = Solution::Status::optimal;
  out.cost = assignment_cost(inst, assign);
  out.assignment = std::move(assign);
  out.solver = solver;
  return out;
}

// Inner solver for a simple acyclic bipartite tournament target, reached via
// lift_extension from solve_acyclic_bt.
Solution solve_simple_bt(const HomInstance& inst) {
  const Digraph& b = inst.h;
  const int p = b.size();

  // Elimination order: repeatedly remove the unique remaining source.
  std::vector<int> elim;
  std::vector<char> removed(p, 0);
  for (int step = 0; step < p; ++step) {
    int source = -1, count = 0;
    for (int v = 0; v < p; ++v) {
      if (removed[v]) continue;
      bool is_source = true;
      for (int w : b.in_neighbors(v))
        if (!removed[w]) {
          is_source = false;
          break;
        }
      if (is_source) {
        ++count;
        if (source == -1) source = v;
      }
    }
    if (count != 1)
      fail(Errc::misrouted_instance, "base tournament lacks a unique elimination order");
    removed[source] = 1;
    elim.push_back(source);
  }

  // Completing the base along the elimination order adds only arcs inside
  // the partite sets, so colorings that respect a fixed side split coincide
  // for the base and for the completed tournament.
  Digraph full = b;
  for (int i = 0; i < p; ++i)
    for (int j = i + 1; j < p; ++j) full.add_arc(elim[i], elim[j]);

  auto parts = partite_sets(b);
  if (!parts || parts->size() != 2)
    fail(Errc::misrouted_instance, "base of the target is not a bipartite tournament");
  std::vector<char> side(p, 0);
  for (int v : (*parts)[1]) side[v] = 1;

  StructureReport rep = structure_report(inst.d);
  if (!rep.acyclic || !rep.underlying_bipartite) return infeasible_for("acyclic_bt");
  std::vector<char> dside(inst.d.size(), 0);
  for (int v : rep.bipartition[1]) dside[v] = 1;

  std::vector<int> assign(inst.d.size(), -1);
  for (const auto& comp : rep.weak_components) {
    std::optional<Solution> best;
    for (int sigma = 0; sigma < 2; ++sigma) {
      std::vector<std::vector<int>> sub_allowed(comp.size());
      bool viable = true;
      for (std::size_t idx = 0; idx < comp.size() && viable; ++idx) {
        int u = comp[idx];
        int want = dside[u] == 0 ? sigma : 1 - sigma;
        for (int c : inst.domain(u))
          if (side[c] == want) sub_allowed[idx].push_back(c);
        viable = !sub_allowed[idx].empty();
      }
      if (!viable) continue;

      HomInstance sub;
      sub.d = inst.d.induced(comp);
      sub.h = full;
      sub.costs.row_labels = sub.d.labels();
      sub.costs.col_labels = inst.costs.col_labels;
      for (int u : comp) sub.costs.entries.push_back(inst.costs.entries[u]);
      sub.objective = inst.objective;
      sub.allowed = sub_allowed;

      Solution got = solve_ttk(sub, elim);
      if (got.status != Solution::Status::optimal) continue;
      if (!best || improves(inst.objective, got.cost, best->cost) ||
          (got.cost == best->cost && got.assignment < best->assignment))
        best = got;
    }
    if (!best) return infeasible_for("acyclic_bt");
    for (std::size_t idx = 0; idx < comp.size(); ++idx)
      assign[comp[idx]] = best->assignment[idx];
  }
  return finish(inst, std::move(assign), "acyclic_bt");
}

}  // namespace

Solution solve_ttk(const HomInstance& inst, const std::vector<int>& color_order) {
  validate(inst);
  const int k = inst.h.size();
  std::vector<int> rank = ranks_under(color_order, k);
  require_tournament(inst.h, color_order, false);

  if (!structure_report(inst.d).acyclic) return infeasible_for("ttk");
  HomInstance work = inst.objective == Objective::min ? complement_costs(inst) : inst;
  Digraph closure = transitive_closure(inst.d);
  const int n = inst.d.size();
  std::vector<std::vector<int>> dom(n);
  for (int u = 0; u < n; ++u) dom[u] = inst.domain(u);

  auto assign = lex_least_assignment(
      closure, std::move(dom), rank,
      [&work](int u, int c) { return work.cost_at(u, c); }, {});
  if (!assign) return infeasible_for("ttk");
  return finish(inst, std::move(*assign), "ttk");
}

Solution solve_ttk_minus(const HomInstance& inst, const std::vector<int>& color_order) {
  validate(inst);
  const int k = inst.h.size();
  if (k < 3) fail(Errc::misrouted_instance, "near-tournament targets need at least three colors");
  std::vector<int> rank = ranks_under(color_order, k);
  require_tournament(inst.h, color_order, true);
  const int first = color_order.front();
  const int last = color_order.back();

  if (!structure_report(inst.d).acyclic) return infeasible_for("ttk_minus");
  HomInstance work = inst.objective == Objective::min ? complement_costs(inst) : inst;
  const int n = inst.d.size();

  std::vector<int> assign(n, -1);
  std::vector<int> core;
  for (int u = 0; u < n; ++u) {
    if (!inst.d.isolated(u)) {
      core.push_back(u);
      continue;
    }
    // Isolated vertices are unconstrained: best color, ties to the smallest.
    int pick = -1;
    for (int c : work.domain(u))
      if (pick == -1 || work.cost_at(u, c) > work.cost_at(u, pick)) pick = c;
    assign[u] = pick;
  }

  if (!core.empty()) {
    Digraph d0 = inst.d.induced(core);
    Digraph closure = restricted_closure(d0);
    const int nc = static_cast<int>(core.size());

    // A vertex with an out-arc cannot take the final color (it has no
    // successors) and one with an in-arc cannot take the initial color.
    std::vector<std::vector<int>> dom(nc);
    for (int p = 0; p < nc; ++p) {
      bool source = d0.in_degree(p) == 0;
      bool sink = d0.out_degree(p) == 0;
      for (int c : work.domain(core[p])) {
        if (c == last && !sink) continue;
        if (c == first && !source) continue;
        dom[p].push_back(c);
      }
      if (dom[p].empty()) return infeasible_for("ttk_minus");
    }

    // Arcs straight from a source to a sink may still pair the initial and
    // final colors; orient those product edges backwards.
    std::vector<ExtraArc> extra;
    for (auto [s, t] : d0.arcs())
      if (d0.in_degree(s) == 0 && d0.out_degree(t) == 0)
        extra.push_back({t, last, s, first});

    auto sub = lex_least_assignment(
        closure, std::move(dom), rank,
        [&work, &core](int p, int c) { return work.cost_at(core[p], c); }, extra);
    if (!sub) return infeasible_for("ttk_minus");
    for (int p = 0; p < nc; ++p) assign[core[p]] = (*sub)[p];
  }
  return finish(inst, std::move(assign), "ttk_minus");
}

Solution solve_cycle(const HomInstance& inst, const std::vector<int>& cycle_order) {
  validate(inst);
  const int k = inst.h.size();
  if (k < 2) fail(Errc::misrouted_instance, "cycle targets need at least two colors");
  ranks_under(cycle_order, k);
  if (inst.h.arc_count() != k)
    fail(Errc::misrouted_instance, "target arc count does not match a cycle");
  for (int t = 0; t < k; ++t)
    if (!inst.h.has_arc(cycle_order[t], cycle_order[(t + 1) % k]))
      fail(Errc::misrouted_instance, "target arcs do not follow the declared cycle");

  const int n = inst.d.size();
  StructureReport rep = structure_report(inst.d);
  std::vector<int> phase(n, -1);
  std::vector<int> assign(n, -1);
  for (const auto& comp : rep.weak_components) {
    // Phase labels relative to the component root; arcs advance the phase.
    phase[comp.front()] = 0;
    std::vector<int> queue = {comp.front()};
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      int u = queue[qi];
      for (int v : inst.d.out_neighbors(u))
        if (phase[v] == -1) {
          phase[v] = (phase[u] + 1) % k;
          queue.push_back(v);
        }
      for (int v : inst.d.in_neighbors(u))
        if (phase[v] == -1) {
          phase[v] = (phase[u] + k - 1) % k;
          queue.push_back(v);
        }
    }
    for (int u : comp)
      for (int v : inst.d.out_neighbors(u))
        if (phase[v] != (phase[u] + 1) % k) return infeasible_for("cycle");

    bool found = false;
    Cost best_cost = 0;
    std::vector<int> best;
    for (int o = 0; o < k; ++o) {
      Cost total = 0;
      bool ok = true;
      std::vector<int> cur(comp.size());
      for (std::size_t idx = 0; idx < comp.size() && ok; ++idx) {
        int u = comp[idx];
        int color = cycle_order[(phase[u] + o) % k];
        std::vector<int> du = inst.domain(u);
        ok = std::binary_search(du.begin(), du.end(), color);
        cur[idx] = color;
        total += inst.cost_at(u, color);
      }
      if (!ok) continue;
      if (!found || improves(inst.objective, total, best_cost) ||
          (total == best_cost && cur < best)) {
        found = true;
        best_cost = total;
        best = cur;
      }
    }
    if (!found) return infeasible_for("cycle");
    for (std::size_t idx = 0; idx < comp.size(); ++idx) assign[comp[idx]] = best[idx];
  }
  return finish(inst, std::move(assign), "cycle");
}

Solution lift_extension(const HomInstance& inst, const QuotientInfo& q,
                        const std::function<Solution(const HomInstance&)>& base_solver) {
  validate(inst);
  if (!quotient_matches(inst.h, q))
    fail(Errc::class_map_invalid, "quotient data does not describe the target");
  const int n = inst.d.size();
  const int bk = q.base.size();

  HomInstance base;
  base.d = inst.d;
  base.h = q.base;
  base.costs.row_labels = inst.costs.row_labels;
  base.costs.col_labels = q.base.labels();
  base.costs.entries.assign(n, std::vector<Cost>(bk, 0));
  base.objective = inst.objective;
  base.allowed.assign(n, {});

  // member_pick[u][b]: the class member the base color b stands for at u.
  std::vector<std::vector<int>> member_pick(n, std::vector<int>(bk, -1));
  for (int u = 0; u < n; ++u) {
    std::vector<int> du = inst.domain(u);
    for (int b = 0; b < bk; ++b) {
      int pick = -1;
      for (int j : q.classes[b]) {
        if (!std::binary_search(du.begin(), du.end(), j)) continue;
        if (pick == -1 || improves(inst.objective, inst.cost_at(u, j), inst.cost_at(u, pick)))
          pick = j;
      }
      if (pick == -1) {
        // Class unusable at u: keep a valid placeholder entry, leave b out
        // of the domain.
        base.costs.entries[u][b] = inst.cost_at(u, q.classes[b].front());
        continue;
      }
      member_pick[u][b] = pick;
      base.allowed[u].push_back(b);
      base.costs.entries[u][b] = inst.cost_at(u, pick);
    }
  }

  Solution sol = base_solver(base);
  if (sol.status != Solution::Status::optimal) return sol;

  Solution out = sol;
  for (int u = 0; u < n; ++u) out.assignment[u] = member_pick[u][sol.assignment[u]];
  if (!is_homomorphism(inst, out.assignment))
    fail(Errc::class_map_invalid, "lifted assignment is not a valid coloring");
  out.cost = assignment_cost(inst, out.assignment);
  if (out.cost != sol.cost)
    fail(Errc::class_map_invalid, "lifted cost differs from the base optimum");
  return out;
}

Solution solve_acyclic_bt(const HomInstance& inst) {
  validate(inst);
  auto parts = partite_sets(inst.h);
  if (!parts || parts->size() != 2)
    fail(Errc::not_bipartite_target, "target is not a bipartite tournament");
  if (!structure_report(inst.h).acyclic)
    fail(Errc::not_bipartite_target, "target bipartite tournament is cyclic");
  QuotientInfo q = similarity_quotient(inst.h);
  return lift_extension(inst, q, solve_simple_bt);
}

Solution solve_no_arcs(const HomInstance& inst) {
  validate(inst);
  if (inst.h.arc_count() != 0)
    fail(Errc::misrouted_instance, "target has arcs");
  if (inst.d.arc_count() > 0) return infeasible_for("no_arcs");
  const int n = inst.d.size();
  std::vector<int> assign(n, -1);
  for (int u = 0; u < n; ++u) {
    int pick = -1;
    for (int c : inst.domain(u))
      if (pick == -1 || improves(inst.objective, inst.cost_at(u, c), inst.cost_at(u, pick)))
        pick = c;
    assign[u] = pick;
  }
  return finish(inst, std::move(assign), "no_arcs");
}

Solution solve_poly(const HomInstance& inst, const Classification& cls) {
  validate(inst);
  Classification fresh = classify(inst.h);
  if (cls.verdict != Verdict::polynomial || fresh.verdict != Verdict::polynomial ||
      fresh.tag != cls.tag || fresh.k != cls.k)
    fail(Errc::misrouted_instance, "classification does not match the target");
  switch (fresh.tag) {
    case PolyTag::no_arcs:
      return solve_no_arcs(inst);
    case PolyTag::acyclic_bt:
      return solve_acyclic_bt(inst);
    case PolyTag::tt:
      return lift_extension(inst, fresh.quotient, [&fresh](const HomInstance& b) {
        return solve_ttk(b, fresh.base_order);
      });
    case PolyTag::tt_minus:
      return lift_extension(inst, fresh.quotient, [&fresh](const HomInstance& b) {
        return solve_ttk_minus(b, fresh.base_order);
      });
    case PolyTag::cycle:
      return lift_extension(inst, fresh.quotient, [&fresh](const HomInstance& b) {
        return solve_cycle(b, fresh.base_order);
      });
  }
  fail(Errc::misrouted_instance, "unhandled solver tag");
}

}  // namespace minhom
