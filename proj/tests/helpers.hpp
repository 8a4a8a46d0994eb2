#pragma once

#include <algorithm>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "minhom/instance.hpp"

namespace testutil {

inline std::vector<std::string> numbered(int k) {
  std::vector<std::string> out;
  out.reserve(k);
  for (int i = 1; i <= k; ++i) out.push_back(std::to_string(i));
  return out;
}

inline std::vector<std::string> lettered(int n) {
  std::vector<std::string> out;
  out.reserve(n);
  for (int i = 0; i < n; ++i) {
    if (i < 26)
      out.push_back(std::string(1, static_cast<char>('a' + i)));
    else
      out.push_back("v" + std::to_string(i));
  }
  return out;
}

inline minhom::Digraph tt(int k) {
  minhom::Digraph g(numbered(k));
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) g.add_arc(i, j);
  return g;
}

inline minhom::Digraph tt_minus(int k) {
  minhom::Digraph g(numbered(k));
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      if (!(i == 0 && j == k - 1)) g.add_arc(i, j);
  return g;
}

inline minhom::Digraph cycle(int k) {
  minhom::Digraph g(numbered(k));
  for (int i = 0; i < k; ++i) g.add_arc(i, (i + 1) % k);
  return g;
}

/// Arcs sampled independently per ordered pair; digons possible unless
/// disabled, in which case each unordered pair gets at most one direction.
inline minhom::Digraph random_digraph(std::mt19937& rng, int n, double density,
                                      bool digons_ok = true) {
  minhom::Digraph g(lettered(n));
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  if (digons_ok) {
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v)
        if (u != v && coin(rng) < density) g.add_arc(u, v);
  } else {
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) {
        double r = coin(rng);
        if (r < density / 2)
          g.add_arc(u, v);
        else if (r < density)
          g.add_arc(v, u);
      }
  }
  return g;
}

/// Acyclic: arcs only run forward along a hidden random vertex order.
inline minhom::Digraph random_dag(std::mt19937& rng, int n, double density) {
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<int> pos(n);
  for (int i = 0; i < n; ++i) pos[order[i]] = i;
  minhom::Digraph g(lettered(n));
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (pos[u] < pos[v] && coin(rng) < density) g.add_arc(u, v);
  return g;
}

inline minhom::CostMatrix fill_costs(const minhom::Digraph& d, const minhom::Digraph& h,
                                     minhom::Cost value) {
  minhom::CostMatrix m;
  m.row_labels = d.labels();
  m.col_labels = h.labels();
  m.entries.assign(d.size(), std::vector<minhom::Cost>(h.size(), value));
  return m;
}

inline minhom::CostMatrix random_costs(std::mt19937& rng, const minhom::Digraph& d,
                                       const minhom::Digraph& h, minhom::Cost lo,
                                       minhom::Cost hi) {
  std::uniform_int_distribution<minhom::Cost> pick(lo, hi);
  minhom::CostMatrix m = fill_costs(d, h, lo);
  for (auto& row : m.entries)
    for (auto& entry : row) entry = pick(rng);
  return m;
}

/// Exhaustive reference solver: tries every assignment in lexicographic
/// order, so the reported optimum is the lexicographically least one.
inline minhom::Solution brute_best(const minhom::HomInstance& inst) {
  const int n = inst.d.size();
  minhom::Solution best;
  best.solver = "brute";
  std::vector<int> assign(n, 0);
  std::vector<std::vector<int>> dom(n);
  for (int u = 0; u < n; ++u) dom[u] = inst.domain(u);

  std::vector<int> cursor(n, 0);
  int depth = 0;
  while (depth >= 0) {
    if (depth == n) {
      if (minhom::is_homomorphism(inst, assign)) {
        minhom::Cost cost = minhom::assignment_cost(inst, assign);
        bool take = best.status != minhom::Solution::Status::optimal;
        if (!take) {
          take = inst.objective == minhom::Objective::min ? cost < best.cost : cost > best.cost;
        }
        if (take) {
          best.status = minhom::Solution::Status::optimal;
          best.cost = cost;
          best.assignment = assign;
        }
      }
      --depth;
      continue;
    }
    if (cursor[depth] == static_cast<int>(dom[depth].size())) {
      cursor[depth] = 0;
      --depth;
      continue;
    }
    assign[depth] = dom[depth][cursor[depth]++];
    ++depth;
  }
  return best;
}

/// Replaces each vertex of `base` by 1..max_copies similar copies.
struct Expansion {
  minhom::Digraph h;
  std::vector<int> origin;  // expanded vertex -> base vertex
};

inline Expansion expand(std::mt19937& rng, const minhom::Digraph& base, int max_copies = 3,
                        bool shuffle_order = false) {
  std::uniform_int_distribution<int> copies(1, max_copies);
  std::vector<std::pair<std::string, int>> verts;  // (label, base vertex)
  for (int v = 0; v < base.size(); ++v) {
    int reps = copies(rng);
    for (int r = 0; r < reps; ++r)
      verts.emplace_back(base.label(v) + "_" + std::to_string(r), v);
  }
  if (shuffle_order) std::shuffle(verts.begin(), verts.end(), rng);

  Expansion out;
  std::vector<std::string> labels;
  labels.reserve(verts.size());
  for (const auto& [label, origin] : verts) {
    labels.push_back(label);
    out.origin.push_back(origin);
  }
  out.h = minhom::Digraph(std::move(labels));
  for (std::size_t a = 0; a < verts.size(); ++a)
    for (std::size_t b = 0; b < verts.size(); ++b)
      if (base.has_arc(verts[a].second, verts[b].second))
        out.h.add_arc(static_cast<int>(a), static_cast<int>(b));
  return out;
}

}  // namespace testutil
