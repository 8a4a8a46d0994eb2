#include "minhom/instance.hpp"

#include <algorithm>
#include <numeric>

namespace minhom {

std::vector<int> HomInstance::domain(int u) const {
  if (restricted()) return allowed[u];
  std::vector<int> all(h.size());
  std::iota(all.begin(), all.end(), 0);
  return all;
}

HomInstance make_instance(Digraph d, Digraph h, const CostMatrix& raw,
                          Objective objective) {
  const int n = d.size(), k = h.size();
  if (static_cast<int>(raw.row_labels.size()) != static_cast<int>(raw.entries.size()))
    fail(Errc::parse_error, "cost table row count does not match its labels");

  std::vector<int> col_to_h(raw.col_labels.size());
  std::vector<char> col_seen(k, 0);
  for (std::size_t c = 0; c < raw.col_labels.size(); ++c) {
    auto idx = h.try_index(raw.col_labels[c]);
    if (!idx) fail(Errc::unknown_label, "cost column '" + raw.col_labels[c] + "' is not a color");
    if (col_seen[*idx]) fail(Errc::unknown_label, "duplicate cost column '" + raw.col_labels[c] + "'");
    col_seen[*idx] = 1;
    col_to_h[c] = *idx;
  }
  for (int i = 0; i < k; ++i)
    if (!col_seen[i]) fail(Errc::missing_cost, "no cost column for color '" + h.label(i) + "'");

  HomInstance inst;
  inst.costs.row_labels = d.labels();
  inst.costs.col_labels = h.labels();
  inst.costs.entries.assign(n, std::vector<Cost>(k, 0));
  std::vector<char> row_seen(n, 0);
  for (std::size_t r = 0; r < raw.row_labels.size(); ++r) {
    auto idx = d.try_index(raw.row_labels[r]);
    if (!idx) fail(Errc::unknown_label, "cost row '" + raw.row_labels[r] + "' is not an input vertex");
    if (row_seen[*idx]) fail(Errc::unknown_label, "duplicate cost row '" + raw.row_labels[r] + "'");
    row_seen[*idx] = 1;
    if (raw.entries[r].size() != raw.col_labels.size())
      fail(Errc::missing_cost, "short cost row '" + raw.row_labels[r] + "'");
    for (std::size_t c = 0; c < raw.entries[r].size(); ++c)
      inst.costs.entries[*idx][col_to_h[c]] = raw.entries[r][c];
  }
  for (int u = 0; u < n; ++u)
    if (!row_seen[u]) fail(Errc::missing_cost, "no cost row for vertex '" + d.label(u) + "'");

  inst.d = std::move(d);
  inst.h = std::move(h);
  inst.objective = objective;
  return inst;
}

void validate(const HomInstance& inst) {
  const int n = inst.d.size(), k = inst.h.size();
  if (inst.costs.row_labels != inst.d.labels() || inst.costs.col_labels != inst.h.labels())
    fail(Errc::unknown_label, "cost table labels are not aligned with the graphs");
  if (static_cast<int>(inst.costs.entries.size()) != n)
    fail(Errc::missing_cost, "cost table has wrong row count");
  for (int u = 0; u < n; ++u) {
    if (static_cast<int>(inst.costs.entries[u].size()) != k)
      fail(Errc::missing_cost, "cost row for '" + inst.d.label(u) + "' has wrong length");
    for (int i = 0; i < k; ++i) {
      Cost c = inst.costs.entries[u][i];
      if (c <= 0)
        fail(Errc::non_positive_cost, "cost of color '" + inst.h.label(i) + "' on '" +
                                          inst.d.label(u) + "' must be positive");
      if (c > kMaxCostEntry)
        fail(Errc::cost_too_large, "cost of color '" + inst.h.label(i) + "' on '" +
                                       inst.d.label(u) + "' exceeds the entry bound");
    }
  }
  if (inst.restricted()) {
    if (static_cast<int>(inst.allowed.size()) != n)
      fail(Errc::empty_domain, "allowed-set table has wrong size");
    for (int u = 0; u < n; ++u) {
      if (inst.allowed[u].empty())
        fail(Errc::empty_domain, "empty color domain for '" + inst.d.label(u) + "'");
      for (std::size_t j = 0; j < inst.allowed[u].size(); ++j) {
        int i = inst.allowed[u][j];
        if (i < 0 || i >= k) fail(Errc::unknown_label, "allowed color index out of range");
        if (j > 0 && inst.allowed[u][j - 1] >= i)
          fail(Errc::empty_domain, "allowed colors must be strictly ascending");
      }
    }
  }
}

HomInstance complement_costs(const HomInstance& inst) {
  Cost max_entry = 0;
  for (const auto& row : inst.costs.entries)
    for (Cost c : row) max_entry = std::max(max_entry, c);
  const Cost m = max_entry + 1;
  HomInstance out = inst;
  for (auto& row : out.costs.entries)
    for (Cost& c : row) c = m - c;
  out.objective = inst.objective == Objective::min ? Objective::max : Objective::min;
  return out;
}

HomInstance restrict_colors_by_index(const HomInstance& inst,
                                     const std::vector<std::vector<int>>& allowed) {
  const int n = inst.d.size();
  if (static_cast<int>(allowed.size()) != n)
    fail(Errc::empty_domain, "restriction table has wrong size");
  HomInstance out = inst;
  if (!out.restricted()) {
    out.allowed.resize(n);
    for (int u = 0; u < n; ++u) out.allowed[u] = inst.domain(u);
  }
  for (int u = 0; u < n; ++u) {
    if (allowed[u].empty())
      fail(Errc::empty_domain, "empty restriction for '" + inst.d.label(u) + "'");
    std::vector<int> given = allowed[u];
    std::sort(given.begin(), given.end());
    std::vector<int> next;
    std::set_intersection(out.allowed[u].begin(), out.allowed[u].end(),
                          given.begin(), given.end(), std::back_inserter(next));
    if (next.empty())
      fail(Errc::empty_domain, "restriction empties the domain of '" + inst.d.label(u) + "'");
    out.allowed[u] = std::move(next);
  }
  return out;
}

HomInstance restrict_colors(const HomInstance& inst,
                            const std::map<std::string, std::vector<std::string>>& allowed) {
  std::vector<std::vector<int>> table(inst.d.size());
  for (int u = 0; u < inst.d.size(); ++u) table[u] = inst.domain(u);
  for (const auto& [vertex, colors] : allowed) {
    int u = inst.d.index_of(vertex);
    std::vector<int> set;
    for (const auto& color : colors) set.push_back(inst.h.index_of(color));
    if (set.empty())
      fail(Errc::empty_domain, "empty restriction for '" + vertex + "'");
    table[u] = std::move(set);
  }
  return restrict_colors_by_index(inst, table);
}

bool is_homomorphism(const HomInstance& inst, const std::vector<int>& assignment) {
  if (static_cast<int>(assignment.size()) != inst.d.size()) return false;
  for (int u = 0; u < inst.d.size(); ++u) {
    int c = assignment[u];
    if (c < 0 || c >= inst.h.size()) return false;
    if (inst.restricted() &&
        !std::binary_search(inst.allowed[u].begin(), inst.allowed[u].end(), c))
      return false;
  }
  for (const auto& [a, b] : inst.d.arcs())
    if (!inst.h.has_arc(assignment[a], assignment[b])) return false;
  return true;
}

Cost assignment_cost(const HomInstance& inst, const std::vector<int>& assignment) {
  Cost total = 0;
  for (int u = 0; u < inst.d.size(); ++u) total += inst.cost_at(u, assignment[u]);
  return total;
}

}  // namespace minhom
