#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "minhom/digraph.hpp"

namespace minhom {

using Cost = std::int64_t;

inline constexpr Cost kMaxCostEntry = 1'000'000;

enum class Objective { min, max };

/// Cost table with explicit row (input vertex) and column (color) labels.
struct CostMatrix {
  std::vector<std::string> row_labels;
  std::vector<std::string> col_labels;
  std::vector<std::vector<Cost>> entries;  // entries[row][col]
};

/// A homomorphism-cost instance: color the vertices of `d` with vertices of
/// `h` so that arcs map to arcs, optimizing the summed per-vertex color cost.
struct HomInstance {
  Digraph d;
  Digraph h;
  CostMatrix costs;  // aligned: rows follow d, columns follow h
  Objective objective = Objective::min;
  // Optional per-vertex color restriction (indices into h, ascending).
  // Empty means unrestricted.
  std::vector<std::vector<int>> allowed;

  Cost cost_at(int u, int i) const { return costs.entries[u][i]; }
  bool restricted() const { return !allowed.empty(); }
  std::vector<int> domain(int u) const;
};

/// Builds an instance from a possibly unordered cost table, reordering rows
/// and columns to the canonical orders of `d` and `h`.
HomInstance make_instance(Digraph d, Digraph h, const CostMatrix& raw,
                          Objective objective = Objective::min);

/// Completeness, positivity and label checks; throws on violation.
void validate(const HomInstance& inst);

/// Replaces every entry c by M - c with M = 1 + max entry, and flips the
/// objective.  Minimization problems become maximization ones with the same
/// optimal assignments.
HomInstance complement_costs(const HomInstance& inst);

/// Intersects the allowed color sets with the given ones.  Vertices absent
/// from the map keep their current domain.
HomInstance restrict_colors(const HomInstance& inst,
                            const std::map<std::string, std::vector<std::string>>& allowed);
HomInstance restrict_colors_by_index(const HomInstance& inst,
                                     const std::vector<std::vector<int>>& allowed);

struct Solution {
  enum class Status { optimal, infeasible };
  Status status = Status::infeasible;
  std::vector<int> assignment;  // d index -> h index; meaningful iff optimal
  Cost cost = 0;
  std::string solver;
};

/// True when `assignment` maps every arc of d to an arc of h and respects
/// the allowed sets.
bool is_homomorphism(const HomInstance& inst, const std::vector<int>& assignment);

Cost assignment_cost(const HomInstance& inst, const std::vector<int>& assignment);

}  // namespace minhom
