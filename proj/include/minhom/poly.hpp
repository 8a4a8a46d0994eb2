#pragma once

#include <functional>

#include "minhom/classify.hpp"
#include "minhom/instance.hpp"

namespace minhom {

/// Solver for targets that are acyclic tournaments; `color_order` lists the
/// colors (h indices) in topological order.  Works through the transitive
/// closure of the input, a transitive orientation of the homomorphic
/// product, and one maximum-weight antichain computation.
Solution solve_ttk(const HomInstance& inst, const std::vector<int>& color_order);

/// Solver for targets that are acyclic tournaments minus the source-to-sink
/// arc (k >= 3).  Isolated input vertices take their best color greedily;
/// the rest go through the restricted closure, with end colors disallowed on
/// sources, sinks and internal vertices as feasibility dictates.
Solution solve_ttk_minus(const HomInstance& inst, const std::vector<int>& color_order);

/// Solver for directed-cycle targets: phase labels propagate over each weak
/// component and the best of the k rotations wins per component.
Solution solve_cycle(const HomInstance& inst, const std::vector<int>& cycle_order);

/// Solves an instance whose target is an extension of q.base by folding the
/// costs classwise, delegating to `base_solver`, and lifting the answer back
/// to the cheapest member of each chosen class.
Solution lift_extension(const HomInstance& inst, const QuotientInfo& q,
                        const std::function<Solution(const HomInstance&)>& base_solver);

/// Solver for acyclic bipartite tournament targets: quotient to the simple
/// base, fix one of the two side assignments per weak component, and solve
/// each as an acyclic-tournament instance over the elimination order.
Solution solve_acyclic_bt(const HomInstance& inst);

/// Solver for arcless targets.
Solution solve_no_arcs(const HomInstance& inst);

/// Dispatch on a classification; throws when `cls` does not match inst.h.
Solution solve_poly(const HomInstance& inst, const Classification& cls);

}  // namespace minhom
