#pragma once

#include <string>
#include <vector>

#include "minhom/digraph.hpp"
#include "minhom/instance.hpp"

namespace minhom {

/// Fixed and parametric target digraphs by name: "ac4", "c3tail", "bt5",
/// "tt:k" (k >= 1), "ttminus:k" (k >= 3), "cycle:k" (k >= 2).
Digraph named_target(const std::string& name);

enum class PairMode { non_adjacent, adjacent };

struct GadgetRecord {
  std::string prefix;  // label namespace of this copy, e.g. "p0" or "e2"
  std::string a, b;    // endpoints of the source pair or edge
};

/// Instance produced by a hardness reduction, with enough bookkeeping to
/// trace every gadget copy back to the pair or edge it encodes.
struct ReductionOutput {
  Digraph d;
  Digraph h;
  CostMatrix costs;
  UndirectedGraph source;
  std::string target_name;
  PairMode pair_mode = PairMode::non_adjacent;
  bool strict_costs = false;
  std::vector<GadgetRecord> gadgets;

  /// The assembled minimization instance (validated).
  HomInstance instance() const;
};

/// Reduction onto the target "ac4": a two-vertex gadget per selected pair of
/// G (non-edges by default, edges in adjacent mode).  The optimal colorings
/// put color 3 on a largest clique (default) or independent set (adjacent
/// mode) of G.
ReductionOutput reduce_ac(const UndirectedGraph& g, PairMode mode = PairMode::non_adjacent);

/// Reduction onto the cyclic target "c3tail": a 16-vertex gadget per edge of
/// G.  By default only color 1 is penalized on G's vertices, making the
/// cheap set a largest induced bipartite subgraph; the strict flag also
/// penalizes colors 3 and 4, shrinking it to a largest independent set.
ReductionOutput reduce_c3tail(const UndirectedGraph& g, bool strict_costs = false);

struct CertifyReport {
  Cost optimal = 0;                    // exact minimum over the instance
  std::vector<std::string> extracted;  // vertex set read back from G
  int oracle_size = 0;                 // matching brute-force graph value
  Cost expected = 0;                   // closed-form optimum from that value
  bool cost_matches = false;
  bool structure_valid = false;
};

/// Solves the reduction instance exactly and cross-checks both the optimum
/// and the extracted vertex set against brute-force graph oracles.
CertifyReport certify_reduction(const ReductionOutput& r, int backtrack_limit = 400);

// Exact graph oracles by subset enumeration (up to 20 vertices).
int max_clique(const UndirectedGraph& g);
int max_independent_set(const UndirectedGraph& g);
int max_induced_bipartite(const UndirectedGraph& g);

}  // namespace minhom
