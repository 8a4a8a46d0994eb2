#pragma once

#include <vector>

#include "minhom/instance.hpp"

namespace minhom {

/// Arc-list flow network with per-arc lower bounds and capacities.
struct FlowNetwork {
  static constexpr Cost kInf = static_cast<Cost>(1) << 60;

  explicit FlowNetwork(int nodes, int source, int sink);

  int node_count = 0;
  int source = -1;
  int sink = -1;

  struct Arc {
    int from, to;
    Cost lower, cap;
  };
  std::vector<Arc> arcs;

  /// Validates endpoints and 0 <= lower <= cap; the source accepts no
  /// in-arcs and the sink no out-arcs.  Returns the arc id.
  int add_arc(int from, int to, Cost lower, Cost cap);
};

struct MaxFlowResult {
  Cost value = 0;
  std::vector<Cost> flow;          // per arc
  std::vector<char> source_side;   // min-cut certificate
};

/// Shortest-augmenting-path (level graph) max flow.  All lower bounds must
/// be zero.
MaxFlowResult max_flow(const FlowNetwork& net);

struct MinFlowResult {
  Cost value = 0;
  std::vector<Cost> flow;        // per arc, lower <= flow <= cap
  std::vector<char> sink_reach;  // residual reachability from the sink
};

/// Minimum feasible source-to-sink flow respecting the lower bounds.
/// Phase one finds any feasible flow through the standard lower-bound
/// transformation; phase two cancels surplus by augmenting from the sink
/// back to the source in the residual network.
MinFlowResult min_flow(const FlowNetwork& net);

}  // namespace minhom
