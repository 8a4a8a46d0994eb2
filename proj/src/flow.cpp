#include "minhom/flow.hpp"

#include <algorithm>
#include <queue>

namespace minhom {

FlowNetwork::FlowNetwork(int nodes, int source_, int sink_)
    : node_count(nodes), source(source_), sink(sink_) {
  if (nodes <= 0 || source < 0 || source >= nodes || sink < 0 || sink >= nodes || source == sink)
    fail(Errc::bad_parameter, "bad flow network shape");
}

int FlowNetwork::add_arc(int from, int to, Cost lower, Cost cap) {
  if (from < 0 || from >= node_count || to < 0 || to >= node_count || from == to)
    fail(Errc::bad_parameter, "bad flow arc endpoints");
  if (to == source) fail(Errc::bad_parameter, "arc into the source");
  if (from == sink) fail(Errc::bad_parameter, "arc out of the sink");
  if (lower < 0 || lower > cap) fail(Errc::bad_parameter, "need 0 <= lower <= cap");
  arcs.push_back({from, to, lower, cap});
  return static_cast<int>(arcs.size()) - 1;
}

namespace {

// Works on residuals derived from (lower, cap, flow): an arc can carry
// cap - flow more in its own direction and give back flow - lower.
class Engine {
 public:
  Engine(int nodes, const std::vector<FlowNetwork::Arc>& arcs)
      : arcs_(arcs), flow_(arcs.size(), 0), adj_(nodes) {
    for (int a = 0; a < static_cast<int>(arcs_.size()); ++a) {
      adj_[arcs_[a].from].push_back({a, true});
      adj_[arcs_[a].to].push_back({a, false});
    }
  }

  void set_flow(int arc, Cost f) { flow_[arc] = f; }
  Cost flow(int arc) const { return flow_[arc]; }
  const std::vector<Cost>& flows() const { return flow_; }

  Cost residual(int arc, bool forward) const {
    return forward ? arcs_[arc].cap - flow_[arc] : flow_[arc] - arcs_[arc].lower;
  }

  Cost augment(int from, int to) {
    Cost total = 0;
    while (bfs(from, to)) {
      iter_.assign(adj_.size(), 0);
      while (Cost pushed = dfs(from, to, FlowNetwork::kInf)) total += pushed;
    }
    return total;
  }

  std::vector<char> reachable(int start) const {
    std::vector<char> seen(adj_.size(), 0);
    std::queue<int> queue;
    seen[start] = 1;
    queue.push(start);
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop();
      for (auto [arc, forward] : adj_[v]) {
        if (residual(arc, forward) <= 0) continue;
        int w = forward ? arcs_[arc].to : arcs_[arc].from;
        if (!seen[w]) {
          seen[w] = 1;
          queue.push(w);
        }
      }
    }
    return seen;
  }

 private:
  bool bfs(int from, int to) {
    level_.assign(adj_.size(), -1);
    std::queue<int> queue;
    level_[from] = 0;
    queue.push(from);
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop();
      for (auto [arc, forward] : adj_[v]) {
        if (residual(arc, forward) <= 0) continue;
        int w = forward ? arcs_[arc].to : arcs_[arc].from;
        if (level_[w] == -1) {
          level_[w] = level_[v] + 1;
          queue.push(w);
        }
      }
    }
    return level_[to] != -1;
  }

  Cost dfs(int v, int to, Cost limit) {
    if (v == to) return limit;
    for (std::size_t& i = iter_[v]; i < adj_[v].size(); ++i) {
      auto [arc, forward] = adj_[v][i];
      Cost res = residual(arc, forward);
      if (res <= 0) continue;
      int w = forward ? arcs_[arc].to : arcs_[arc].from;
      if (level_[w] != level_[v] + 1) continue;
      Cost pushed = dfs(w, to, std::min(limit, res));
      if (pushed > 0) {
        flow_[arc] += forward ? pushed : -pushed;
        return pushed;
      }
    }
    level_[v] = -1;
    return 0;
  }

  const std::vector<FlowNetwork::Arc>& arcs_;
  std::vector<Cost> flow_;
  std::vector<std::vector<std::pair<int, bool>>> adj_;
  std::vector<int> level_;
  std::vector<std::size_t> iter_;
};

Cost value_at_source(const FlowNetwork& net, const std::vector<Cost>& flows) {
  Cost value = 0;
  for (std::size_t a = 0; a < net.arcs.size(); ++a) {
    if (net.arcs[a].from == net.source) value += flows[a];
    if (net.arcs[a].to == net.source) value -= flows[a];
  }
  return value;
}

}  // namespace

MaxFlowResult max_flow(const FlowNetwork& net) {
  for (const auto& arc : net.arcs)
    if (arc.lower != 0) fail(Errc::misuse, "max_flow expects zero lower bounds");
  Engine engine(net.node_count, net.arcs);
  MaxFlowResult result;
  result.value = engine.augment(net.source, net.sink);
  result.flow = engine.flows();
  result.source_side = engine.reachable(net.source);
  return result;
}

MinFlowResult min_flow(const FlowNetwork& net) {
  // Phase one: feasibility via the lower-bound transformation.  Demands are
  // rerouted through a super source/sink, and an unbounded sink-to-source
  // arc lets flow circulate.
  const int n = net.node_count;
  const int super_source = n, super_sink = n + 1;
  std::vector<FlowNetwork::Arc> aux = net.arcs;
  for (auto& arc : aux) {
    arc.cap -= arc.lower;
    arc.lower = 0;
  }
  std::vector<Cost> excess(n, 0);
  for (const auto& arc : net.arcs) {
    excess[arc.to] += arc.lower;
    excess[arc.from] -= arc.lower;
  }
  const int circulation_arc = static_cast<int>(aux.size());
  aux.push_back({net.sink, net.source, 0, FlowNetwork::kInf});
  Cost demand_total = 0;
  for (int v = 0; v < n; ++v) {
    if (excess[v] > 0) {
      aux.push_back({super_source, v, 0, excess[v]});
      demand_total += excess[v];
    } else if (excess[v] < 0) {
      aux.push_back({v, super_sink, 0, -excess[v]});
    }
  }
  Engine feas(n + 2, aux);
  Cost satisfied = feas.augment(super_source, super_sink);
  if (satisfied != demand_total)
    fail(Errc::infeasible_lower_bounds, "lower bounds admit no feasible flow");
  (void)circulation_arc;

  // Phase two: cancel as much source-to-sink flow as the bounds allow by
  // augmenting in the opposite direction.
  Engine engine(n, net.arcs);
  for (std::size_t a = 0; a < net.arcs.size(); ++a)
    engine.set_flow(static_cast<int>(a), net.arcs[a].lower + feas.flow(static_cast<int>(a)));
  engine.augment(net.sink, net.source);

  MinFlowResult result;
  result.flow = engine.flows();
  result.value = value_at_source(net, result.flow);
  result.sink_reach = engine.reachable(net.sink);
  return result;
}

}  // namespace minhom
