#include "minhom/antichain.hpp"

#include <algorithm>
#include <set>

#include "minhom/flow.hpp"

namespace minhom {

AntichainResult max_weight_antichain(const Poset& p, std::span<const Cost> weights,
                                     bool verify_closed) {
  const int n = p.element_count;
  if (static_cast<int>(weights.size()) != n)
    fail(Errc::bad_parameter, "one weight per element expected");
  for (Cost w : weights)
    if (w < 0) fail(Errc::bad_parameter, "antichain weights must be nonnegative");

  std::set<std::pair<int, int>> rel;
  for (const auto& [a, b] : p.less_than) {
    if (a < 0 || a >= n || b < 0 || b >= n || a == b)
      fail(Errc::bad_parameter, "bad order arc");
    rel.insert({a, b});
  }
  if (verify_closed) {
    std::vector<std::vector<int>> below(n);
    for (const auto& [a, b] : rel) below[a].push_back(b);
    for (const auto& [a, b] : rel)
      for (int c : below[b])
        if (a == c || !rel.count({a, c}))
          fail(Errc::not_transitively_closed, "order arcs are not transitively closed");
  }

  if (n == 0) return {};

  std::vector<char> has_pred(n, 0), has_succ(n, 0);
  for (const auto& [a, b] : rel) {
    has_succ[a] = 1;
    has_pred[b] = 1;
  }

  // Node layout: source, sink, then (in, out) pairs per element.
  const int source = 0, sink = 1;
  auto node_in = [](int v) { return 2 + 2 * v; };
  auto node_out = [](int v) { return 2 + 2 * v + 1; };
  FlowNetwork net(2 + 2 * n, source, sink);
  std::vector<int> split(n);
  for (int v = 0; v < n; ++v)
    split[v] = net.add_arc(node_in(v), node_out(v), weights[v], FlowNetwork::kInf);
  for (int v = 0; v < n; ++v)
    if (!has_pred[v]) net.add_arc(source, node_in(v), 0, FlowNetwork::kInf);
  for (int v = 0; v < n; ++v)
    if (!has_succ[v]) net.add_arc(node_out(v), sink, 0, FlowNetwork::kInf);
  for (const auto& [a, b] : rel) net.add_arc(node_out(a), node_in(b), 0, FlowNetwork::kInf);

  auto result = min_flow(net);

  AntichainResult antichain;
  for (int v = 0; v < n; ++v) {
    bool crosses = !result.sink_reach[node_in(v)] && result.sink_reach[node_out(v)];
    if (crosses && result.flow[split[v]] == weights[v]) {
      antichain.elements.push_back(v);
      antichain.total += weights[v];
    }
  }
  return antichain;
}

}  // namespace minhom
