#pragma once

#include <span>
#include <vector>

#include "minhom/instance.hpp"

namespace minhom {

/// Strict order given by its arc list; x -> y reads "x below y".
/// Consumers of max_weight_antichain require the arc set to be transitively
/// closed.
struct Poset {
  int element_count = 0;
  std::vector<std::pair<int, int>> less_than;
};

struct AntichainResult {
  std::vector<int> elements;  // ascending
  Cost total = 0;
};

/// Maximum-weight antichain via minimum flow with lower bounds: each element
/// splits into an in/out node pair joined by an arc with lower bound equal
/// to its weight, order arcs get [0, inf), and the antichain is read off the
/// split arcs that cross the residual cut around the sink.
AntichainResult max_weight_antichain(const Poset& p, std::span<const Cost> weights,
                                     bool verify_closed = true);

}  // namespace minhom
