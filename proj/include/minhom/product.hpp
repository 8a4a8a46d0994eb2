#pragma once

#include <atomic>
#include <span>

#include "minhom/instance.hpp"

namespace minhom {

inline constexpr std::size_t kDefaultExactLimit = 40;

/// The homomorphic product of a maximization instance: one node per
/// (vertex, allowed color) pair, conflict edges between choices that cannot
/// coexist in a homomorphism, and one clique per input vertex.  Node weights
/// are the color costs shifted by max-cost times |V(d)| so that larger
/// independent sets always outweigh smaller ones.
struct ProductGraph {
  UndirectedGraph graph;                      // labels "vertex:color"
  std::vector<std::pair<int, int>> nodes;     // (d index, h index)
  std::vector<Cost> weights;
};

ProductGraph homomorphic_product(const HomInstance& inst);

struct MwisResult {
  std::vector<int> vertices;  // ascending
  Cost total = 0;
};

/// Exact maximum-weight independent set by branch and bound with a greedy
/// clique-cover bound.  Ties resolve to the lexicographically least vertex
/// set.  Throws when the graph exceeds `limit` vertices.
MwisResult mwis_exact(const UndirectedGraph& g, std::span<const Cost> weights,
                      std::size_t limit = kDefaultExactLimit,
                      const std::atomic<bool>* cancel = nullptr);

/// Exact solver by reduction to mwis on the homomorphic product.
/// Minimization instances are complemented first; the reported cost is
/// always in terms of the original instance.
Solution solve_via_product(const HomInstance& inst,
                           std::size_t limit = kDefaultExactLimit,
                           const std::atomic<bool>* cancel = nullptr);

/// Independent exact solver: depth-first search over color assignments with
/// forward checking and cost-bound pruning.
Solution solve_backtracking(const HomInstance& inst,
                            std::size_t limit = kDefaultExactLimit,
                            const std::atomic<bool>* cancel = nullptr);

}  // namespace minhom
