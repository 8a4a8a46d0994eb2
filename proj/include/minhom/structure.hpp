#pragma once

#include <array>
#include <optional>
#include <vector>

#include "minhom/digraph.hpp"

namespace minhom {

/// One-pass structural summary of a digraph.  Witness sequences are closed
/// (first vertex repeated at the end) and deterministic.
struct StructureReport {
  bool acyclic = true;
  std::vector<int> topological_order;            // filled iff acyclic
  std::vector<int> cycle_witness;                // filled iff cyclic
  std::vector<std::vector<int>> weak_components; // ordered by least member
  std::vector<int> sources, sinks;
  bool underlying_bipartite = true;
  std::array<std::vector<int>, 2> bipartition;   // filled iff bipartite
  std::vector<int> odd_cycle_witness;            // filled iff not bipartite
};

StructureReport structure_report(const Digraph& d);

/// Adds an arc x -> y for every directed path from x to y.  Requires an
/// acyclic input.
Digraph transitive_closure(const Digraph& d);

/// Closure that skips pairs from a source to a sink unless the arc is
/// already present.  Requires an acyclic input without isolated vertices.
Digraph restricted_closure(const Digraph& d);

/// Nonadjacency classes of a semicomplete multipartite digraph, ordered by
/// least member.  Empty result when nonadjacency is not transitive.
std::optional<std::vector<std::vector<int>>> partite_sets(const Digraph& h);

/// Quotient of a digraph by the "same in- and out-neighborhood" relation.
struct QuotientInfo {
  Digraph base;                          // representatives, canonical order
  std::vector<int> class_of;             // host vertex -> base vertex
  std::vector<std::vector<int>> classes; // base vertex -> host vertices, ascending
};

QuotientInfo similarity_quotient(const Digraph& h);

/// Checks that `q` really is the similarity structure of `h`: the classes
/// partition V(h), neighborhoods are uniform inside each class, and the base
/// is induced by the representatives.
bool quotient_matches(const Digraph& h, const QuotientInfo& q);

enum class BaseFamily { tt, tt_minus, cycle, other };

struct BaseShape {
  BaseFamily family = BaseFamily::other;
  int k = 0;
  std::vector<int> order;  // topological order (tt, tt_minus) or cycle order
};

/// Recognizes an acyclic tournament, an acyclic tournament minus its
/// source-to-sink arc (k >= 3), or a directed cycle (k >= 2).
BaseShape recognize_base(const Digraph& b);

}  // namespace minhom
