#pragma once

#include <string>

#include "minhom/structure.hpp"

namespace minhom {

enum class Verdict { polynomial, np_hard, open, unsupported };

enum class PolyTag { tt, tt_minus, cycle, acyclic_bt, no_arcs };

/// Complexity classification of a semicomplete multipartite target, with
/// enough structure (quotient and base order) attached to drive a solver.
struct Classification {
  Verdict verdict = Verdict::unsupported;
  PolyTag tag = PolyTag::no_arcs;   // meaningful iff polynomial
  int k = 0;                        // tt / tt_minus / cycle parameter
  QuotientInfo quotient;            // meaningful iff polynomial
  std::vector<int> base_order;      // base indices: topological or cycle order
  std::string hard_case;            // meaningful iff np_hard
  std::string reason;               // meaningful iff unsupported
};

Classification classify(const Digraph& h);

std::string to_string(Verdict v);
std::string to_string(PolyTag t);

}  // namespace minhom
