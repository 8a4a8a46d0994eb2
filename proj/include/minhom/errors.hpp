#pragma once

#include <stdexcept>
#include <string>

namespace minhom {

enum class Errc {
  cyclic_input,
  isolated_vertex,
  not_multipartite,
  not_transitively_closed,
  infeasible_lower_bounds,
  size_limit,
  empty_domain,
  missing_cost,
  non_positive_cost,
  cost_too_large,
  unknown_label,
  class_map_invalid,
  misrouted_instance,
  not_bipartite_target,
  unknown_name,
  bad_parameter,
  parse_error,
  misuse,
  cancelled,
};

/// Single exception type for the whole library; the code tells callers
/// (and tests) which contract was violated.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace minhom
