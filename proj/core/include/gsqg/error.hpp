#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gsqg {

enum class ErrorKind {
  invalid_parameter,
  no_root,
  degenerate_annulus,
  alpha_zero_unsupported,
  infeasible_area,
  infeasible_epsilon,
  resolution_too_coarse,
  degenerate_nodes,
  spacing_too_coarse,
  invalid_contour,
  self_intersection,
  unresolved_singularity,
  nonuniform_parametrization,
  probe_out_of_range,
  node_not_found,
  cfl_violation,
  no_breaking_observed,
  io_error,
  parse_error,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library carries one of the kinds above so the
/// CLI can map it to an exit code without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

inline void require(bool condition, ErrorKind kind, const std::string& what) {
  if (!condition) throw Error(kind, what);
}

}  // namespace gsqg
