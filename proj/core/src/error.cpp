#include "gsqg/error.hpp"

namespace gsqg {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::invalid_parameter: return "invalid-parameter";
    case ErrorKind::no_root: return "no-root";
    case ErrorKind::degenerate_annulus: return "degenerate-annulus";
    case ErrorKind::alpha_zero_unsupported: return "alpha-zero-unsupported";
    case ErrorKind::infeasible_area: return "infeasible-area";
    case ErrorKind::infeasible_epsilon: return "infeasible-epsilon";
    case ErrorKind::resolution_too_coarse: return "resolution-too-coarse";
    case ErrorKind::degenerate_nodes: return "degenerate-nodes";
    case ErrorKind::spacing_too_coarse: return "spacing-too-coarse";
    case ErrorKind::invalid_contour: return "invalid-contour";
    case ErrorKind::self_intersection: return "self-intersection";
    case ErrorKind::unresolved_singularity: return "unresolved-singularity";
    case ErrorKind::nonuniform_parametrization: return "nonuniform-parametrization";
    case ErrorKind::probe_out_of_range: return "probe-out-of-range";
    case ErrorKind::node_not_found: return "node-not-found";
    case ErrorKind::cfl_violation: return "cfl-violation";
    case ErrorKind::no_breaking_observed: return "no-breaking-observed";
    case ErrorKind::io_error: return "io-error";
    case ErrorKind::parse_error: return "parse-error";
  }
  return "unknown";
}

}  // namespace gsqg
