#pragma once

#include <stdexcept>
#include <string>

namespace dopt {

/// Every failure the library can signal, so callers (and the CLI exit-code
/// mapping) can dispatch on a code instead of parsing messages.
enum class Errc {
  self_loop,
  duplicate_edge,
  index_out_of_range,
  non_positive_kappa,
  graph_disconnected,
  kappa_too_small,
  dimension_mismatch,
  non_finite_state,
  non_finite_field,
  not_psd,
  not_pd,
  topology_violation,
  degenerate_points,
  singular_system,
  empty_bounds,
  unknown_rule,
  double_post,
  round_incomplete,
  information_structure_violation,
  parse_error,
  validation_error,
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  Errc code() const { return code_; }

  /// Exit-code category used by the CLI: 2 config, 3 numerical, 4 guard.
  int exit_category() const {
    switch (code_) {
      case Errc::non_finite_state:
      case Errc::non_finite_field:
      case Errc::singular_system:
        return 3;
      case Errc::information_structure_violation:
        return 4;
      default:
        return 2;
    }
  }

 private:
  Errc code_;
};

}  // namespace dopt
