#pragma once

// All invariants of a pair gathered into one report, as printed by the CLI.

#include <optional>
#include <string>
#include <vector>

#include "acm/bounds.hpp"
#include "acm/logmethod.hpp"
#include "acm/winding.hpp"

namespace acm {

enum class IndexMethod { Trig, Log };

struct IndexOptions {
  IndexMethod method = IndexMethod::Trig;
  bool self_dual = false;
  bool use_trigpoly = false;
  double selfdual_tol = 1e-9;
  std::optional<double> gap_tol;  // default 1e-8 * dim
};

struct IndexReport {
  std::optional<int> omega;
  std::optional<int> kappa;
  std::optional<int> kappa2;
  double delta = 0.0;
  bool omega_valid = false;      // delta < 2
  bool kappa_certified = false;  // delta <= 0.206007
  bool log_certified = false;    // delta <= 1/8
  double gap_measured = 0.0;
  std::optional<double> gap_guaranteed;
  std::optional<double> gap_coarse;
  std::optional<double> distance_to_commuting;           // from omega != 0
  std::optional<double> selfdual_distance_to_commuting;  // from kappa2 = -1
  double selfdual_violation = 0.0;
  IndexMethod method = IndexMethod::Trig;
  std::vector<std::string> warnings;

  /// 0 when every reported index is certified, 2 otherwise.
  int exit_code() const;
  /// key=value lines.
  std::string text() const;
  /// Header row and one value row.
  std::string csv() const;
};

/// Throws NumericalInconsistency when a certified kappa disagrees with omega,
/// NotSelfDual when self_dual is requested for a non self-dual pair.
IndexReport compute_index_report(const UnitaryPair& pair, const IndexOptions& options = {});

std::string to_string(IndexMethod method);
IndexMethod parse_index_method(const std::string& name);

}  // namespace acm
