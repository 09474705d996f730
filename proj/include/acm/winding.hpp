#pragma once

// The winding-number invariant omega(U,V) of an almost commuting unitary
// pair and the distance lower bounds it certifies.

#include "acm/linalg.hpp"

namespace acm {

/// omega is defined only while -1 stays out of the spectrum of VUV*U*,
/// i.e. for ||[U,V]|| < 2. Commutator norms within this margin of 2 are
/// treated as undefined.
inline constexpr double kWindingDeltaMargin = 1e-9;

/// Largest distance from an integer tolerated before rounding is refused.
inline constexpr double kWindingRoundingTol = 0.01;

struct WindingResult {
  int omega = 0;
  double delta = 0.0;
  bool valid = false;
  /// Distance from -1 to the spectrum of VUV*U*.
  double min_angle_gap_at_pi = 0.0;
  /// (1/2pi) sum theta_j before rounding.
  double raw = 0.0;
};

/// omega = Tr((1/2 pi i) log(VUV*U*)) from the eigenangles of VUV*U*.
/// Throws InvariantUndefined (delta >= 2) or NumericalInconsistency.
WindingResult winding_number(const UnitaryPair& pair);

/// Independent route: the winding of t -> det((VUV*U*)^t), t in [0,1], with
/// the fractional power taken by Schur-Pade and the determinant by LU. Starts
/// at `steps` (>= 64) and doubles until every phase increment is below pi/2.
/// Throws MeshTooCoarse if that never happens.
int winding_via_path(const UnitaryPair& pair, int steps = 64);

/// 1 + sqrt(1 - delta^2/4): lower bound on ||U-U1|| + ||V-V1|| over commuting
/// unitary pairs (U1,V1), valid when omega != 0.
double commuting_distance_bound(double delta);

/// Pair version; throws NoObstruction when omega(U,V) == 0.
double distance_bound_commuting(const UnitaryPair& pair);

/// sqrt(1 - dA^2/4) + sqrt(1 - dB^2/4).
double index_change_distance_bound(double delta_a, double delta_b);

/// Pair version; throws NoObstruction when the two omegas agree.
double distance_bound_index_change(const UnitaryPair& a, const UnitaryPair& b);

}  // namespace acm
