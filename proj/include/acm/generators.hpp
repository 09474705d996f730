#pragma once

// Deterministic example pairs: cyclic shifts, commuting and perturbed
// families, direct sums and self-dual doublings.

#include <cstdint>

#include "acm/selfdual.hpp"

namespace acm {

/// SplitMix64 with Box-Muller normals. uniform() uses the top 53 bits.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next();
  /// [0, 1).
  double uniform();
  /// Standard normal; the second Box-Muller variate is cached.
  double normal();
  /// Real and imaginary parts independent N(0, 1/2).
  Complex complex_normal();

 private:
  std::uint64_t state_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

/// Gaussian matrix with independent complex_normal entries.
Matrix gaussian_matrix(Eigen::Index d, SplitMix64& rng);

/// Q factor of a Gaussian matrix with the diagonal phases of R removed.
Matrix haar_unitary(Eigen::Index d, SplitMix64& rng);

/// (G + G*)/2 for a Gaussian G.
Matrix random_hermitian(Eigen::Index d, SplitMix64& rng);

/// e^{iH} for hermitian H.
Matrix expi_hermitian(const Matrix& H);

/// U e_j = e_{j+1 mod n}, V = diag(e^{-2 pi i j/n}). omega = -1 and
/// ||[U,V]|| = 2 sin(pi/n).
UnitaryPair cyclic_shift_pair(int n);

/// |k| copies of the cyclic pair (k < 0) or of its transpose (k > 0), so
/// omega = k at the same commutator norm.
UnitaryPair powered_pair(int n, int k);

/// U, V diagonal in a common random eigenbasis with uniform phases.
UnitaryPair commuting_random(int d, std::uint64_t seed);

/// U e^{iH1}, V e^{iH2} with random hermitian H_j of unit norm, scaled so that
/// ||U - U1|| + ||V - V1|| = r exactly. Requires 0 <= r < 4.
UnitaryPair perturb(const UnitaryPair& pair, double r, std::uint64_t seed);

/// (diag(U, U^T), diag(V, V^T)).
SelfDualPair selfdual_doubling(const UnitaryPair& pair);

/// Random hermitian H with H^# = H.
Matrix random_selfdual_hermitian(Eigen::Index N, SplitMix64& rng);

/// e^{iA} with A hermitian and A^# = -A; conjugation by it maps self-dual
/// matrices to self-dual matrices.
Matrix random_symplectic_unitary(Eigen::Index N, SplitMix64& rng);

/// e^{iH1/2} U e^{iH1/2}, e^{iH2/2} V e^{iH2/2} with random self-dual hermitian
/// H_j, scaled by bisection so the total distance is r to 1%.
SelfDualPair perturb_selfdual(const SelfDualPair& sd, double r, std::uint64_t seed);

/// U = e^{i a(H)}, V = e^{i b(H)} for a random self-dual hermitian H of size 2N.
SelfDualPair selfdual_commuting_random(int N, std::uint64_t seed);

enum class PairKind { CyclicShift, CommutingRandom, Perturbed, DirectSum, SelfDualDoubling };

struct PairSpec {
  PairKind kind = PairKind::CyclicShift;
  int n = 8;                // dimension parameter
  int k = -1;               // winding for CyclicShift (powered_pair)
  std::uint64_t seed = 1;
  double noise = 0.0;       // perturbation radius for Perturbed / SelfDualDoubling
};

/// Perturbed: the cyclic pair of size n perturbed by `noise`.
/// DirectSum: cyclic pair of size n plus a commuting random pair of size n.
/// SelfDualDoubling: doubled cyclic pair, self-dual perturbed by `noise`.
UnitaryPair generate_pair(const PairSpec& spec);

PairKind parse_pair_kind(const std::string& name);

}  // namespace acm
