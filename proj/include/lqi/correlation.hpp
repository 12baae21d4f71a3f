// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <utility>
#include <variant>

#include "lqi/linalg.hpp"
#include "lqi/lorentz.hpp"
#include "lqi/rng.hpp"

namespace lqi {

/// <Psi-| o1 (x) o2 |Psi-> on the normalized singlet. Both inputs must be
/// 2x2 Hermitian within 1e-10, else ContractError.
double singlet_correlation(const ComplexMatrix& o1, const ComplexMatrix& o2);

struct CorrelationResult {
  double value = 0.0;
  MinkowskiVector o1;
  MinkowskiVector o2;
};

CorrelationResult correlate(const MinkowskiVector& o1, const MinkowskiVector& o2);

/// (det(o1 + o2) - det(o1) - det(o2)) / 2
double polarized_determinant(const ComplexMatrix& o1, const ComplexMatrix& o2);

/// Entry (mu, nu) = C(sigma_mu, sigma_nu); equals diag(1, -1, -1, -1).
LorentzMatrix4 pauli_correlation_table();

/// 4x4 swap F|ab> = |ba>.
ComplexMatrix swap_operator();

/// Closed-form coefficients of the U (x) U twirl: chi 1 - zeta F.
double twirl_chi(const ComplexMatrix& o1, const ComplexMatrix& o2);
double twirl_zeta(const ComplexMatrix& o1, const ComplexMatrix& o2);

/// Haar-distributed U(2): QR of a complex Ginibre matrix with R's diagonal made positive.
ComplexMatrix haar_unitary2(Rng& rng);

inline constexpr int kTwirlShards = 64;
inline constexpr long kMinTwirlSamples = 1000;
// Monte Carlo acceptance: |mean - exact|_max <= kTwirlSigmas * std_error + kTwirlRoundoff.
inline constexpr double kTwirlSigmas = 5.0;
inline constexpr double kTwirlRoundoff = 1e-12;

struct TwirlEstimate {
  long sample_count = 0;
  ComplexMatrix mean;      // 4x4 Monte Carlo mean of Ad_{U (x) U}(o1 (x) o2)
  ComplexMatrix expected;  // chi 1 - zeta F
  double std_error = 0.0;  // max entrywise standard error of the mean
  double chi = 0.0;
  double zeta = 0.0;
  double max_abs_deviation = 0.0;
  bool pass = false;
};

/// Samples are split over kTwirlShards shards, shard i seeded with
/// sub_seed(seed, i); shards are merged in index order, so the result does
/// not depend on the thread count. Throws ArgumentError when samples < 1000.
TwirlEstimate haar_twirl_mc(const ComplexMatrix& o1, const ComplexMatrix& o2, long samples,
                            std::uint64_t seed);
TwirlEstimate haar_twirl_mc_serial(const ComplexMatrix& o1, const ComplexMatrix& o2, long samples,
                                   std::uint64_t seed);

/// A linear map on Herm_2 used to probe the correlator's symmetry group.
class HermMap {
 public:
  static HermMap identity();
  static HermMap conjugation(const SL2C& lam);
  static HermMap parity();
  /// Throws ContractError unless |L^T eta L - eta|_max <= 1e-9.
  static HermMap raw(const LorentzMatrix4& l);

  ComplexMatrix apply(const ComplexMatrix& o) const;

 private:
  explicit HermMap(std::variant<SL2C, LorentzMatrix4> op) : op_(std::move(op)) {}
  // Conjugations act on matrices directly; everything else in Pauli coordinates.
  std::variant<SL2C, LorentzMatrix4> op_;
};

/// max over `trials` random Hermitian pairs of
/// |C(o1, o2) - C(L o1, L o2)| / max(1, |C(o1, o2)|).
double correlator_symmetry_check(const HermMap& map, int trials, std::uint64_t seed);

}  // namespace lqi
