// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lqi/linalg.hpp"
#include "lqi/lorentz.hpp"
#include "lqi/rng.hpp"

namespace lqi {

inline constexpr int kMaxQubits = 8;

/// Possibly un-normalized n-qubit density matrix: Hermitian, PSD, Tr > 0.
class QubitState {
 public:
  /// Validates Hermiticity (1e-10), PSD (min eigenvalue >= -1e-9 |rho|_max)
  /// and a real positive trace. Throws ContractError on violation.
  QubitState(int n, ComplexMatrix rho);

  /// Skips the O(dim^3) PSD check; for values produced by operations whose
  /// postconditions already guarantee validity.
  static QubitState trusted(int n, ComplexMatrix rho);

  int n() const { return n_; }
  std::size_t dim() const { return rho_.dim(); }
  const ComplexMatrix& rho() const { return rho_; }
  double trace() const { return rho_.trace().real(); }

 private:
  struct Trusted {};
  QubitState(int n, ComplexMatrix rho, Trusted);

  int n_ = 0;
  ComplexMatrix rho_;
};

/// Lambda_1 (x) ... (x) Lambda_n, one SL(2,C) factor per qubit.
class LocalAction {
 public:
  explicit LocalAction(std::vector<SL2C> factors);
  static LocalAction uniform(int n, const SL2C& factor);
  static LocalAction random(int n, Rng& rng, double max_rapidity);

  std::size_t size() const { return factors_.size(); }
  const std::vector<SL2C>& factors() const { return factors_; }
  /// Dense M = Lambda_1 (x) ... (x) Lambda_n.
  ComplexMatrix matrix() const;
  LocalAction inverse() const;

 private:
  std::vector<SL2C> factors_;
};

/// Y^{(x)n} conj(rho) Y^{(x)n}, evaluated entrywise as
/// (-1)^{|a|+|b|} conj(rho[~a, ~b]) with |a| the Hamming weight.
ComplexMatrix spin_flip_matrix(const ComplexMatrix& rho, int n);
QubitState spin_flip(const QubitState& s);

/// W = rho rho*
ComplexMatrix w_matrix(const QubitState& s);

/// Spectrum of W via the Hermitian surrogate sqrt(rho) rho* sqrt(rho),
/// descending. Values at or below the rounding floor
/// dim eps lambda_max (and all negatives) are reported as 0.
std::vector<double> w_spectrum(const QubitState& s);

/// M rho M^dagger, applied one qubit at a time. Never renormalizes.
QubitState apply_local(const QubitState& s, const LocalAction& a);

/// Reduced state on `subset` (1-based qubit labels).
QubitState reduce(const QubitState& s, std::span<const int> subset);

enum class Preset { Singlet, Ghz, WState, ProductOfSinglets, MaximallyMixed, Basis0 };

struct PresetSpec {
  Preset kind = Preset::Singlet;
  int param = 0;  // qubit count, or singlet count for ProductOfSinglets
};

/// Accepts "singlet", "ghz<n>", "wstate<n>", "singlets<k>", "maximally_mixed<n>",
/// "basis0", and the long form "<name>:<param>". `default_n` fills a missing count.
PresetSpec parse_preset(std::string_view name, int default_n);
std::string preset_name(const PresetSpec& spec);
QubitState preset(const PresetSpec& spec);

enum class StateKind { Pure, Mixed };

/// Pure: projector onto a normalized complex Gaussian vector.
/// Mixed: G G^dagger / Tr(G G^dagger) with G square Ginibre.
QubitState random_state(int n, StateKind kind, Rng& rng);
QubitState random_state(int n, StateKind kind, std::uint64_t seed);

}  // namespace lqi
