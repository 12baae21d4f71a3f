// SPDX-License-Identifier: Apache-2.0

#include "lqi/correlation.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>
#include <vector>

#include "lqi/error.hpp"

namespace lqi {

namespace {

void require_hermitian2(const ComplexMatrix& o, const char* what) {
  if (o.dim() != 2) throw ContractError(std::string(what) + ": expected a 2x2 observable");
  const double defect = hermitian_defect(o);
  if (defect > 1e-10 * std::max(1.0, o.max_abs())) {
    throw ContractError(std::string(what) + ": observable is not Hermitian (max asymmetry " +
                        std::to_string(defect) + ")");
  }
}

const std::array<cplx, 4>& singlet_vector() {
  static const std::array<cplx, 4> psi = {0.0, 1.0 / std::sqrt(2.0), -1.0 / std::sqrt(2.0), 0.0};
  return psi;
}

// Running mean and sum of squared deviations per entry (Chan et al. merge).
struct MomentAccumulator {
  long count = 0;
  std::array<cplx, 16> mean{};
  std::array<double, 16> m2{};

  void add(const std::array<cplx, 16>& x) {
    ++count;
    const double inv = 1.0 / static_cast<double>(count);
    for (std::size_t i = 0; i < 16; ++i) {
      const cplx delta = x[i] - mean[i];
      mean[i] += delta * inv;
      m2[i] += std::real(std::conj(delta) * (x[i] - mean[i]));
    }
  }

  void merge(const MomentAccumulator& other) {
    if (other.count == 0) return;
    if (count == 0) {
      *this = other;
      return;
    }
    const double na = static_cast<double>(count);
    const double nb = static_cast<double>(other.count);
    const double n = na + nb;
    for (std::size_t i = 0; i < 16; ++i) {
      const cplx delta = other.mean[i] - mean[i];
      mean[i] += delta * (nb / n);
      m2[i] += other.m2[i] + std::norm(delta) * na * nb / n;
    }
    count += other.count;
  }
};

MomentAccumulator run_shard(const ComplexMatrix& o1, const ComplexMatrix& o2, long samples,
                            std::uint64_t seed) {
  Rng rng(seed);
  MomentAccumulator acc;
  std::array<cplx, 16> sample{};
  for (long s = 0; s < samples; ++s) {
    const ComplexMatrix u = haar_unitary2(rng);
    const ComplexMatrix ud = u.adjoint();
    const ComplexMatrix a = u * o1 * ud;
    const ComplexMatrix b = u * o2 * ud;
    for (std::size_t i = 0; i < 2; ++i) {
      for (std::size_t j = 0; j < 2; ++j) {
        for (std::size_t k = 0; k < 2; ++k) {
          for (std::size_t l = 0; l < 2; ++l) sample[(i * 2 + k) * 4 + (j * 2 + l)] = a(i, j) * b(k, l);
        }
      }
    }
    acc.add(sample);
  }
  return acc;
}

template <bool Parallel>
TwirlEstimate twirl_impl(const ComplexMatrix& o1, const ComplexMatrix& o2, long samples,
                         std::uint64_t seed) {
  require_hermitian2(o1, "haar_twirl_mc");
  require_hermitian2(o2, "haar_twirl_mc");
  if (samples < kMinTwirlSamples) {
    throw ArgumentError("haar_twirl_mc: samples must be at least " +
                        std::to_string(kMinTwirlSamples));
  }

  std::vector<MomentAccumulator> shards(kTwirlShards);
  const long base = samples / kTwirlShards;
  const long extra = samples % kTwirlShards;
#pragma omp parallel for schedule(dynamic) if (Parallel)
  for (int shard = 0; shard < kTwirlShards; ++shard) {
    const long count = base + (shard < extra ? 1 : 0);
    shards[static_cast<std::size_t>(shard)] =
        run_shard(o1, o2, count, sub_seed(seed, static_cast<std::uint64_t>(shard)));
  }
  MomentAccumulator total;
  for (const auto& s : shards) total.merge(s);

  TwirlEstimate out;
  out.sample_count = samples;
  out.chi = twirl_chi(o1, o2);
  out.zeta = twirl_zeta(o1, o2);
  out.expected = out.chi * ComplexMatrix::identity(4) - out.zeta * swap_operator();
  out.mean = ComplexMatrix(4, std::vector<cplx>(total.mean.begin(), total.mean.end()));
  const double n = static_cast<double>(samples);
  for (std::size_t i = 0; i < 16; ++i) {
    const double variance = std::max(0.0, total.m2[i] / (n - 1.0));
    out.std_error = std::max(out.std_error, std::sqrt(variance / n));
  }
  out.max_abs_deviation = max_abs_diff(out.mean, out.expected);
  out.pass = out.max_abs_deviation <= kTwirlSigmas * out.std_error + kTwirlRoundoff;
  return out;
}

}  // namespace

double singlet_correlation(const ComplexMatrix& o1, const ComplexMatrix& o2) {
  require_hermitian2(o1, "singlet_correlation");
  require_hermitian2(o2, "singlet_correlation");
  const ComplexMatrix op = kron(o1, o2);
  const auto& psi = singlet_vector();
  cplx acc = 0.0;
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) acc += std::conj(psi[i]) * op(i, j) * psi[j];
  }
  return acc.real();
}

CorrelationResult correlate(const MinkowskiVector& o1, const MinkowskiVector& o2) {
  return {singlet_correlation(herm_from_vector(o1), herm_from_vector(o2)), o1, o2};
}

double polarized_determinant(const ComplexMatrix& o1, const ComplexMatrix& o2) {
  if (o1.dim() != 2 || o2.dim() != 2) throw ArgumentError("polarized_determinant: expected 2x2 inputs");
  return (0.5 * (det(o1 + o2) - det(o1) - det(o2))).real();
}

LorentzMatrix4 pauli_correlation_table() {
  LorentzMatrix4 table;
  for (int mu = 0; mu < 4; ++mu) {
    for (int nu = 0; nu < 4; ++nu) table(mu, nu) = singlet_correlation(pauli(mu), pauli(nu));
  }
  return table;
}

ComplexMatrix swap_operator() {
  ComplexMatrix f(4);
  for (std::size_t a = 0; a < 2; ++a) {
    for (std::size_t b = 0; b < 2; ++b) f(b * 2 + a, a * 2 + b) = 1.0;
  }
  return f;
}

double twirl_chi(const ComplexMatrix& o1, const ComplexMatrix& o2) {
  const double tt = (o1.trace() * o2.trace()).real();
  const double t12 = trace_of_product(o1, o2).real();
  return tt / 3.0 - t12 / 6.0;
}

double twirl_zeta(const ComplexMatrix& o1, const ComplexMatrix& o2) {
  const double tt = (o1.trace() * o2.trace()).real();
  const double t12 = trace_of_product(o1, o2).real();
  return tt / 6.0 - t12 / 3.0;
}

ComplexMatrix haar_unitary2(Rng& rng) {
  const ComplexMatrix g = ginibre(2, rng);
  // Gram-Schmidt on the columns is QR with a positive real diagonal in R.
  std::array<cplx, 2> q0 = {g(0, 0), g(1, 0)};
  const double n0 = std::sqrt(std::norm(q0[0]) + std::norm(q0[1]));
  q0[0] /= n0;
  q0[1] /= n0;
  const cplx proj = std::conj(q0[0]) * g(0, 1) + std::conj(q0[1]) * g(1, 1);
  std::array<cplx, 2> q1 = {g(0, 1) - proj * q0[0], g(1, 1) - proj * q0[1]};
  const double n1 = std::sqrt(std::norm(q1[0]) + std::norm(q1[1]));
  q1[0] /= n1;
  q1[1] /= n1;
  return ComplexMatrix{{q0[0], q1[0]}, {q0[1], q1[1]}};
}

TwirlEstimate haar_twirl_mc(const ComplexMatrix& o1, const ComplexMatrix& o2, long samples,
                            std::uint64_t seed) {
  return twirl_impl<true>(o1, o2, samples, seed);
}

TwirlEstimate haar_twirl_mc_serial(const ComplexMatrix& o1, const ComplexMatrix& o2, long samples,
                                   std::uint64_t seed) {
  return twirl_impl<false>(o1, o2, samples, seed);
}

HermMap HermMap::identity() { return HermMap(LorentzMatrix4::identity()); }

HermMap HermMap::conjugation(const SL2C& lam) { return HermMap(lam); }

HermMap HermMap::parity() { return HermMap(LorentzMatrix4::parity()); }

HermMap HermMap::raw(const LorentzMatrix4& l) {
  const double defect = l.metric_defect();
  if (!(defect <= 1e-9)) {
    throw ContractError("HermMap: matrix does not preserve the Minkowski form (defect " +
                        std::to_string(defect) + ")");
  }
  return HermMap(l);
}

ComplexMatrix HermMap::apply(const ComplexMatrix& o) const {
  if (const auto* lam = std::get_if<SL2C>(&op_)) return lam->conjugate(o);
  return herm_from_vector(std::get<LorentzMatrix4>(op_).apply(vector_from_herm(o)));
}

double correlator_symmetry_check(const HermMap& map, int trials, std::uint64_t seed) {
  if (trials < 1) throw ArgumentError("correlator_symmetry_check: trials must be positive");
  Rng rng(seed);
  double worst = 0.0;
  for (int t = 0; t < trials; ++t) {
    const ComplexMatrix o1 = random_hermitian2(rng);
    const ComplexMatrix o2 = random_hermitian2(rng);
    const double before = singlet_correlation(o1, o2);
    const double after = singlet_correlation(map.apply(o1), map.apply(o2));
    worst = std::max(worst, std::abs(before - after) / std::max(1.0, std::abs(before)));
  }
  return worst;
}

}  // namespace lqi
