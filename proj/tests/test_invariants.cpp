// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <cmath>

#include "lqi/error.hpp"
#include "lqi/invariants.hpp"
#include "lqi/states.hpp"
#include "oracles.hpp"

using namespace lqi;

namespace {

QubitState singlet() { return preset({Preset::Singlet, 2}); }

}  // namespace

TEST(LinearEntropy, KnownValues) {
  EXPECT_NEAR(linear_entropy(singlet()), 0.0, 1e-15);
  EXPECT_NEAR(linear_entropy(preset({Preset::MaximallyMixed, 1})), 0.5, 1e-15);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    EXPECT_NEAR(linear_entropy(random_state(3, StateKind::Pure, seed)), 0.0, 1e-14);
  }
}

TEST(LinearEntropy, SingleQubitSpinFlipForm) {
  Rng rng(1);
  for (int t = 0; t < 50; ++t) {
    const QubitState s = random_state(1, StateKind::Mixed, rng);
    EXPECT_NEAR(linear_entropy(s), trace_of_product(s.rho(), spin_flip(s).rho()).real(), 1e-10);
  }
}

TEST(LinearEntropy, UnnormalizedForm) {
  const QubitState s(1, ComplexMatrix::identity(2) * cplx(3.0));
  EXPECT_NEAR(linear_entropy(s), 36.0 - 18.0, 1e-13);
}

TEST(ElementarySymmetric, SmallCases) {
  const std::vector<double> v = {1.0, 2.0, 3.0};
  const std::vector<double> e = elementary_symmetric(v);
  ASSERT_EQ(e.size(), 3u);
  EXPECT_NEAR(e[0], 6.0, 1e-14);
  EXPECT_NEAR(e[1], 11.0, 1e-14);
  EXPECT_NEAR(e[2], 6.0, 1e-14);
}

TEST(SpectralInvariants, KnownValues) {
  const std::vector<double> s = spectral_invariants(singlet());
  ASSERT_EQ(s.size(), 4u);
  EXPECT_NEAR(s[0], 1.0, 1e-14);
  for (int k = 1; k < 4; ++k) EXPECT_NEAR(s[k], 0.0, 1e-14);
  const std::vector<double> m = spectral_invariants(preset({Preset::MaximallyMixed, 2}));
  const double binom[] = {4, 6, 4, 1};
  for (int k = 0; k < 4; ++k) EXPECT_NEAR(m[k], binom[k] * std::pow(1.0 / 16, k + 1), 1e-15);
}

TEST(SpectralInvariants, MatchCharacteristicPolynomialOfW) {
  Rng rng(2);
  for (int t = 0; t < 10; ++t) {
    const QubitState s = random_state(2, StateKind::Mixed, rng);
    const std::vector<double> e = spectral_invariants(s);
    const std::vector<cplx> c = char_poly_coeffs(w_matrix(s));
    // det(x - W) = x^4 - e1 x^3 + e2 x^2 - e3 x + e4
    for (int k = 1; k <= 4; ++k) {
      const double sign = (k % 2) ? -1.0 : 1.0;
      EXPECT_NEAR(c[4 - k].real(), sign * e[k - 1], 1e-12) << k;
    }
  }
}

TEST(Concurrence, KnownValues) {
  EXPECT_NEAR(concurrence(singlet()), 1.0, 1e-14);
  EXPECT_EQ(concurrence(preset({Preset::MaximallyMixed, 2})), 0.0);
  Rng rng(3);
  const QubitState a = random_state(1, StateKind::Pure, rng);
  const QubitState b = random_state(1, StateKind::Pure, rng);
  EXPECT_NEAR(concurrence(QubitState(2, kron(a.rho(), b.rho()))), 0.0, 1e-7);
  EXPECT_THROW(concurrence(preset({Preset::Ghz, 3})), ArgumentError);
}

TEST(Concurrence, PureTwoQubitRelations) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const QubitState s = random_state(2, StateKind::Pure, seed);
    const double c = concurrence(s);
    const std::vector<int> first = {1};
    EXPECT_NEAR(c * c, linear_mutual_info_trace(s), 1e-8);
    EXPECT_NEAR(c, std::sqrt(2.0 * linear_entropy(reduce(s, first))), 1e-8);
  }
}

TEST(MutualInfo, KnownValues) {
  EXPECT_NEAR(linear_mutual_info_subsets(singlet()), 1.0, 1e-14);
  EXPECT_NEAR(linear_mutual_info_trace(singlet()), 1.0, 1e-14);
  EXPECT_NEAR(linear_mutual_info_subsets(preset({Preset::Ghz, 3})), 0.0, 1e-14);
  EXPECT_NEAR(linear_mutual_info_trace(preset({Preset::Ghz, 4})), 1.0, 1e-9);
  EXPECT_NEAR(linear_mutual_info_subsets(preset({Preset::Ghz, 4})), 1.0, 1e-9);
  EXPECT_NEAR(linear_mutual_info_trace(preset({Preset::WState, 4})), 0.0, 1e-9);
  EXPECT_NEAR(linear_mutual_info_trace(preset({Preset::ProductOfSinglets, 2})), 1.0, 1e-8);
  EXPECT_NEAR(linear_mutual_info_subsets(preset({Preset::ProductOfSinglets, 2})), 1.0, 1e-8);
}

TEST(MutualInfo, SingleQubitCollapsesToLinearEntropy) {
  Rng rng(4);
  for (int t = 0; t < 20; ++t) {
    const QubitState s = random_state(1, StateKind::Mixed, rng);
    EXPECT_NEAR(linear_mutual_info_subsets(s), linear_entropy(s), 1e-15);
    EXPECT_NEAR(linear_mutual_info_trace(s), linear_entropy(s), 1e-14);
  }
}

TEST(MutualInfo, SubsetSumMatchesBruteForce) {
  Rng rng(5);
  for (int n = 1; n <= 4; ++n) {
    const QubitState s = random_state(n, StateKind::Mixed, rng);
    EXPECT_NEAR(linear_mutual_info_subsets(s), oracle::brute_mutual_info(s.rho(), n), 1e-13) << n;
  }
}

TEST(MutualInfo, TraceFormulaOracle) {
  for (int n = 1; n <= 5; ++n) {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      Rng rng(seed + 100 * static_cast<std::uint64_t>(n));
      QubitState s = random_state(n, (seed % 2) ? StateKind::Mixed : StateKind::Pure, rng);
      if (seed % 4 >= 2) s = QubitState::trusted(n, s.rho() * cplx(0.1 + seed));
      const double trace = linear_mutual_info_trace(s);
      EXPECT_LE(std::abs(linear_mutual_info_subsets(s) - trace), 1e-8 * std::max(1.0, std::abs(trace)));
    }
  }
}

TEST(MutualInfo, Multiplicative) {
  Rng rng(6);
  for (int t = 0; t < 20; ++t) {
    const QubitState a = random_state(2, StateKind::Mixed, rng);
    const QubitState b = random_state(1 + t % 3, StateKind::Mixed, rng);
    const QubitState ab(a.n() + b.n(), kron(a.rho(), b.rho()));
    const double product = linear_mutual_info_trace(a) * linear_mutual_info_trace(b);
    EXPECT_LE(scaled_deviation(linear_mutual_info_trace(ab), product), 1e-8);
    EXPECT_LE(scaled_deviation(linear_mutual_info_subsets(ab), product), 1e-8);
  }
}

TEST(MutualInfo, NonNegativeAndOddPureVanishing) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const int n = 1 + static_cast<int>(seed % 5);
    EXPECT_GE(linear_mutual_info_trace(random_state(n, StateKind::Mixed, seed)), -1e-9);
    const int odd = 1 + 2 * static_cast<int>(seed % 3);
    EXPECT_LE(std::abs(linear_mutual_info_trace(random_state(odd, StateKind::Pure, seed))), 1e-9);
  }
}

TEST(MutualInfo, SizeGuard) {
  EXPECT_THROW(QubitState::trusted(9, ComplexMatrix::identity(512)), ArgumentError);
}

TEST(Invariance, UnderRandomLocalActions) {
  for (int n = 1; n <= 4; ++n) {
    for (std::uint64_t t = 0; t < 10; ++t) {
      Rng rng(sub_seed(static_cast<std::uint64_t>(n), t));
      const QubitState s = random_state(n, (t % 2) ? StateKind::Mixed : StateKind::Pure, rng);
      const QubitState moved = apply_local(s, LocalAction::random(n, rng, 2.0));
      EXPECT_LE(scaled_deviation(linear_mutual_info_trace(s), linear_mutual_info_trace(moved)), 1e-7);
      const std::vector<double> a = spectral_invariants(s), b = spectral_invariants(moved);
      for (std::size_t k = 0; k < a.size(); ++k) EXPECT_LE(scaled_deviation(a[k], b[k]), 1e-7);
      if (n == 2) EXPECT_LE(scaled_deviation(concurrence(s), concurrence(moved)), 1e-7);
    }
  }
}

TEST(EntropicCharacterization, ConjugationPreservesSingleQubitEntropy) {
  Rng rng(7);
  for (int t = 0; t < 200; ++t) {
    const QubitState s = random_state(1, (t % 2) ? StateKind::Mixed : StateKind::Pure, rng);
    const QubitState moved = apply_local(s, LocalAction::random(1, rng, 2.0));
    EXPECT_LE(scaled_deviation(linear_entropy(s), linear_entropy(moved)), 1e-9);
  }
}

TEST(EntropicCharacterization, DepolarizingMapIsDetected) {
  const QubitState s = random_state(1, StateKind::Pure, 8);
  const ComplexMatrix depolarized = s.rho() * cplx(0.5) + ComplexMatrix::identity(2) * cplx(0.25 * s.trace());
  EXPECT_GT(std::abs(linear_entropy(depolarized) - linear_entropy(s)), 0.1);
}

TEST(Report, Singlet) {
  const InvariantSet r = invariant_report(singlet());
  EXPECT_NEAR(r.linear_entropy, 0.0, 1e-15);
  EXPECT_NEAR(r.trace_W, 1.0, 1e-14);
  ASSERT_TRUE(r.concurrence.has_value());
  EXPECT_NEAR(*r.concurrence, 1.0, 1e-14);
  EXPECT_NEAR(r.i_l_subset, 1.0, 1e-14);
  EXPECT_NEAR(r.i_l_trace, 1.0, 1e-14);
}

TEST(Report, MaximallyMixedQubitAndWState) {
  const InvariantSet m = invariant_report(preset({Preset::MaximallyMixed, 1}));
  EXPECT_NEAR(m.linear_entropy, 0.5, 1e-15);
  EXPECT_NEAR(m.trace_W, 0.5, 1e-15);
  EXPECT_NEAR(m.i_l_subset, 0.5, 1e-15);
  EXPECT_FALSE(m.concurrence.has_value());
  const InvariantSet w = invariant_report(preset({Preset::WState, 4}));
  EXPECT_NEAR(w.i_l_trace, 0.0, 1e-9);
  EXPECT_NEAR(w.i_l_subset, 0.0, 1e-9);
}
