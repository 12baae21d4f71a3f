// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <cmath>

#include "lqi/correlation.hpp"
#include "lqi/error.hpp"

using namespace lqi;

namespace {

const ComplexMatrix& X() { return pauli(1); }
const ComplexMatrix& Y() { return pauli(2); }
const ComplexMatrix& Z() { return pauli(3); }
const ComplexMatrix& Id() { return pauli(0); }

// Expectation in the singlet written out from the traces alone.
double trace_formula(const ComplexMatrix& a, const ComplexMatrix& b) {
  return 0.5 * (a.trace() * b.trace() - (a * b).trace()).real();
}

}  // namespace

TEST(SingletCorrelation, KnownValues) {
  EXPECT_NEAR(singlet_correlation(Id(), Id()), 1.0, 1e-15);
  EXPECT_NEAR(singlet_correlation(Z(), Z()), -1.0, 1e-15);
  EXPECT_NEAR(singlet_correlation(X(), Z()), 0.0, 1e-15);
  const ComplexMatrix bad{{1.0, 1.0}, {0.0, 1.0}};
  EXPECT_THROW(singlet_correlation(bad, Z()), ContractError);
  EXPECT_THROW(singlet_correlation(ComplexMatrix::identity(4), Z()), ContractError);
}

TEST(PolarizedDeterminant, KnownValues) {
  EXPECT_NEAR(polarized_determinant(Id(), Id()), 1.0, 1e-15);
  EXPECT_NEAR(polarized_determinant(X(), Y()), 0.0, 1e-15);
  const MinkowskiVector v{1.5, -0.3, 0.8, 2.0};
  const ComplexMatrix o = herm_from_vector(v);
  EXPECT_NEAR(polarized_determinant(o, o), minkowski_form(v), 1e-13);
}

TEST(SingletCorrelation, EqualsPolarizedDeterminant) {
  Rng rng(1);
  for (int t = 0; t < 1000; ++t) {
    const ComplexMatrix a = random_hermitian2(rng), b = random_hermitian2(rng);
    const double c = singlet_correlation(a, b);
    EXPECT_LE(std::abs(c - polarized_determinant(a, b)) / std::max(1.0, std::abs(c)), 1e-10);
    EXPECT_NEAR(c, trace_formula(a, b), 1e-12 * std::max(1.0, std::abs(c)));
  }
}

TEST(SingletCorrelation, BilinearAndSymmetric) {
  Rng rng(2);
  std::normal_distribution<double> normal;
  for (int t = 0; t < 200; ++t) {
    const ComplexMatrix a = random_hermitian2(rng), a2 = random_hermitian2(rng), b = random_hermitian2(rng);
    const double s = normal(rng), u = normal(rng);
    const double lhs = singlet_correlation(a * cplx(s) + a2 * cplx(u), b);
    const double rhs = s * singlet_correlation(a, b) + u * singlet_correlation(a2, b);
    EXPECT_NEAR(lhs, rhs, 1e-10 * std::max(1.0, std::abs(rhs)));
    EXPECT_NEAR(singlet_correlation(a, b), singlet_correlation(b, a), 1e-12);
  }
}

TEST(PauliTable, IsMinkowskiMetric) {
  const LorentzMatrix4 table = pauli_correlation_table();
  EXPECT_LE(table.max_abs_diff(LorentzMatrix4::metric()), 1e-12);
  EXPECT_NEAR(table(0, 0), 1.0, 1e-15);
  EXPECT_NEAR(table(3, 3), -1.0, 1e-15);
}

TEST(Correlate, VectorForm) {
  const CorrelationResult r = correlate({2, 1, 1, 1}, {2, 1, 1, 1});
  EXPECT_NEAR(r.value, 1.0, 1e-14);
}

TEST(SwapOperator, SingletExpectationIsMinusOne) {
  const ComplexMatrix f = swap_operator();
  EXPECT_EQ(f * f, ComplexMatrix::identity(4));
  const double r = 1.0 / std::sqrt(2.0);
  const cplx psi[4] = {0.0, r, -r, 0.0};
  cplx expectation = 0.0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) expectation += std::conj(psi[i]) * f(i, j) * psi[j];
  EXPECT_NEAR(expectation.real(), -1.0, 1e-15);
}

TEST(TwirlClosedForms, KnownPairs) {
  EXPECT_NEAR(twirl_chi(Id(), Id()), 1.0, 1e-15);
  EXPECT_NEAR(twirl_zeta(Id(), Id()), 0.0, 1e-15);
  EXPECT_NEAR(twirl_chi(Z(), Z()), -1.0 / 3, 1e-15);
  EXPECT_NEAR(twirl_zeta(Z(), Z()), -2.0 / 3, 1e-15);
  EXPECT_NEAR(twirl_chi(X(), Y()), 0.0, 1e-15);
  EXPECT_NEAR(twirl_zeta(X(), Y()), 0.0, 1e-15);
}

TEST(HaarUnitary, IsUnitaryAndCentred) {
  Rng rng(3);
  ComplexMatrix sum(2);
  const int samples = 100000;
  for (int t = 0; t < samples; ++t) {
    const ComplexMatrix u = haar_unitary2(rng);
    if (t < 100) EXPECT_LT(max_abs_diff(u * u.adjoint(), ComplexMatrix::identity(2)), 1e-14);
    sum += u;
  }
  // Each entry has E|u_ij|^2 = 1/2, so the standard error is sqrt(1/(2N)).
  const double sigma = std::sqrt(0.5 / samples);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) EXPECT_LE(std::abs(sum(i, j) / cplx(samples)), 5 * sigma);
}

TEST(Twirl, IdentityIsExact) {
  const TwirlEstimate e = haar_twirl_mc(Id(), Id(), 2000, 1);
  EXPECT_TRUE(e.pass);
  EXPECT_LT(max_abs_diff(e.mean, ComplexMatrix::identity(4)), 1e-14);
  EXPECT_LT(e.std_error, 1e-14);
  EXPECT_EQ(e.chi, 1.0);
  EXPECT_EQ(e.zeta, 0.0);
}

TEST(Twirl, ZZWithinFiveSigma) {
  const TwirlEstimate e = haar_twirl_mc(Z(), Z(), 100000, 3);
  EXPECT_EQ(e.sample_count, 100000);
  EXPECT_NEAR(e.chi, -1.0 / 3, 1e-15);
  EXPECT_NEAR(e.zeta, -2.0 / 3, 1e-15);
  EXPECT_TRUE(e.pass) << e.max_abs_deviation << " vs sigma " << e.std_error;
  EXPECT_LE(e.max_abs_deviation, 5 * e.std_error);
}

TEST(Twirl, MeanCommutesWithLocalUnitary) {
  const TwirlEstimate e = haar_twirl_mc(X(), Z(), 50000, 4);
  Rng rng(5);
  const ComplexMatrix v = haar_unitary2(rng);
  const ComplexMatrix vv = kron(v, v);
  const ComplexMatrix commutator = vv * e.mean - e.mean * vv;
  EXPECT_LE(commutator.max_abs(), 5 * 4 * e.std_error);
}

TEST(Twirl, RejectsTooFewSamples) {
  EXPECT_THROW(haar_twirl_mc(Z(), Z(), 999, 1), ArgumentError);
}

TEST(HermMapSymmetry, IdentityBoostAndParity) {
  EXPECT_LE(correlator_symmetry_check(HermMap::identity(), 50, 1), 1e-15);
  EXPECT_LE(correlator_symmetry_check(HermMap::raw(spin_hom(boost_z(1.5))), 100, 2), 1e-8);
  EXPECT_LE(correlator_symmetry_check(HermMap::conjugation(boost_z(1.5)), 100, 2), 1e-8);
  EXPECT_LE(correlator_symmetry_check(HermMap::parity(), 100, 3), 1e-8);
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    EXPECT_LE(correlator_symmetry_check(HermMap::conjugation(random_sl2c(seed, 2.0)), 5, seed), 1e-8);
  }
}

TEST(HermMapSymmetry, RejectsNonLorentzMap) {
  LorentzMatrix4 stretch = LorentzMatrix4::identity();
  stretch(1, 1) = 2.0;
  EXPECT_THROW(HermMap::raw(stretch), ContractError);
  EXPECT_THROW(correlator_symmetry_check(HermMap::identity(), 0, 1), ArgumentError);
}
