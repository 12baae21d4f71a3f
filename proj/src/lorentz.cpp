// SPDX-License-Identifier: Apache-2.0

#include "lqi/lorentz.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <utility>

#include "lqi/error.hpp"

namespace lqi {

namespace {

constexpr double kDetTolerance = 1e-10;
constexpr double kMaxRapidity = 20.0;

const std::array<ComplexMatrix, 4>& pauli_table() {
  static const std::array<ComplexMatrix, 4> table = {
      ComplexMatrix{{1.0, 0.0}, {0.0, 1.0}},
      ComplexMatrix{{0.0, 1.0}, {1.0, 0.0}},
      ComplexMatrix{{0.0, cplx(0.0, -1.0)}, {cplx(0.0, 1.0), 0.0}},
      ComplexMatrix{{1.0, 0.0}, {0.0, -1.0}},
  };
  return table;
}

// Divide by the principal square root of the determinant.
ComplexMatrix unit_det(ComplexMatrix m) {
  const cplx root = std::sqrt(det(m));
  m *= 1.0 / root;
  return m;
}

}  // namespace

double MinkowskiVector::operator[](int mu) const {
  switch (mu) {
    case 0: return t;
    case 1: return x;
    case 2: return y;
    case 3: return z;
    default: throw ArgumentError("MinkowskiVector: index " + std::to_string(mu) + " outside 0..3");
  }
}

const ComplexMatrix& pauli(int mu) {
  if (mu < 0 || mu > 3) throw ArgumentError("pauli: index " + std::to_string(mu) + " outside 0..3");
  return pauli_table()[static_cast<std::size_t>(mu)];
}

ComplexMatrix herm_from_vector(const MinkowskiVector& v) {
  return ComplexMatrix{{cplx(v.t + v.z, 0.0), cplx(v.x, -v.y)},
                       {cplx(v.x, v.y), cplx(v.t - v.z, 0.0)}};
}

MinkowskiVector vector_from_herm(const ComplexMatrix& h) {
  if (h.dim() != 2) throw ContractError("vector_from_herm: expected a 2x2 matrix");
  const double defect = hermitian_defect(h);
  if (defect > 1e-10 * std::max(1.0, h.max_abs())) {
    throw ContractError("vector_from_herm: matrix is not Hermitian (max asymmetry " +
                        std::to_string(defect) + ")");
  }
  return {0.5 * (h(0, 0) + h(1, 1)).real(), 0.5 * (h(0, 1) + h(1, 0)).real(),
          0.5 * (h(1, 0) - h(0, 1)).imag(), 0.5 * (h(0, 0) - h(1, 1)).real()};
}

double minkowski_form(const MinkowskiVector& v) {
  return v.t * v.t - v.x * v.x - v.y * v.y - v.z * v.z;
}

SL2C::SL2C(ComplexMatrix m) : m_(std::move(m)) {
  if (m_.dim() != 2) throw ContractError("SL2C: expected a 2x2 matrix");
  const double dev = std::abs(det(m_) - 1.0);
  if (!(dev <= kDetTolerance)) {
    throw ContractError("SL2C: |det - 1| = " + std::to_string(dev) + " exceeds 1e-10");
  }
}

SL2C SL2C::identity() { return SL2C(ComplexMatrix::identity(2)); }

SL2C SL2C::inverse() const {
  return SL2C(ComplexMatrix{{m_(1, 1), -m_(0, 1)}, {-m_(1, 0), m_(0, 0)}});
}

ComplexMatrix SL2C::conjugate(const ComplexMatrix& h) const {
  return hermitian_part(m_ * h * m_.adjoint());
}

double SL2C::singular_value_ratio() const {
  const HermitianEigen eig = herm_eig(m_.adjoint() * m_);
  return std::sqrt(eig.values[0] / eig.values[1]);
}

SL2C operator*(const SL2C& a, const SL2C& b) { return SL2C(a.m_ * b.m_); }
SL2C operator-(const SL2C& a) { return SL2C(-a.m_); }

LorentzMatrix4 LorentzMatrix4::identity() {
  LorentzMatrix4 out;
  for (int i = 0; i < 4; ++i) out(i, i) = 1.0;
  return out;
}

LorentzMatrix4 LorentzMatrix4::metric() {
  LorentzMatrix4 out;
  out(0, 0) = 1.0;
  for (int i = 1; i < 4; ++i) out(i, i) = -1.0;
  return out;
}

LorentzMatrix4 LorentzMatrix4::parity() {
  LorentzMatrix4 out;
  out(0, 0) = 1.0;
  for (int i = 1; i < 4; ++i) out(i, i) = -1.0;
  return out;
}

MinkowskiVector LorentzMatrix4::apply(const MinkowskiVector& v) const {
  std::array<double, 4> out{};
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) out[i] += (*this)(i, j) * v[j];
  }
  return {out[0], out[1], out[2], out[3]};
}

LorentzMatrix4 LorentzMatrix4::transpose() const {
  LorentzMatrix4 out;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) out(j, i) = (*this)(i, j);
  }
  return out;
}

double LorentzMatrix4::det() const {
  std::array<double, 16> lu = a_;
  double result = 1.0;
  for (int col = 0; col < 4; ++col) {
    int pivot = col;
    for (int r = col + 1; r < 4; ++r) {
      if (std::abs(lu[r * 4 + col]) > std::abs(lu[pivot * 4 + col])) pivot = r;
    }
    if (lu[pivot * 4 + col] == 0.0) return 0.0;
    if (pivot != col) {
      for (int k = 0; k < 4; ++k) std::swap(lu[pivot * 4 + k], lu[col * 4 + k]);
      result = -result;
    }
    result *= lu[col * 4 + col];
    for (int r = col + 1; r < 4; ++r) {
      const double f = lu[r * 4 + col] / lu[col * 4 + col];
      for (int k = col; k < 4; ++k) lu[r * 4 + k] -= f * lu[col * 4 + k];
    }
  }
  return result;
}

double LorentzMatrix4::metric_defect() const {
  const LorentzMatrix4 eta = metric();
  return (transpose() * eta * *this).max_abs_diff(eta);
}

double LorentzMatrix4::max_abs_diff(const LorentzMatrix4& other) const {
  double best = 0.0;
  for (std::size_t i = 0; i < a_.size(); ++i) best = std::max(best, std::abs(a_[i] - other.a_[i]));
  return best;
}

LorentzMatrix4 operator*(const LorentzMatrix4& a, const LorentzMatrix4& b) {
  LorentzMatrix4 out;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      double acc = 0.0;
      for (int k = 0; k < 4; ++k) acc += a(i, k) * b(k, j);
      out(i, j) = acc;
    }
  }
  return out;
}

LorentzMatrix4 spin_hom(const SL2C& lam) {
  LorentzMatrix4 out;
  for (int mu = 0; mu < 4; ++mu) {
    const MinkowskiVector col = vector_from_herm(lam.conjugate(pauli(mu)));
    for (int row = 0; row < 4; ++row) out(row, mu) = col[row];
  }
  return out;
}

SL2C boost_z(double rapidity) {
  if (!(std::abs(rapidity) <= kMaxRapidity)) {
    throw RangeError("boost_z: |rapidity| must not exceed 20");
  }
  const double half = 0.5 * rapidity;
  return SL2C(ComplexMatrix{{std::exp(half), 0.0}, {0.0, std::exp(-half)}});
}

SL2C rotation_z(double theta) {
  const double half = 0.5 * theta;
  return SL2C(ComplexMatrix{{std::polar(1.0, -half), 0.0}, {0.0, std::polar(1.0, half)}});
}

SL2C random_sl2c(Rng& rng, double max_rapidity) {
  if (!(max_rapidity > 0.0 && max_rapidity <= kMaxRapidity)) {
    throw RangeError("random_sl2c: max_rapidity must lie in (0, 20]");
  }
  ComplexMatrix g;
  do {
    g = ginibre(2, rng);
  } while (std::abs(det(g)) < 1e-6);
  g = unit_det(std::move(g));

  // Polar form g = U P with P = sqrt(g^dagger g); P has eigenvalues s, 1/s.
  const HermitianEigen eig = herm_eig(g.adjoint() * g);
  const double s_max = std::sqrt(eig.values[0]);
  const double s_min = std::sqrt(eig.values[1]);
  if (s_max / s_min > std::exp(max_rapidity)) {
    const ComplexMatrix& v = eig.vectors;
    const std::array<double, 2> inv_sv = {1.0 / s_max, 1.0 / s_min};
    const std::array<double, 2> squeezed = {std::exp(0.5 * max_rapidity),
                                            std::exp(-0.5 * max_rapidity)};
    const ComplexMatrix unitary = g * v * ComplexMatrix::diagonal(inv_sv) * v.adjoint();
    g = unit_det(unitary * v * ComplexMatrix::diagonal(squeezed) * v.adjoint());
  }
  return SL2C(std::move(g));
}

SL2C random_sl2c(std::uint64_t seed, double max_rapidity) {
  Rng rng(seed);
  return random_sl2c(rng, max_rapidity);
}

}  // namespace lqi
