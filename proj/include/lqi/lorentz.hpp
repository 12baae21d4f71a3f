// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cstdint>

#include "lqi/linalg.hpp"
#include "lqi/rng.hpp"

namespace lqi {

/// Pauli-basis coordinates of a 2x2 Hermitian matrix t*1 + x*X + y*Y + z*Z.
struct MinkowskiVector {
  double t = 0.0;
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  double operator[](int mu) const;
  friend bool operator==(const MinkowskiVector&, const MinkowskiVector&) = default;
};

/// sigma_0..sigma_3 = (1, X, Y, Z).
const ComplexMatrix& pauli(int mu);

ComplexMatrix herm_from_vector(const MinkowskiVector& v);
/// Throws ContractError unless h is 2x2 and Hermitian within 1e-10 (scaled by max(1, |h|_max)).
MinkowskiVector vector_from_herm(const ComplexMatrix& h);

/// t^2 - x^2 - y^2 - z^2
double minkowski_form(const MinkowskiVector& v);

/// 2x2 complex matrix with unit determinant (|det - 1| <= 1e-10).
class SL2C {
 public:
  explicit SL2C(ComplexMatrix m);
  static SL2C identity();

  const ComplexMatrix& matrix() const { return m_; }
  SL2C inverse() const;
  /// Lambda h Lambda^dagger
  ComplexMatrix conjugate(const ComplexMatrix& h) const;
  /// sigma_max / sigma_min
  double singular_value_ratio() const;

  friend SL2C operator*(const SL2C& a, const SL2C& b);
  friend SL2C operator-(const SL2C& a);

 private:
  ComplexMatrix m_;
};

/// Real 4x4 matrix acting on (t, x, y, z).
class LorentzMatrix4 {
 public:
  LorentzMatrix4() = default;
  static LorentzMatrix4 identity();
  /// eta = diag(1, -1, -1, -1)
  static LorentzMatrix4 metric();
  /// Spatial inversion (x, y, z) -> (-x, -y, -z).
  static LorentzMatrix4 parity();

  double& operator()(int row, int col) { return a_[row * 4 + col]; }
  double operator()(int row, int col) const { return a_[row * 4 + col]; }

  MinkowskiVector apply(const MinkowskiVector& v) const;
  LorentzMatrix4 transpose() const;
  double det() const;
  /// |L^T eta L - eta|_max
  double metric_defect() const;
  double max_abs_diff(const LorentzMatrix4& other) const;

  friend LorentzMatrix4 operator*(const LorentzMatrix4& a, const LorentzMatrix4& b);
  friend bool operator==(const LorentzMatrix4&, const LorentzMatrix4&) = default;

 private:
  std::array<double, 16> a_{};
};

/// Column mu is vector_from_herm(Lambda sigma_mu Lambda^dagger).
LorentzMatrix4 spin_hom(const SL2C& lam);

/// diag(e^{rapidity/2}, e^{-rapidity/2}); RangeError when |rapidity| > 20.
SL2C boost_z(double rapidity);
/// diag(e^{-i theta/2}, e^{i theta/2})
SL2C rotation_z(double theta);

/// Gaussian 2x2 draw scaled to unit determinant, then (if needed) its
/// positive polar factor is squeezed so sigma_max / sigma_min <= e^max_rapidity.
/// max_rapidity must lie in (0, 20].
SL2C random_sl2c(Rng& rng, double max_rapidity);
SL2C random_sl2c(std::uint64_t seed, double max_rapidity);

}  // namespace lqi
