// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace lqi {

using cplx = std::complex<double>;

// Largest row count any kernel will allocate (2^12, i.e. 12 qubits).
inline constexpr std::size_t kMaxDim = std::size_t{1} << 12;

struct HermitianCheckTolerance {
  double atol = 1e-10;
};

/// Dense square complex matrix, row-major.
///
/// Qubit 1 is the most significant factor of a row/column index, so the
/// basis state |b_1 b_2 ... b_n> sits at index b_1 2^(n-1) + ... + b_n.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  explicit ComplexMatrix(std::size_t dim);
  ComplexMatrix(std::size_t dim, std::vector<cplx> entries);
  ComplexMatrix(std::initializer_list<std::initializer_list<cplx>> rows);

  static ComplexMatrix identity(std::size_t dim);
  static ComplexMatrix diagonal(std::span<const cplx> diag);
  static ComplexMatrix diagonal(std::span<const double> diag);
  /// |v><v|
  static ComplexMatrix outer(std::span<const cplx> v);

  std::size_t dim() const { return dim_; }
  bool empty() const { return dim_ == 0; }

  cplx& operator()(std::size_t row, std::size_t col) { return data_[row * dim_ + col]; }
  const cplx& operator()(std::size_t row, std::size_t col) const { return data_[row * dim_ + col]; }

  std::span<const cplx> data() const { return data_; }
  std::span<cplx> data() { return data_; }

  ComplexMatrix adjoint() const;
  ComplexMatrix conj() const;
  ComplexMatrix transpose() const;
  cplx trace() const;
  double max_abs() const;
  bool all_finite() const;

  ComplexMatrix& operator+=(const ComplexMatrix& other);
  ComplexMatrix& operator-=(const ComplexMatrix& other);
  ComplexMatrix& operator*=(cplx s);

  friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<cplx> data_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a);
ComplexMatrix operator*(ComplexMatrix a, cplx s);
ComplexMatrix operator*(cplx s, ComplexMatrix a);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

// Matrix product. The OpenMP kernel splits rows across threads; every entry is
// accumulated in the same order as matmul_serial, so results are bitwise equal.
ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix matmul_serial(const ComplexMatrix& a, const ComplexMatrix& b);

// Tr(a b) without forming the product.
cplx trace_of_product(const ComplexMatrix& a, const ComplexMatrix& b);

/// Kronecker product: (a (x) b)[i*db + k, j*db + l] = a[i,j] b[k,l].
/// Throws SizeError when the result would exceed kMaxDim rows.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix kron(std::span<const ComplexMatrix> factors);

/// Reduced matrix on the qubits in `keep` (1-based, any order, no
/// duplicates). Kept qubits retain their relative order in the result.
ComplexMatrix partial_trace(const ComplexMatrix& rho, int n, std::span<const int> keep);
ComplexMatrix partial_trace_serial(const ComplexMatrix& rho, int n, std::span<const int> keep);

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);
// max_ij |m_ij - conj(m_ji)|
double hermitian_defect(const ComplexMatrix& m);
// (m + m^dagger) / 2
ComplexMatrix hermitian_part(const ComplexMatrix& m);

struct HermitianEigen {
  std::vector<double> values;  // descending
  ComplexMatrix vectors;       // column k pairs with values[k]
};

/// Cyclic complex Jacobi eigensolver. Accepts m when its Hermitian defect is
/// within tol.atol * max(1, |m|_max); otherwise throws ContractError.
HermitianEigen herm_eig(const ComplexMatrix& m, HermitianCheckTolerance tol = {});

/// Principal square root of a PSD matrix. Eigenvalues in
/// [-1e-10 |m|_max, noise floor] are treated as zero; anything more negative
/// throws PositivityError.
ComplexMatrix mat_sqrt_psd(const ComplexMatrix& m);

cplx det(const ComplexMatrix& m);

/// Gauss-Jordan with partial pivoting; throws ContractError when singular.
ComplexMatrix inverse(const ComplexMatrix& m);

/// Coefficients c_0..c_{d-1} of det(x I - m) = x^d + c_{d-1} x^{d-1} + ... + c_0
/// (Faddeev-LeVerrier).
std::vector<cplx> char_poly_coeffs(const ComplexMatrix& m);

}  // namespace lqi
