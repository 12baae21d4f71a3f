// SPDX-License-Identifier: Apache-2.0

#include "lqi/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>
#include <utility>

#include "lqi/error.hpp"

namespace lqi {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

// Below this many rows the thread fork costs more than the work.
constexpr std::size_t kParallelMinDim = 64;

void require_same_dim(const ComplexMatrix& a, const ComplexMatrix& b, const char* what) {
  if (a.dim() != b.dim()) {
    throw ArgumentError(std::string(what) + ": dimension mismatch (" + std::to_string(a.dim()) +
                        " vs " + std::to_string(b.dim()) + ")");
  }
}

void require_dim(std::size_t dim) {
  if (dim > kMaxDim) {
    throw SizeError("matrix dimension " + std::to_string(dim) + " exceeds the maximum " +
                    std::to_string(kMaxDim));
  }
}

struct TraceLayout {
  std::vector<std::size_t> kept_offset;    // reduced index -> full-index bits of kept qubits
  std::vector<std::size_t> traced_offset;  // traced index  -> full-index bits of traced qubits
};

TraceLayout trace_layout(const ComplexMatrix& rho, int n, std::span<const int> keep) {
  if (n < 1 || n > 12) throw ArgumentError("partial_trace: qubit count out of range");
  if (rho.dim() != (std::size_t{1} << n)) {
    throw ArgumentError("partial_trace: matrix dimension " + std::to_string(rho.dim()) +
                        " is not 2^" + std::to_string(n));
  }
  if (keep.empty()) throw ArgumentError("partial_trace: keep set is empty");
  std::vector<int> kept(keep.begin(), keep.end());
  std::sort(kept.begin(), kept.end());
  for (std::size_t i = 0; i < kept.size(); ++i) {
    if (kept[i] < 1 || kept[i] > n) {
      throw ArgumentError("partial_trace: qubit index " + std::to_string(kept[i]) +
                          " outside 1.." + std::to_string(n));
    }
    if (i > 0 && kept[i] == kept[i - 1]) {
      throw ArgumentError("partial_trace: duplicate qubit index " + std::to_string(kept[i]));
    }
  }
  std::vector<int> traced;
  for (int q = 1; q <= n; ++q) {
    if (!std::binary_search(kept.begin(), kept.end(), q)) traced.push_back(q);
  }

  auto scatter = [n](const std::vector<int>& qubits) {
    const std::size_t count = std::size_t{1} << qubits.size();
    std::vector<std::size_t> offset(count, 0);
    const int m = static_cast<int>(qubits.size());
    for (std::size_t r = 0; r < count; ++r) {
      std::size_t full = 0;
      for (int j = 0; j < m; ++j) {
        // Bit j counted from the most significant end of r belongs to qubits[j].
        if ((r >> (m - 1 - j)) & 1U) full |= std::size_t{1} << (n - qubits[j]);
      }
      offset[r] = full;
    }
    return offset;
  };
  return {scatter(kept), scatter(traced)};
}

template <bool Parallel>
ComplexMatrix partial_trace_impl(const ComplexMatrix& rho, int n, std::span<const int> keep) {
  const TraceLayout layout = trace_layout(rho, n, keep);
  const std::size_t out_dim = layout.kept_offset.size();
  if (out_dim == rho.dim()) return rho;
  ComplexMatrix out(out_dim);
  const auto rows = static_cast<std::ptrdiff_t>(out_dim);
#pragma omp parallel for schedule(static) if (Parallel && out_dim * out_dim >= kParallelMinDim)
  for (std::ptrdiff_t r = 0; r < rows; ++r) {
    const std::size_t row_base = layout.kept_offset[r];
    for (std::size_t c = 0; c < out_dim; ++c) {
      const std::size_t col_base = layout.kept_offset[c];
      cplx acc = 0.0;
      for (const std::size_t t : layout.traced_offset) acc += rho(row_base | t, col_base | t);
      out(r, c) = acc;
    }
  }
  return out;
}

template <bool Parallel>
ComplexMatrix matmul_impl(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_dim(a, b, "matmul");
  const std::size_t d = a.dim();
  ComplexMatrix out(d);
  const auto rows = static_cast<std::ptrdiff_t>(d);
#pragma omp parallel for schedule(static) if (Parallel && d >= kParallelMinDim)
  for (std::ptrdiff_t i = 0; i < rows; ++i) {
    cplx* out_row = &out(i, 0);
    for (std::size_t k = 0; k < d; ++k) {
      const cplx aik = a(i, k);
      if (aik == cplx{}) continue;
      const cplx* b_row = &b(k, 0);
      for (std::size_t j = 0; j < d; ++j) out_row[j] += aik * b_row[j];
    }
  }
  return out;
}

// One Jacobi rotation zeroing m(p,q); accumulates into vecs.
void jacobi_rotate(ComplexMatrix& m, ComplexMatrix& vecs, std::size_t p, std::size_t q) {
  const cplx b = m(p, q);
  const double abs_b = std::abs(b);
  if (abs_b == 0.0) return;
  const double app = m(p, p).real();
  const double aqq = m(q, q).real();
  const cplx phase = std::conj(b) / abs_b;  // e^{-i arg b}

  const double theta = (aqq - app) / (2.0 * abs_b);
  double t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
  if (theta < 0.0) t = -t;
  const double c = 1.0 / std::sqrt(1.0 + t * t);
  const double s = t * c;

  // G = diag(1, phase) * [[c, s], [-s, c]]
  const cplx g_pp = c;
  const cplx g_pq = s;
  const cplx g_qp = -s * phase;
  const cplx g_qq = c * phase;
  const std::size_t d = m.dim();

  for (std::size_t k = 0; k < d; ++k) {
    const cplx akp = m(k, p);
    const cplx akq = m(k, q);
    m(k, p) = akp * g_pp + akq * g_qp;
    m(k, q) = akp * g_pq + akq * g_qq;
  }
  for (std::size_t k = 0; k < d; ++k) {
    const cplx apk = m(p, k);
    const cplx aqk = m(q, k);
    m(p, k) = std::conj(g_pp) * apk + std::conj(g_qp) * aqk;
    m(q, k) = std::conj(g_pq) * apk + std::conj(g_qq) * aqk;
  }
  m(p, p) = app - t * abs_b;
  m(q, q) = aqq + t * abs_b;
  m(p, q) = 0.0;
  m(q, p) = 0.0;

  for (std::size_t k = 0; k < d; ++k) {
    const cplx vkp = vecs(k, p);
    const cplx vkq = vecs(k, q);
    vecs(k, p) = vkp * g_pp + vkq * g_qp;
    vecs(k, q) = vkp * g_pq + vkq * g_qq;
  }
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t dim) : dim_(dim) {
  require_dim(dim);
  data_.assign(dim * dim, cplx{});
}

ComplexMatrix::ComplexMatrix(std::size_t dim, std::vector<cplx> entries)
    : dim_(dim), data_(std::move(entries)) {
  require_dim(dim);
  if (data_.size() != dim * dim) {
    throw ArgumentError("ComplexMatrix: expected " + std::to_string(dim * dim) + " entries, got " +
                        std::to_string(data_.size()));
  }
  if (!all_finite()) throw ArgumentError("ComplexMatrix: non-finite entry");
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<cplx>> rows)
    : dim_(rows.size()) {
  require_dim(dim_);
  data_.reserve(dim_ * dim_);
  for (const auto& row : rows) {
    if (row.size() != dim_) throw ArgumentError("ComplexMatrix: rows must form a square matrix");
    data_.insert(data_.end(), row.begin(), row.end());
  }
  if (!all_finite()) throw ArgumentError("ComplexMatrix: non-finite entry");
}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
  ComplexMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const cplx> diag) {
  ComplexMatrix m(diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> diag) {
  ComplexMatrix m(diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return m;
}

ComplexMatrix ComplexMatrix::outer(std::span<const cplx> v) {
  ComplexMatrix m(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (std::size_t j = 0; j < v.size(); ++j) m(i, j) = v[i] * std::conj(v[j]);
  }
  return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = 0; j < dim_; ++j) out(j, i) = std::conj((*this)(i, j));
  }
  return out;
}

ComplexMatrix ComplexMatrix::conj() const {
  ComplexMatrix out = *this;
  for (auto& z : out.data_) z = std::conj(z);
  return out;
}

ComplexMatrix ComplexMatrix::transpose() const {
  ComplexMatrix out(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = 0; j < dim_; ++j) out(j, i) = (*this)(i, j);
  }
  return out;
}

cplx ComplexMatrix::trace() const {
  cplx acc = 0.0;
  for (std::size_t i = 0; i < dim_; ++i) acc += (*this)(i, i);
  return acc;
}

double ComplexMatrix::max_abs() const {
  double best = 0.0;
  for (const auto& z : data_) best = std::max(best, std::abs(z));
  return best;
}

bool ComplexMatrix::all_finite() const {
  return std::all_of(data_.begin(), data_.end(), [](const cplx& z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
  });
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
  require_same_dim(*this, other, "operator+");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
  require_same_dim(*this, other, "operator-");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(cplx s) {
  for (auto& z : data_) z *= s;
  return *this;
}

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
ComplexMatrix operator-(ComplexMatrix a) { return a *= -1.0; }
ComplexMatrix operator*(ComplexMatrix a, cplx s) { return a *= s; }
ComplexMatrix operator*(cplx s, ComplexMatrix a) { return a *= s; }
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) { return matmul(a, b); }

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b) {
  return matmul_impl<true>(a, b);
}

ComplexMatrix matmul_serial(const ComplexMatrix& a, const ComplexMatrix& b) {
  return matmul_impl<false>(a, b);
}

cplx trace_of_product(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_dim(a, b, "trace_of_product");
  cplx acc = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t k = 0; k < a.dim(); ++k) acc += a(i, k) * b(k, i);
  }
  return acc;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  const std::size_t da = a.dim();
  const std::size_t db = b.dim();
  if (da != 0 && db > kMaxDim / da) {
    throw SizeError("kron: result dimension " + std::to_string(da) + "*" + std::to_string(db) +
                    " exceeds the maximum " + std::to_string(kMaxDim));
  }
  ComplexMatrix out(da * db);
  const auto rows = static_cast<std::ptrdiff_t>(da);
#pragma omp parallel for schedule(static) if (da * db >= kParallelMinDim)
  for (std::ptrdiff_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < da; ++j) {
      const cplx aij = a(i, j);
      for (std::size_t k = 0; k < db; ++k) {
        for (std::size_t l = 0; l < db; ++l) out(i * db + k, j * db + l) = aij * b(k, l);
      }
    }
  }
  return out;
}

ComplexMatrix kron(std::span<const ComplexMatrix> factors) {
  if (factors.empty()) throw ArgumentError("kron: no factors");
  ComplexMatrix out = factors.front();
  for (std::size_t i = 1; i < factors.size(); ++i) out = kron(out, factors[i]);
  return out;
}

ComplexMatrix partial_trace(const ComplexMatrix& rho, int n, std::span<const int> keep) {
  return partial_trace_impl<true>(rho, n, keep);
}

ComplexMatrix partial_trace_serial(const ComplexMatrix& rho, int n, std::span<const int> keep) {
  return partial_trace_impl<false>(rho, n, keep);
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_dim(a, b, "max_abs_diff");
  double best = 0.0;
  for (std::size_t i = 0; i < a.data().size(); ++i) {
    best = std::max(best, std::abs(a.data()[i] - b.data()[i]));
  }
  return best;
}

double hermitian_defect(const ComplexMatrix& m) {
  double best = 0.0;
  for (std::size_t i = 0; i < m.dim(); ++i) {
    for (std::size_t j = i; j < m.dim(); ++j) {
      best = std::max(best, std::abs(m(i, j) - std::conj(m(j, i))));
    }
  }
  return best;
}

ComplexMatrix hermitian_part(const ComplexMatrix& m) {
  ComplexMatrix out(m.dim());
  for (std::size_t i = 0; i < m.dim(); ++i) {
    out(i, i) = m(i, i).real();
    for (std::size_t j = i + 1; j < m.dim(); ++j) {
      const cplx v = 0.5 * (m(i, j) + std::conj(m(j, i)));
      out(i, j) = v;
      out(j, i) = std::conj(v);
    }
  }
  return out;
}

HermitianEigen herm_eig(const ComplexMatrix& m, HermitianCheckTolerance tol) {
  const double defect = hermitian_defect(m);
  if (defect > tol.atol * std::max(1.0, m.max_abs())) {
    throw ContractError("herm_eig: matrix is not Hermitian (max asymmetry " +
                        std::to_string(defect) + ")");
  }
  const std::size_t d = m.dim();
  ComplexMatrix a = hermitian_part(m);
  ComplexMatrix vecs = ComplexMatrix::identity(d);

  double frob2 = 0.0;
  for (const auto& z : a.data()) frob2 += std::norm(z);
  const double stop = kEps * kEps * frob2;

  constexpr int kMaxSweeps = 64;
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p < d; ++p) {
      for (std::size_t q = p + 1; q < d; ++q) off += std::norm(a(p, q));
    }
    if (off <= stop) break;
    for (std::size_t p = 0; p < d; ++p) {
      for (std::size_t q = p + 1; q < d; ++q) jacobi_rotate(a, vecs, p, q);
    }
  }

  std::vector<std::size_t> order(d);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return a(x, x).real() > a(y, y).real(); });
  HermitianEigen out{std::vector<double>(d), ComplexMatrix(d)};
  for (std::size_t k = 0; k < d; ++k) {
    out.values[k] = a(order[k], order[k]).real();
    for (std::size_t r = 0; r < d; ++r) out.vectors(r, k) = vecs(r, order[k]);
  }
  return out;
}

ComplexMatrix mat_sqrt_psd(const ComplexMatrix& m) {
  const HermitianEigen eig = herm_eig(m);
  const double scale = m.max_abs();
  const std::size_t d = m.dim();
  const double top = eig.values.empty() ? 0.0 : std::max(eig.values.front(), 0.0);
  // Eigenvalues this small are indistinguishable from rounding in the solver.
  const double floor = 4.0 * static_cast<double>(d) * kEps * top;

  std::vector<double> roots(d, 0.0);
  for (std::size_t k = 0; k < d; ++k) {
    const double lam = eig.values[k];
    if (lam < -1e-10 * scale) {
      throw PositivityError("mat_sqrt_psd: eigenvalue " + std::to_string(lam) +
                            " below clamp threshold");
    }
    roots[k] = lam > floor ? std::sqrt(lam) : 0.0;
  }
  ComplexMatrix out(d);
  for (std::size_t k = 0; k < d; ++k) {
    if (roots[k] == 0.0) continue;
    for (std::size_t i = 0; i < d; ++i) {
      const cplx vik = eig.vectors(i, k) * roots[k];
      for (std::size_t j = 0; j < d; ++j) out(i, j) += vik * std::conj(eig.vectors(j, k));
    }
  }
  return hermitian_part(out);
}

cplx det(const ComplexMatrix& m) {
  const std::size_t d = m.dim();
  if (d == 0) return 1.0;
  if (d == 1) return m(0, 0);
  if (d == 2) return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
  ComplexMatrix lu = m;
  cplx result = 1.0;
  for (std::size_t col = 0; col < d; ++col) {
    std::size_t pivot = col;
    for (std::size_t r = col + 1; r < d; ++r) {
      if (std::abs(lu(r, col)) > std::abs(lu(pivot, col))) pivot = r;
    }
    if (lu(pivot, col) == cplx{}) return 0.0;
    if (pivot != col) {
      for (std::size_t k = 0; k < d; ++k) std::swap(lu(pivot, k), lu(col, k));
      result = -result;
    }
    const cplx diag = lu(col, col);
    result *= diag;
    for (std::size_t r = col + 1; r < d; ++r) {
      const cplx factor = lu(r, col) / diag;
      if (factor == cplx{}) continue;
      for (std::size_t k = col; k < d; ++k) lu(r, k) -= factor * lu(col, k);
    }
  }
  return result;
}

ComplexMatrix inverse(const ComplexMatrix& m) {
  const std::size_t d = m.dim();
  ComplexMatrix work = m;
  ComplexMatrix inv = ComplexMatrix::identity(d);
  const double scale = std::max(m.max_abs(), std::numeric_limits<double>::min());
  for (std::size_t col = 0; col < d; ++col) {
    std::size_t pivot = col;
    for (std::size_t r = col + 1; r < d; ++r) {
      if (std::abs(work(r, col)) > std::abs(work(pivot, col))) pivot = r;
    }
    if (std::abs(work(pivot, col)) <= kEps * scale) throw ContractError("inverse: matrix is singular");
    if (pivot != col) {
      for (std::size_t k = 0; k < d; ++k) {
        std::swap(work(pivot, k), work(col, k));
        std::swap(inv(pivot, k), inv(col, k));
      }
    }
    const cplx diag_inv = 1.0 / work(col, col);
    for (std::size_t k = 0; k < d; ++k) {
      work(col, k) *= diag_inv;
      inv(col, k) *= diag_inv;
    }
    for (std::size_t r = 0; r < d; ++r) {
      if (r == col) continue;
      const cplx factor = work(r, col);
      if (factor == cplx{}) continue;
      for (std::size_t k = 0; k < d; ++k) {
        work(r, k) -= factor * work(col, k);
        inv(r, k) -= factor * inv(col, k);
      }
    }
  }
  return inv;
}

std::vector<cplx> char_poly_coeffs(const ComplexMatrix& m) {
  const std::size_t d = m.dim();
  std::vector<cplx> coeffs(d + 1, cplx{});
  coeffs[d] = 1.0;
  ComplexMatrix aux(d);
  const ComplexMatrix eye = ComplexMatrix::identity(d);
  for (std::size_t k = 1; k <= d; ++k) {
    aux = matmul(m, aux) + coeffs[d - k + 1] * eye;
    coeffs[d - k] = -trace_of_product(m, aux) / static_cast<double>(k);
  }
  coeffs.pop_back();
  return coeffs;
}

}  // namespace lqi
