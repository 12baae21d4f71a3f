// SPDX-License-Identifier: Apache-2.0

#include "lqi/states.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cmath>
#include <limits>
#include <string>
#include <utility>

#include "lqi/error.hpp"

namespace lqi {

namespace {

constexpr std::size_t kParallelMinDim = 64;

void require_qubits(int n, const char* what) {
  if (n < 1 || n > kMaxQubits) {
    throw ArgumentError(std::string(what) + ": qubit count " + std::to_string(n) + " outside 1.." +
                        std::to_string(kMaxQubits));
  }
}

void validate_shape(int n, const ComplexMatrix& rho) {
  require_qubits(n, "QubitState");
  if (rho.dim() != (std::size_t{1} << n)) {
    throw ContractError("QubitState: matrix dimension " + std::to_string(rho.dim()) +
                        " is not 2^" + std::to_string(n));
  }
}

// Left-multiply rows by `op` on one qubit and right-multiply columns by op^dagger.
void conjugate_qubit(ComplexMatrix& rho, int n, int qubit, const ComplexMatrix& op) {
  const std::size_t d = rho.dim();
  const std::size_t mask = std::size_t{1} << (n - qubit);
  const cplx l00 = op(0, 0), l01 = op(0, 1), l10 = op(1, 0), l11 = op(1, 1);
  const auto rows = static_cast<std::ptrdiff_t>(d);

#pragma omp parallel for schedule(static) if (d >= kParallelMinDim)
  for (std::ptrdiff_t c = 0; c < rows; ++c) {
    for (std::size_t r0 = 0; r0 < d; ++r0) {
      if (r0 & mask) continue;
      const std::size_t r1 = r0 | mask;
      const cplx a = rho(r0, c);
      const cplx b = rho(r1, c);
      rho(r0, c) = l00 * a + l01 * b;
      rho(r1, c) = l10 * a + l11 * b;
    }
  }
  const cplx c00 = std::conj(l00), c01 = std::conj(l01), c10 = std::conj(l10), c11 = std::conj(l11);
#pragma omp parallel for schedule(static) if (d >= kParallelMinDim)
  for (std::ptrdiff_t r = 0; r < rows; ++r) {
    for (std::size_t c0 = 0; c0 < d; ++c0) {
      if (c0 & mask) continue;
      const std::size_t c1 = c0 | mask;
      const cplx a = rho(r, c0);
      const cplx b = rho(r, c1);
      rho(r, c0) = a * c00 + b * c01;
      rho(r, c1) = a * c10 + b * c11;
    }
  }
}

std::vector<cplx> basis_vector(std::size_t dim, std::size_t index) {
  std::vector<cplx> v(dim, cplx{});
  v[index] = 1.0;
  return v;
}

}  // namespace

QubitState::QubitState(int n, ComplexMatrix rho, Trusted) : n_(n), rho_(std::move(rho)) {
  validate_shape(n_, rho_);
}

QubitState QubitState::trusted(int n, ComplexMatrix rho) {
  return QubitState(n, std::move(rho), Trusted{});
}

QubitState::QubitState(int n, ComplexMatrix rho) : n_(n), rho_(std::move(rho)) {
  validate_shape(n_, rho_);
  if (!rho_.all_finite()) throw ContractError("QubitState: non-finite entry");
  const double scale = std::max(1.0, rho_.max_abs());
  const double defect = hermitian_defect(rho_);
  if (defect > 1e-10 * scale) {
    throw ContractError("QubitState: matrix is not Hermitian (max asymmetry " +
                        std::to_string(defect) + ")");
  }
  const cplx tr = rho_.trace();
  if (!(tr.real() > 0.0) || std::abs(tr.imag()) > 1e-12 * scale) {
    throw ContractError("QubitState: trace must be real and positive");
  }
  const HermitianEigen eig = herm_eig(rho_);
  if (eig.values.back() < -1e-9 * rho_.max_abs()) {
    throw ContractError("QubitState: matrix is not positive semidefinite (eigenvalue " +
                        std::to_string(eig.values.back()) + ")");
  }
  rho_ = hermitian_part(rho_);
}

LocalAction::LocalAction(std::vector<SL2C> factors) : factors_(std::move(factors)) {
  if (factors_.empty()) throw ArgumentError("LocalAction: no factors");
}

LocalAction LocalAction::uniform(int n, const SL2C& factor) {
  require_qubits(n, "LocalAction");
  return LocalAction(std::vector<SL2C>(static_cast<std::size_t>(n), factor));
}

LocalAction LocalAction::random(int n, Rng& rng, double max_rapidity) {
  require_qubits(n, "LocalAction");
  std::vector<SL2C> factors;
  factors.reserve(static_cast<std::size_t>(n));
  for (int q = 0; q < n; ++q) factors.push_back(random_sl2c(rng, max_rapidity));
  return LocalAction(std::move(factors));
}

ComplexMatrix LocalAction::matrix() const {
  ComplexMatrix out = factors_.front().matrix();
  for (std::size_t i = 1; i < factors_.size(); ++i) out = kron(out, factors_[i].matrix());
  return out;
}

LocalAction LocalAction::inverse() const {
  std::vector<SL2C> inv;
  inv.reserve(factors_.size());
  for (const auto& f : factors_) inv.push_back(f.inverse());
  return LocalAction(std::move(inv));
}

ComplexMatrix spin_flip_matrix(const ComplexMatrix& rho, int n) {
  const std::size_t d = rho.dim();
  if (d != (std::size_t{1} << n)) throw ArgumentError("spin_flip: dimension is not 2^n");
  const std::size_t all = d - 1;
  ComplexMatrix out(d);
  const auto rows = static_cast<std::ptrdiff_t>(d);
#pragma omp parallel for schedule(static) if (d >= kParallelMinDim)
  for (std::ptrdiff_t a = 0; a < rows; ++a) {
    const auto ua = static_cast<std::size_t>(a);
    for (std::size_t b = 0; b < d; ++b) {
      const cplx v = std::conj(rho(all ^ ua, all ^ b));
      out(ua, b) = ((std::popcount(ua) + std::popcount(b)) & 1) ? -v : v;
    }
  }
  return out;
}

QubitState spin_flip(const QubitState& s) {
  return QubitState::trusted(s.n(), spin_flip_matrix(s.rho(), s.n()));
}

ComplexMatrix w_matrix(const QubitState& s) {
  return s.rho() * spin_flip_matrix(s.rho(), s.n());
}

std::vector<double> w_spectrum(const QubitState& s) {
  const ComplexMatrix root = mat_sqrt_psd(s.rho());
  const ComplexMatrix flipped = spin_flip_matrix(s.rho(), s.n());
  const ComplexMatrix surrogate = hermitian_part(root * flipped * root);
  std::vector<double> values = herm_eig(surrogate).values;
  const double top = values.empty() ? 0.0 : values.front();
  const double floor = static_cast<double>(s.dim()) * std::numeric_limits<double>::epsilon() * top;
  for (auto& v : values) {
    if (v <= floor) v = 0.0;
  }
  return values;
}

QubitState apply_local(const QubitState& s, const LocalAction& a) {
  if (a.size() != static_cast<std::size_t>(s.n())) {
    throw ArgumentError("apply_local: " + std::to_string(a.size()) + " factors for a " +
                        std::to_string(s.n()) + "-qubit state");
  }
  ComplexMatrix rho = s.rho();
  for (int q = 1; q <= s.n(); ++q) {
    conjugate_qubit(rho, s.n(), q, a.factors()[static_cast<std::size_t>(q - 1)].matrix());
  }
  return QubitState::trusted(s.n(), hermitian_part(rho));
}

QubitState reduce(const QubitState& s, std::span<const int> subset) {
  ComplexMatrix reduced = partial_trace(s.rho(), s.n(), subset);
  return QubitState::trusted(static_cast<int>(subset.size()), hermitian_part(reduced));
}

PresetSpec parse_preset(std::string_view name, int default_n) {
  std::string_view base = name;
  std::string_view digits;
  if (const auto colon = name.find(':'); colon != std::string_view::npos) {
    base = name.substr(0, colon);
    digits = name.substr(colon + 1);
  } else if (name != "basis0") {
    const auto first_digit = name.find_first_of("0123456789");
    if (first_digit != std::string_view::npos) {
      base = name.substr(0, first_digit);
      digits = name.substr(first_digit);
    }
  }
  int param = default_n;
  if (!digits.empty()) {
    const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), param);
    if (ec != std::errc{} || ptr != digits.data() + digits.size()) {
      throw ArgumentError("preset: malformed count in '" + std::string(name) + "'");
    }
  }

  if (base == "singlet") return {Preset::Singlet, 2};
  if (base == "ghz") return {Preset::Ghz, param};
  if (base == "wstate" || base == "w") return {Preset::WState, param};
  if (base == "singlets" || base == "product_of_singlets") return {Preset::ProductOfSinglets, param};
  if (base == "maximally_mixed" || base == "mixed") return {Preset::MaximallyMixed, param};
  if (base == "basis0") return {Preset::Basis0, param};
  throw ArgumentError("preset: unknown name '" + std::string(name) + "'");
}

std::string preset_name(const PresetSpec& spec) {
  const std::string count = std::to_string(spec.param);
  switch (spec.kind) {
    case Preset::Singlet: return "singlet";
    case Preset::Ghz: return "ghz:" + count;
    case Preset::WState: return "wstate:" + count;
    case Preset::ProductOfSinglets: return "singlets:" + count;
    case Preset::MaximallyMixed: return "maximally_mixed:" + count;
    case Preset::Basis0: return "basis0:" + count;
  }
  return "unknown";
}

QubitState preset(const PresetSpec& spec) {
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  switch (spec.kind) {
    case Preset::Singlet: {
      const std::vector<cplx> psi = {0.0, inv_sqrt2, -inv_sqrt2, 0.0};
      return QubitState::trusted(2, ComplexMatrix::outer(psi));
    }
    case Preset::Ghz: {
      if (spec.param < 2 || spec.param > kMaxQubits) throw ArgumentError("preset ghz: n must be 2..8");
      const std::size_t d = std::size_t{1} << spec.param;
      std::vector<cplx> psi(d, cplx{});
      psi.front() = inv_sqrt2;
      psi.back() = inv_sqrt2;
      return QubitState::trusted(spec.param, ComplexMatrix::outer(psi));
    }
    case Preset::WState: {
      if (spec.param < 2 || spec.param > kMaxQubits) throw ArgumentError("preset wstate: n must be 2..8");
      const std::size_t d = std::size_t{1} << spec.param;
      const double amp = 1.0 / std::sqrt(static_cast<double>(spec.param));
      std::vector<cplx> psi(d, cplx{});
      for (int q = 0; q < spec.param; ++q) psi[std::size_t{1} << q] = amp;
      return QubitState::trusted(spec.param, ComplexMatrix::outer(psi));
    }
    case Preset::ProductOfSinglets: {
      if (spec.param < 1 || 2 * spec.param > kMaxQubits) {
        throw ArgumentError("preset singlets: count must be 1..4");
      }
      const ComplexMatrix one = preset({Preset::Singlet, 2}).rho();
      ComplexMatrix rho = one;
      for (int k = 1; k < spec.param; ++k) rho = kron(rho, one);
      return QubitState::trusted(2 * spec.param, std::move(rho));
    }
    case Preset::MaximallyMixed: {
      require_qubits(spec.param, "preset maximally_mixed");
      const std::size_t d = std::size_t{1} << spec.param;
      return QubitState::trusted(spec.param, ComplexMatrix::identity(d) * (1.0 / static_cast<double>(d)));
    }
    case Preset::Basis0: {
      require_qubits(spec.param, "preset basis0");
      const std::size_t d = std::size_t{1} << spec.param;
      return QubitState::trusted(spec.param, ComplexMatrix::outer(basis_vector(d, 0)));
    }
  }
  throw ArgumentError("preset: unknown kind");
}

QubitState random_state(int n, StateKind kind, Rng& rng) {
  require_qubits(n, "random_state");
  const std::size_t d = std::size_t{1} << n;
  if (kind == StateKind::Pure) {
    std::vector<cplx> psi(d);
    double norm2 = 0.0;
    for (auto& z : psi) {
      z = complex_gaussian(rng);
      norm2 += std::norm(z);
    }
    const double inv = 1.0 / std::sqrt(norm2);
    for (auto& z : psi) z *= inv;
    return QubitState::trusted(n, hermitian_part(ComplexMatrix::outer(psi)));
  }
  const ComplexMatrix g = ginibre(d, rng);
  ComplexMatrix rho = hermitian_part(g * g.adjoint());
  rho *= 1.0 / rho.trace().real();
  return QubitState::trusted(n, std::move(rho));
}

QubitState random_state(int n, StateKind kind, std::uint64_t seed) {
  Rng rng(seed);
  return random_state(n, kind, rng);
}

}  // namespace lqi
