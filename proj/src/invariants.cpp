// SPDX-License-Identifier: Apache-2.0

#include "lqi/invariants.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

#include "lqi/error.hpp"

namespace lqi {

namespace {

template <bool Parallel>
double mutual_info_subsets_impl(const QubitState& s) {
  const int n = s.n();
  if (n < 1 || n > kMaxQubits) {
    throw SizeError("linear_mutual_info_subsets: n = " + std::to_string(n) + " outside 1..8");
  }
  const auto subsets = static_cast<std::ptrdiff_t>(1) << n;
  std::vector<double> terms(static_cast<std::size_t>(subsets), 0.0);

#pragma omp parallel for schedule(dynamic) if (Parallel && n >= 4)
  for (std::ptrdiff_t mask = 1; mask < subsets; ++mask) {
    std::vector<int> keep;
    for (int q = 1; q <= n; ++q) {
      // Qubit q is bit (n - q), matching the index convention of partial_trace.
      if ((mask >> (n - q)) & 1) keep.push_back(q);
    }
    const double sl = linear_entropy(partial_trace_serial(s.rho(), n, keep));
    const int size = std::popcount(static_cast<unsigned long long>(mask));
    terms[static_cast<std::size_t>(mask)] = (size % 2 == 1) ? sl : -sl;
  }

  double total = 0.0;
  for (const double t : terms) total += t;
  return total;
}

}  // namespace

double scaled_deviation(double a, double b) {
  return std::abs(a - b) / std::max({1.0, std::abs(a), std::abs(b)});
}

double linear_entropy(const ComplexMatrix& rho) {
  const double tr = rho.trace().real();
  return tr * tr - trace_of_product(rho, rho).real();
}

double linear_entropy(const QubitState& s) { return linear_entropy(s.rho()); }

std::vector<double> elementary_symmetric(std::span<const double> values) {
  const std::size_t m = values.size();
  std::vector<double> power(m + 1, 0.0);
  for (std::size_t k = 1; k <= m; ++k) {
    double acc = 0.0;
    for (const double v : values) acc += std::pow(v, static_cast<double>(k));
    power[k] = acc;
  }
  std::vector<double> e(m + 1, 0.0);
  e[0] = 1.0;
  for (std::size_t k = 1; k <= m; ++k) {
    double acc = 0.0;
    for (std::size_t i = 1; i <= k; ++i) {
      const double term = e[k - i] * power[i];
      acc += (i % 2 == 1) ? term : -term;
    }
    e[k] = acc / static_cast<double>(k);
  }
  e.erase(e.begin());
  return e;
}

std::vector<double> spectral_invariants(const QubitState& s) {
  return elementary_symmetric(w_spectrum(s));
}

double concurrence(const QubitState& s) {
  if (s.n() != 2) {
    throw ArgumentError("concurrence: defined for 2-qubit states only (got n = " +
                        std::to_string(s.n()) + ")");
  }
  const std::vector<double> lam = w_spectrum(s);
  const double c = std::sqrt(lam[0]) - std::sqrt(lam[1]) - std::sqrt(lam[2]) - std::sqrt(lam[3]);
  return std::max(0.0, c);
}

double linear_mutual_info_subsets(const QubitState& s) { return mutual_info_subsets_impl<true>(s); }

double linear_mutual_info_subsets_serial(const QubitState& s) {
  return mutual_info_subsets_impl<false>(s);
}

double linear_mutual_info_trace(const QubitState& s) {
  return trace_of_product(s.rho(), spin_flip_matrix(s.rho(), s.n())).real();
}

InvariantSet invariant_report(const QubitState& s) {
  InvariantSet out;
  out.linear_entropy = linear_entropy(s);
  out.i_l_trace = linear_mutual_info_trace(s);
  out.trace_W = out.i_l_trace;
  out.spectral_invariants = spectral_invariants(s);
  if (s.n() == 2) out.concurrence = concurrence(s);
  out.i_l_subset = linear_mutual_info_subsets(s);
  return out;
}

}  // namespace lqi
