// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <span>
#include <vector>

#include "lqi/states.hpp"

namespace lqi {

/// |a - b| / max(1, |a|, |b|): relative above one, absolute below.
double scaled_deviation(double a, double b);

/// Tr(rho)^2 - Tr(rho^2), valid for un-normalized states.
double linear_entropy(const ComplexMatrix& rho);
double linear_entropy(const QubitState& s);

/// e_1..e_m of `values`, from the power sums through Newton's identities.
std::vector<double> elementary_symmetric(std::span<const double> values);

/// Elementary symmetric functions of w_spectrum(s); e_1 = Tr(W).
std::vector<double> spectral_invariants(const QubitState& s);

/// max(0, sqrt(l1) - sqrt(l2) - sqrt(l3) - sqrt(l4)) over the descending
/// W spectrum. No renormalization. Throws ArgumentError unless n == 2.
double concurrence(const QubitState& s);

/// Sum over nonempty A of (-1)^{|A|+1} S_L(rho_A), full set included.
/// Terms are computed in parallel and summed in subset-mask order.
double linear_mutual_info_subsets(const QubitState& s);
double linear_mutual_info_subsets_serial(const QubitState& s);

/// Re Tr(rho rho*).
double linear_mutual_info_trace(const QubitState& s);

struct InvariantSet {
  double linear_entropy = 0.0;
  double trace_W = 0.0;
  std::vector<double> spectral_invariants;
  std::optional<double> concurrence;  // n == 2 only
  double i_l_subset = 0.0;
  double i_l_trace = 0.0;
};

InvariantSet invariant_report(const QubitState& s);

}  // namespace lqi
