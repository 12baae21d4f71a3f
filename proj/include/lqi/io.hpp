// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <filesystem>

#include "json.hpp"
#include "lqi/correlation.hpp"
#include "lqi/invariants.hpp"
#include "lqi/states.hpp"

namespace lqi {

using json = nlohmann::json;

/// [[ [re, im], ... ], ...], row-major.
json matrix_to_json(const ComplexMatrix& m);
/// Throws ArgumentError on a malformed payload.
ComplexMatrix matrix_from_json(const json& j);

/// { "n": int, "matrix": [[ [re, im], ... ], ...] }
json state_to_json(const QubitState& s);
/// Applies the QubitState checks; throws ArgumentError / ContractError.
QubitState state_from_json(const json& j);
QubitState read_state_file(const std::filesystem::path& path);
void write_state_file(const std::filesystem::path& path, const QubitState& s);

/// Flat object: linear_entropy, trace_W, spectral_invariants, concurrence
/// (null unless n == 2), i_l_subset, i_l_trace.
json to_json(const InvariantSet& inv);

/// { samples, chi, zeta, max_abs_deviation, std_error, pass }
json to_json(const TwirlEstimate& est);

json to_json(const MinkowskiVector& v);
json to_json(const LorentzMatrix4& l);

}  // namespace lqi
