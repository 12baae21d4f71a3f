// SPDX-License-Identifier: Apache-2.0

#include "lqi/io.hpp"

#include <fstream>
#include <string>

#include "lqi/error.hpp"

namespace lqi {

json matrix_to_json(const ComplexMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.dim(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.dim(); ++j) row.push_back({m(i, j).real(), m(i, j).imag()});
    rows.push_back(std::move(row));
  }
  return rows;
}

ComplexMatrix matrix_from_json(const json& j) {
  if (!j.is_array() || j.empty()) throw ArgumentError("matrix: expected a non-empty array of rows");
  const std::size_t dim = j.size();
  std::vector<cplx> entries;
  entries.reserve(dim * dim);
  for (const auto& row : j) {
    if (!row.is_array() || row.size() != dim) throw ArgumentError("matrix: rows must form a square matrix");
    for (const auto& entry : row) {
      if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number() || !entry[1].is_number()) {
        throw ArgumentError("matrix: each entry must be [re, im]");
      }
      entries.emplace_back(entry[0].get<double>(), entry[1].get<double>());
    }
  }
  return ComplexMatrix(dim, std::move(entries));
}

json state_to_json(const QubitState& s) {
  return {{"n", s.n()}, {"matrix", matrix_to_json(s.rho())}};
}

QubitState state_from_json(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("matrix")) {
    throw ArgumentError("state: expected an object with 'n' and 'matrix'");
  }
  if (!j.at("n").is_number_integer()) throw ArgumentError("state: 'n' must be an integer");
  return QubitState(j.at("n").get<int>(), matrix_from_json(j.at("matrix")));
}

QubitState read_state_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ArgumentError("cannot open state file " + path.string());
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw ArgumentError("state file " + path.string() + ": " + e.what());
  }
  return state_from_json(j);
}

void write_state_file(const std::filesystem::path& path, const QubitState& s) {
  std::ofstream out(path);
  if (!out) throw ArgumentError("cannot write state file " + path.string());
  out << state_to_json(s).dump(2) << '\n';
}

json to_json(const InvariantSet& inv) {
  json j;
  j["linear_entropy"] = inv.linear_entropy;
  j["trace_W"] = inv.trace_W;
  j["spectral_invariants"] = inv.spectral_invariants;
  j["concurrence"] = inv.concurrence ? json(*inv.concurrence) : json(nullptr);
  j["i_l_subset"] = inv.i_l_subset;
  j["i_l_trace"] = inv.i_l_trace;
  return j;
}

json to_json(const TwirlEstimate& est) {
  return {{"samples", est.sample_count}, {"chi", est.chi},
          {"zeta", est.zeta},           {"max_abs_deviation", est.max_abs_deviation},
          {"std_error", est.std_error}, {"pass", est.pass}};
}

json to_json(const MinkowskiVector& v) { return json::array({v.t, v.x, v.y, v.z}); }

json to_json(const LorentzMatrix4& l) {
  json rows = json::array();
  for (int i = 0; i < 4; ++i) {
    json row = json::array();
    for (int k = 0; k < 4; ++k) row.push_back(l(i, k));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace lqi
