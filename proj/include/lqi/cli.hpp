// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "lqi/io.hpp"

namespace lqi::cli {

enum class Command { Invariants, Oracle, Metric, Twirl, Boost };

std::string command_name(Command c);

struct Tolerances {
  double invariance = 1e-7;  // spectral invariants, I_L, concurrence under local actions
  double oracle = 1e-8;      // subset-sum I_L vs Tr(W)
  double metric = 1e-10;     // correlator vs polarized determinant
  double table = 1e-12;      // Pauli correlation table vs eta
  double symmetry = 1e-8;    // correlator under det-preserving maps
  double entropy = 1e-9;     // single-qubit S_L under conjugation
};

struct ExperimentConfig {
  Command command = Command::Invariants;
  std::optional<int> n;  // unset: oracle 4, boost 1, otherwise 2
  int trials = 100;
  std::uint64_t seed = 0;
  double max_rapidity = 2.0;
  Tolerances tol;

  // State source: input file, preset name, or random kind ("pure" / "mixed").
  std::optional<std::string> input_path;
  std::optional<std::string> preset;
  std::optional<std::string> random_kind;
  std::optional<std::string> output_path;
  std::optional<std::string> csv_path;

  // metric
  std::optional<double> boost;
  std::optional<double> rotation;
  bool parity = false;

  // twirl
  std::string o1 = "Z";
  std::string o2 = "Z";
  long samples = 100000;

  // boost
  double rapidity = 0.0;
  double theta = 0.0;
  bool random_action = false;
};

/// Result of one command. `report` embeds the effective config and ends
/// with a "wall_time_s" field; everything else is a pure function of the config.
struct RunReport {
  json report;
  std::vector<json> records;  // per-trial rows, also emitted as CSV
  bool pass = false;
};

json config_to_json(const ExperimentConfig& cfg);

/// Throws ArgumentError / ContractError for bad input.
RunReport run(const ExperimentConfig& cfg);

/// "I", "X", "Y", "Z" or an inline "t,x,y,z".
ComplexMatrix parse_observable(const std::string& text);

/// Flat CSV projection of per-trial records; columns from the first record.
std::string records_to_csv(const std::vector<json>& records);

/// Full command-line front end. Exit codes: 0 all checks pass,
/// 1 a property check failed, 2 input error.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace lqi::cli
