// SPDX-License-Identifier: Apache-2.0

#include "lqi/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "lqi/error.hpp"

namespace lqi::cli {

namespace {

struct Check {
  std::string name;
  double max_deviation = 0.0;
  double tolerance = 0.0;

  bool pass() const { return max_deviation <= tolerance; }
  json to_json() const {
    return {{"name", name}, {"max_deviation", max_deviation}, {"tolerance", tolerance}, {"pass", pass()}};
  }
};

int default_qubits(Command c) {
  switch (c) {
    case Command::Oracle: return 4;
    case Command::Boost: return 1;
    default: return 2;
  }
}

int effective_qubits(const ExperimentConfig& cfg) {
  return cfg.n.value_or(default_qubits(cfg.command));
}

StateKind parse_kind(const std::string& text) {
  if (text == "pure") return StateKind::Pure;
  if (text == "mixed") return StateKind::Mixed;
  throw ArgumentError("random state kind must be 'pure' or 'mixed', got '" + text + "'");
}

QubitState load_state(const ExperimentConfig& cfg, const char* default_preset) {
  const int n = effective_qubits(cfg);
  if (cfg.input_path) return read_state_file(*cfg.input_path);
  if (cfg.random_kind) return random_state(n, parse_kind(*cfg.random_kind), sub_seed(cfg.seed, 0));
  return preset(parse_preset(cfg.preset.value_or(default_preset), n));
}

double max_scaled_deviation(const std::vector<double>& a, const std::vector<double>& b) {
  double worst = 0.0;
  for (std::size_t k = 0; k < std::min(a.size(), b.size()); ++k) {
    worst = std::max(worst, scaled_deviation(a[k], b[k]));
  }
  return worst;
}

RunReport finish(json report, std::vector<json> records, const std::vector<Check>& checks) {
  RunReport out;
  json check_list = json::array();
  out.pass = true;
  for (const auto& c : checks) {
    check_list.push_back(c.to_json());
    out.pass = out.pass && c.pass();
  }
  report["records"] = records;
  report["checks"] = std::move(check_list);
  report["pass"] = out.pass;
  out.report = std::move(report);
  out.records = std::move(records);
  return out;
}

RunReport cmd_invariants(const ExperimentConfig& cfg, json report) {
  const QubitState state = load_state(cfg, "singlet");
  const InvariantSet base = invariant_report(state);
  report["state"] = state_to_json(state);
  report["invariants"] = to_json(base);

  Check trace_formula{"trace_formula", scaled_deviation(base.i_l_subset, base.i_l_trace), cfg.tol.oracle};
  Check non_negative{"i_l_non_negative", std::max(0.0, -base.i_l_trace), 1e-9};
  Check il{"i_l_invariance", 0.0, cfg.tol.invariance};
  Check spectral{"spectral_invariance", 0.0, cfg.tol.invariance};
  Check conc{"concurrence_invariance", 0.0, cfg.tol.invariance};

  std::vector<json> records;
  for (int t = 0; t < cfg.trials; ++t) {
    Rng rng(sub_seed(cfg.seed, static_cast<std::uint64_t>(t) + 1));
    const LocalAction action = LocalAction::random(state.n(), rng, cfg.max_rapidity);
    const QubitState moved = apply_local(state, action);
    const double i_l = linear_mutual_info_trace(moved);
    const double il_dev = scaled_deviation(i_l, base.i_l_trace);
    const double spec_dev = max_scaled_deviation(spectral_invariants(moved), base.spectral_invariants);
    il.max_deviation = std::max(il.max_deviation, il_dev);
    spectral.max_deviation = std::max(spectral.max_deviation, spec_dev);

    json rec = {{"trial", t},
                {"trace_after", moved.trace()},
                {"i_l_trace", i_l},
                {"i_l_deviation", il_dev},
                {"spectral_deviation", spec_dev}};
    if (state.n() == 2) {
      const double c = concurrence(moved);
      const double c_dev = scaled_deviation(c, *base.concurrence);
      conc.max_deviation = std::max(conc.max_deviation, c_dev);
      rec["concurrence"] = c;
      rec["concurrence_deviation"] = c_dev;
    }
    records.push_back(std::move(rec));
  }

  std::vector<Check> checks = {trace_formula, non_negative, il, spectral};
  if (state.n() == 2) checks.push_back(conc);
  return finish(std::move(report), std::move(records), checks);
}

RunReport cmd_oracle(const ExperimentConfig& cfg, json report) {
  const int n = effective_qubits(cfg);
  if (n < 1 || n > 6) throw ArgumentError("oracle: --n must lie in 1..6");
  Check oracle{"trace_formula", 0.0, cfg.tol.oracle};
  std::vector<json> records;
  for (int t = 0; t < cfg.trials; ++t) {
    Rng rng(sub_seed(cfg.seed, static_cast<std::uint64_t>(t)));
    const StateKind kind = (t % 2 == 0) ? StateKind::Pure : StateKind::Mixed;
    const bool rescaled = (t / 2) % 2 == 1;
    QubitState s = random_state(n, kind, rng);
    double scale = 1.0;
    if (rescaled) {
      std::uniform_real_distribution<double> log_scale(std::log(0.1), std::log(10.0));
      scale = std::exp(log_scale(rng));
      s = QubitState::trusted(n, s.rho() * scale);
    }
    const double subset = linear_mutual_info_subsets(s);
    const double trace = linear_mutual_info_trace(s);
    const double dev = std::abs(subset - trace) / std::max(1.0, std::abs(trace));
    oracle.max_deviation = std::max(oracle.max_deviation, dev);
    records.push_back({{"trial", t},
                       {"kind", kind == StateKind::Pure ? "pure" : "mixed"},
                       {"scale", scale},
                       {"i_l_subset", subset},
                       {"i_l_trace", trace},
                       {"deviation", dev}});
  }
  return finish(std::move(report), std::move(records), {oracle});
}

RunReport cmd_metric(const ExperimentConfig& cfg, json report) {
  const LorentzMatrix4 table = pauli_correlation_table();
  report["pauli_correlation_table"] = to_json(table);
  Check table_check{"pauli_table", table.max_abs_diff(LorentzMatrix4::metric()), cfg.tol.table};

  Check bilinear{"correlator_vs_polarized_determinant", 0.0, cfg.tol.metric};
  std::vector<json> records;
  {
    Rng rng(sub_seed(cfg.seed, 0));
    for (int t = 0; t < cfg.trials; ++t) {
      const ComplexMatrix o1 = random_hermitian2(rng);
      const ComplexMatrix o2 = random_hermitian2(rng);
      const double c = singlet_correlation(o1, o2);
      const double p = polarized_determinant(o1, o2);
      const double dev = scaled_deviation(c, p);
      bilinear.max_deviation = std::max(bilinear.max_deviation, dev);
      records.push_back({{"trial", t}, {"correlation", c}, {"polarized_determinant", p}, {"deviation", dev}});
    }
  }

  Check lorentz{"symmetry_random_sl2c", 0.0, cfg.tol.symmetry};
  for (int t = 0; t < cfg.trials; ++t) {
    const SL2C lam = random_sl2c(sub_seed(cfg.seed, 2 * static_cast<std::uint64_t>(t) + 1), cfg.max_rapidity);
    lorentz.max_deviation = std::max(
        lorentz.max_deviation,
        correlator_symmetry_check(HermMap::conjugation(lam), 4, sub_seed(cfg.seed, 2 * static_cast<std::uint64_t>(t) + 2)));
  }
  std::vector<Check> checks = {table_check, bilinear, lorentz};

  const std::uint64_t probe_seed = sub_seed(cfg.seed, 1u << 20);
  const int probe_trials = std::max(cfg.trials, 1);
  if (cfg.boost) {
    const SL2C lam = boost_z(*cfg.boost);
    const double direct = correlator_symmetry_check(HermMap::conjugation(lam), probe_trials, probe_seed);
    const double pauli = correlator_symmetry_check(HermMap::raw(spin_hom(lam)), probe_trials, probe_seed);
    checks.push_back({"symmetry_boost_z", std::max(direct, pauli), cfg.tol.symmetry});
  }
  if (cfg.rotation) {
    const SL2C lam = rotation_z(*cfg.rotation);
    const double direct = correlator_symmetry_check(HermMap::conjugation(lam), probe_trials, probe_seed);
    const double pauli = correlator_symmetry_check(HermMap::raw(spin_hom(lam)), probe_trials, probe_seed);
    checks.push_back({"symmetry_rotation_z", std::max(direct, pauli), cfg.tol.symmetry});
  }
  if (cfg.parity) {
    checks.push_back({"symmetry_parity", correlator_symmetry_check(HermMap::parity(), probe_trials, probe_seed),
                      cfg.tol.symmetry});
  }
  return finish(std::move(report), std::move(records), checks);
}

RunReport cmd_twirl(const ExperimentConfig& cfg, json report) {
  const ComplexMatrix o1 = parse_observable(cfg.o1);
  const ComplexMatrix o2 = parse_observable(cfg.o2);
  const TwirlEstimate est = haar_twirl_mc(o1, o2, cfg.samples, cfg.seed);
  report["twirl"] = to_json(est);
  report["twirl"]["mean"] = matrix_to_json(est.mean);
  report["twirl"]["expected"] = matrix_to_json(est.expected);
  RunReport out = finish(std::move(report), {},
                         {{"twirl_within_5_sigma", est.max_abs_deviation,
                           kTwirlSigmas * est.std_error + kTwirlRoundoff}});
  return out;
}

RunReport cmd_boost(const ExperimentConfig& cfg, json report) {
  const QubitState state = load_state(cfg, "basis0");
  std::vector<SL2C> factors;
  if (cfg.random_action) {
    Rng rng(sub_seed(cfg.seed, 1));
    factors = LocalAction::random(state.n(), rng, cfg.max_rapidity).factors();
  } else {
    const SL2C lam = rotation_z(cfg.theta) * boost_z(cfg.rapidity);
    factors.assign(static_cast<std::size_t>(state.n()), lam);
  }
  const LocalAction action(factors);
  const QubitState moved = apply_local(state, action);

  const double sl_before = linear_entropy(state);
  const double sl_after = linear_entropy(moved);
  report["state_before"] = state_to_json(state);
  report["state_after"] = state_to_json(moved);
  report["linear_entropy_before"] = sl_before;
  report["linear_entropy_after"] = sl_after;
  report["trace_before"] = state.trace();
  report["trace_after"] = moved.trace();

  std::vector<Check> checks;
  if (state.n() == 1) {
    checks.push_back({"linear_entropy_preserved", scaled_deviation(sl_before, sl_after), cfg.tol.entropy});
  } else {
    const double before = linear_mutual_info_trace(state);
    const double after = linear_mutual_info_trace(moved);
    report["i_l_before"] = before;
    report["i_l_after"] = after;
    checks.push_back({"i_l_preserved", scaled_deviation(before, after), cfg.tol.invariance});
  }
  return finish(std::move(report), {}, checks);
}

std::string csv_cell(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "";
  return v.dump();
}

}  // namespace

std::string command_name(Command c) {
  switch (c) {
    case Command::Invariants: return "invariants";
    case Command::Oracle: return "oracle";
    case Command::Metric: return "metric";
    case Command::Twirl: return "twirl";
    case Command::Boost: return "boost";
  }
  return "unknown";
}

json config_to_json(const ExperimentConfig& cfg) {
  auto opt = [](const auto& v) { return v ? json(*v) : json(nullptr); };
  json j;
  j["command"] = command_name(cfg.command);
  j["n"] = effective_qubits(cfg);
  j["trials"] = cfg.trials;
  j["seed"] = cfg.seed;
  j["max_rapidity"] = cfg.max_rapidity;
  j["tolerances"] = {{"invariance", cfg.tol.invariance}, {"oracle", cfg.tol.oracle},
                     {"metric", cfg.tol.metric},         {"table", cfg.tol.table},
                     {"symmetry", cfg.tol.symmetry},     {"entropy", cfg.tol.entropy}};
  j["input"] = opt(cfg.input_path);
  j["preset"] = opt(cfg.preset);
  j["random"] = opt(cfg.random_kind);
  j["output"] = opt(cfg.output_path);
  j["csv"] = opt(cfg.csv_path);
  j["boost"] = opt(cfg.boost);
  j["rotation"] = opt(cfg.rotation);
  j["parity"] = cfg.parity;
  j["o1"] = cfg.o1;
  j["o2"] = cfg.o2;
  j["samples"] = cfg.samples;
  j["rapidity"] = cfg.rapidity;
  j["theta"] = cfg.theta;
  j["random_action"] = cfg.random_action;
  return j;
}

ComplexMatrix parse_observable(const std::string& text) {
  if (text == "I" || text == "1") return pauli(0);
  if (text == "X") return pauli(1);
  if (text == "Y") return pauli(2);
  if (text == "Z") return pauli(3);
  std::vector<double> coords;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      coords.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw ArgumentError("observable: cannot parse '" + text + "'");
    }
  }
  if (coords.size() != 4) throw ArgumentError("observable: expected a Pauli letter or t,x,y,z");
  return herm_from_vector({coords[0], coords[1], coords[2], coords[3]});
}

RunReport run(const ExperimentConfig& cfg) {
  if (cfg.trials < 1) throw ArgumentError("--trials must be at least 1");
  const auto start = std::chrono::steady_clock::now();
  json report;
  report["command"] = command_name(cfg.command);
  report["config"] = config_to_json(cfg);
  report["seed_split"] = kSeedSplitRule;

  RunReport out;
  switch (cfg.command) {
    case Command::Invariants: out = cmd_invariants(cfg, std::move(report)); break;
    case Command::Oracle: out = cmd_oracle(cfg, std::move(report)); break;
    case Command::Metric: out = cmd_metric(cfg, std::move(report)); break;
    case Command::Twirl: out = cmd_twirl(cfg, std::move(report)); break;
    case Command::Boost: out = cmd_boost(cfg, std::move(report)); break;
  }
  const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
  out.report["wall_time_s"] = elapsed.count();
  return out;
}

std::string records_to_csv(const std::vector<json>& records) {
  std::ostringstream csv;
  if (records.empty()) return "";
  std::vector<std::string> columns;
  for (const auto& [key, value] : records.front().items()) columns.push_back(key);
  for (std::size_t i = 0; i < columns.size(); ++i) csv << (i ? "," : "") << columns[i];
  csv << '\n';
  for (const auto& rec : records) {
    for (std::size_t i = 0; i < columns.size(); ++i) {
      csv << (i ? "," : "") << (rec.contains(columns[i]) ? csv_cell(rec.at(columns[i])) : "");
    }
    csv << '\n';
  }
  return csv.str();
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Lorentz-invariant quantities of multi-qubit states"};
  app.require_subcommand(1);
  ExperimentConfig cfg;

  auto common = [&cfg](CLI::App* sub) {
    sub->add_option("--seed", cfg.seed, "master seed");
    sub->add_option("--trials", cfg.trials, "number of trials");
    sub->add_option("--output", cfg.output_path, "write the JSON report here instead of stdout");
    sub->add_option("--csv", cfg.csv_path, "write per-trial records as CSV");
  };
  auto state_source = [&cfg](CLI::App* sub) {
    sub->add_option("--n", cfg.n, "qubit count for presets and random states");
    sub->add_option("--input", cfg.input_path, "state JSON file");
    sub->add_option("--preset", cfg.preset, "singlet, ghz4, wstate4, singlets2, maximally_mixed1, basis0");
    sub->add_option("--random", cfg.random_kind, "pure or mixed");
    sub->add_option("--max-rapidity", cfg.max_rapidity, "conditioning clamp for random SL(2,C)");
  };

  CLI::App* inv = app.add_subcommand("invariants", "W-matrix invariants and their local-SL(2,C) invariance");
  common(inv);
  state_source(inv);
  inv->add_option("--tol", cfg.tol.invariance, "invariance tolerance (relative)");
  inv->add_option("--tol-oracle", cfg.tol.oracle, "trace-formula tolerance (relative)");

  CLI::App* ora = app.add_subcommand("oracle", "subset-sum I_L against Tr(W) on random states");
  common(ora);
  ora->add_option("--n", cfg.n, "qubit count (1..6)");
  ora->add_option("--tol", cfg.tol.oracle, "tolerance (relative)");

  CLI::App* met = app.add_subcommand("metric", "singlet correlator as the Minkowski metric");
  common(met);
  met->add_option("--boost", cfg.boost, "also check a z-boost of this rapidity");
  met->add_option("--rotation", cfg.rotation, "also check a z-rotation by this angle");
  met->add_flag("--parity", cfg.parity, "also check spatial parity");
  met->add_option("--max-rapidity", cfg.max_rapidity, "conditioning clamp for random SL(2,C)");
  met->add_option("--tol", cfg.tol.metric, "correlator vs polarized determinant tolerance");
  met->add_option("--tol-symmetry", cfg.tol.symmetry, "symmetry tolerance");

  CLI::App* twi = app.add_subcommand("twirl", "Monte Carlo Haar twirl of o1 (x) o2");
  common(twi);
  twi->add_option("--o1", cfg.o1, "Pauli letter or t,x,y,z");
  twi->add_option("--o2", cfg.o2, "Pauli letter or t,x,y,z");
  twi->add_option("--samples", cfg.samples, "Haar samples (>= 1000)");

  CLI::App* bst = app.add_subcommand("boost", "apply a local SL(2,C) action to a state");
  common(bst);
  state_source(bst);
  bst->add_option("--rapidity", cfg.rapidity, "z-boost rapidity applied to every qubit");
  bst->add_option("--theta", cfg.theta, "z-rotation angle applied after the boost");
  bst->add_flag("--random-action", cfg.random_action, "draw an independent random factor per qubit");
  bst->add_option("--tol", cfg.tol.entropy, "S_L preservation tolerance (relative)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  if (inv->parsed()) cfg.command = Command::Invariants;
  if (ora->parsed()) cfg.command = Command::Oracle;
  if (met->parsed()) cfg.command = Command::Metric;
  if (twi->parsed()) cfg.command = Command::Twirl;
  if (bst->parsed()) cfg.command = Command::Boost;

  RunReport result;
  try {
    result = run(cfg);
  } catch (const std::logic_error& e) {
    // ArgumentError, ContractError, SizeError, RangeError, PositivityError
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const json::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  const std::string text = result.report.dump(2) + "\n";
  if (cfg.output_path) {
    std::ofstream file(*cfg.output_path);
    if (!file) {
      err << "error: cannot write " << *cfg.output_path << '\n';
      return 2;
    }
    file << text;
  } else {
    out << text;
  }
  if (cfg.csv_path) {
    std::ofstream file(*cfg.csv_path);
    if (!file) {
      err << "error: cannot write " << *cfg.csv_path << '\n';
      return 2;
    }
    file << records_to_csv(result.records);
  }
  return result.pass ? 0 : 1;
}

}  // namespace lqi::cli
