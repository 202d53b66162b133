// Copyright 2026 The semion Authors - All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SEMION_EXPERIMENTS_HPP
#define SEMION_EXPERIMENTS_HPP

#include <cmath>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "semion/anyon_lab.hpp"
#include "semion/circuit.hpp"
#include "semion/errors.hpp"
#include "semion/hamiltonian.hpp"
#include "semion/lattice.hpp"
#include "semion/state.hpp"

namespace semion::experiments {

using nlohmann::json;

struct RunOptions {
  int dense_limit = kDefaultDenseLimit;
  std::uint64_t seed = 12345;
};

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<json>> rows;
};

struct RunResult {
  json report;
  bool pass = true;
  Table table;
};

inline void check_keys(const json& j, std::initializer_list<const char*> allowed, const std::string& where) {
  if (!j.is_object()) throw ArgumentError(where + ": expected an object");
  const std::set<std::string> ok(allowed.begin(), allowed.end());
  for (const auto& [key, value] : j.items()) {
    if (!ok.count(key)) throw ArgumentError(where + ": unknown key '" + key + "'");
  }
}

template <class T>
T get_or(const json& j, const char* key, T fallback) {
  if (!j.contains(key)) return fallback;
  try {
    return j.at(key).get<T>();
  } catch (const json::exception&) {
    throw ArgumentError(std::string("config: bad value for '") + key + "'");
  }
}

template <class T>
T get_req(const json& j, const char* key) {
  if (!j.contains(key)) throw ArgumentError(std::string("config: missing key '") + key + "'");
  return get_or<T>(j, key, T{});
}

inline HoneycombLayout layout_of(const json& cfg) {
  return build_layout(get_req<int>(cfg, "rows"), get_req<int>(cfg, "cols"));
}

inline Couplings couplings_of(const json& cfg) {
  if (!cfg.contains("couplings")) return {};
  const json& c = cfg.at("couplings");
  check_keys(c, {"J_q", "J_p", "U"}, "couplings");
  return {get_or(c, "J_q", 1.0), get_or(c, "J_p", 1.0), get_or(c, "U", 1.0)};
}

inline json couplings_json(const Couplings& c) { return {{"J_q", c.jq}, {"J_p", c.jp}, {"U", c.u}}; }

inline Color color_of(const std::string& s) {
  if (s == "black") return Color::black;
  if (s == "white") return Color::white;
  throw ArgumentError("config: color must be 'black' or 'white'");
}

inline Family family_of(const std::string& s) {
  if (s == "W") return Family::w;
  if (s == "Wtilde") return Family::wtilde;
  throw ArgumentError("config: family must be 'W' or 'Wtilde'");
}

inline cplx complex_of(const json& j, const char* key, cplx fallback) {
  if (!j.contains(key)) return fallback;
  const json& v = j.at(key);
  if (!v.is_array() || v.size() != 2) throw ArgumentError(std::string("config: '") + key + "' must be [re, im]");
  return {v[0].get<double>(), v[1].get<double>()};
}

inline Mask sites_of(const json& j, const char* key, int n) {
  Mask m = 0;
  for (const auto& s : get_req<std::vector<int>>(j, key)) {
    if (s < 0 || s >= n) throw ArgumentError(std::string("config: site out of range in '") + key + "'");
    m |= Mask{1} << s;
  }
  return m;
}

/// Sorted values grouped into (value, multiplicity) levels.
inline std::vector<std::pair<double, int>> levels(const std::vector<double>& sorted, double tol = 1e-8) {
  std::vector<std::pair<double, int>> out;
  for (double v : sorted) {
    if (!out.empty() && v - out.back().first <= tol) {
      ++out.back().second;
    } else {
      out.emplace_back(v, 1);
    }
  }
  return out;
}

inline double max_deviation(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.size() != b.size()) return std::numeric_limits<double>::infinity();
  double m = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) m = std::max(m, std::abs(a[k] - b[k]));
  return m;
}

// ---------------------------------------------------------------------------

inline RunResult run_lattice(const json& cfg, const RunOptions& = {}) {
  check_keys(cfg, {"rows", "cols"}, "lattice");
  const HoneycombLayout layout = layout_of(cfg);
  RunResult r;
  json lj = to_json(layout);
  const int rows = layout.rows();
  const int cols = layout.cols();
  const bool counts_ok = layout.n_sites() == 2 * rows * cols &&
                         static_cast<int>(layout.plaquettes().size()) == rows * (cols - 1) &&
                         static_cast<int>(layout.chains().size()) == rows;
  bool round_trip = true;
  try {
    layout_from_json(lj);
  } catch (const ArgumentError&) {
    round_trip = false;
  }
  r.pass = counts_ok && round_trip;
  r.report = {{"command", "lattice"},
              {"layout", lj},
              {"n_plaquettes", layout.plaquettes().size()},
              {"n_complete_plaquettes", layout.n_complete_plaquettes()},
              {"verdicts", {{"counts", counts_ok}, {"round_trip", round_trip}}},
              {"pass", r.pass}};
  r.table.columns = {"id", "square", "color", "line", "x", "jw_rank"};
  for (int s = 0; s < layout.n_sites(); ++s) {
    const HoneycombSite hs = HoneycombLayout::site(s);
    r.table.rows.push_back({s, hs.square, to_string(hs.color), layout.zigzag_line(s), layout.site_x(s),
                            layout.jw_rank(s)});
  }
  return r;
}

inline RunResult run_spectrum(const json& cfg, const RunOptions& opt = {}) {
  check_keys(cfg, {"rows", "cols", "couplings", "random_trials", "tolerance"}, "spectrum");
  const HoneycombLayout layout = layout_of(cfg);
  const double tol = get_or(cfg, "tolerance", 1e-10);
  const int trials = get_or(cfg, "random_trials", 0);
  if (trials < 0) throw ArgumentError("spectrum: random_trials must be >= 0");
  if (layout.n_sites() > opt.dense_limit) {
    throw CapacityError("spectrum: " + std::to_string(layout.n_sites()) + " sites exceeds dense limit " +
                        std::to_string(opt.dense_limit));
  }
  std::vector<Couplings> sets{couplings_of(cfg)};
  std::mt19937_64 rng(opt.seed);
  std::uniform_real_distribution<double> d(-2.0, 2.0);
  for (int t = 0; t < trials; ++t) sets.push_back({d(rng), d(rng), d(rng)});

  RunResult r;
  r.table.columns = {"set", "level", "energy", "degeneracy"};
  json runs = json::array();
  for (std::size_t k = 0; k < sets.size(); ++k) {
    const auto spin = dense_spectrum(build_spin_hamiltonian(layout, sets[k]), opt.dense_limit);
    const auto ferm = FermionOracle(layout, sets[k]).all_energies();
    const double dev = max_deviation(spin, ferm);
    const bool ok = dev < tol;
    r.pass = r.pass && ok;
    json lv = json::array();
    const auto ls = levels(spin);
    for (std::size_t l = 0; l < ls.size(); ++l) {
      lv.push_back({{"energy", ls[l].first}, {"degeneracy", ls[l].second}});
      r.table.rows.push_back({k, l, ls[l].first, ls[l].second});
    }
    runs.push_back({{"couplings", couplings_json(sets[k])},
                    {"levels", lv},
                    {"max_deviation", dev},
                    {"equivalent", ok}});
  }
  r.report = {{"command", "spectrum"},
              {"rows", layout.rows()},
              {"cols", layout.cols()},
              {"dimension", std::uint64_t{1} << layout.n_sites()},
              {"tolerance", tol},
              {"runs", runs},
              {"pass", r.pass}};
  return r;
}

inline RunResult run_ground(const json& cfg, const RunOptions& opt = {}) {
  check_keys(cfg, {"rows", "cols", "couplings"}, "ground");
  const HoneycombLayout layout = layout_of(cfg);
  const Couplings c = couplings_of(cfg);
  const StateVector g = project_ground(layout);
  const VortexMap vm = vortex_map(g, layout);
  const auto h = build_spin_hamiltonian(layout, c);
  const EnergyStats st = energy_stats(h, g);

  double stab_dev = 0.0;
  for (const auto& [w, wt] : vm.values) stab_dev = std::max({stab_dev, std::abs(w - 1.0), std::abs(wt - 1.0)});
  json verdicts = {{"stabilized", stab_dev <= 1e-12}, {"variance", st.variance < 1e-10}};
  json report = {{"command", "ground"},
                 {"rows", layout.rows()},
                 {"cols", layout.cols()},
                 {"couplings", couplings_json(c)},
                 {"energy", st.energy},
                 {"variance", st.variance},
                 {"max_stabilizer_deviation", stab_dev}};

  const bool ferro = c.jq > 0.0 && c.jp > 0.0;
  std::optional<std::size_t> oracle_deg;
  if (layout.n_square() <= FermionOracle::kMaxEnumerationSquares) {
    const auto ferm = FermionOracle(layout, c).all_energies();
    oracle_deg = ground_degeneracy(ferm);
    report["oracle_degeneracy"] = *oracle_deg;
  }
  if (ferro) {
    const auto count = ferromagnetic_ground_count(layout, c);
    report["ferromagnetic_count"] = count;
    if (oracle_deg) verdicts["degeneracy_oracle_vs_chains"] = *oracle_deg == count;
  }
  if (layout.n_sites() <= opt.dense_limit) {
    const auto spin = dense_spectrum(h, opt.dense_limit);
    report["min_eigenvalue"] = spin.front();
    report["ed_degeneracy"] = ground_degeneracy(spin);
    verdicts["energy"] = std::abs(st.energy - spin.front()) <= 1e-10;
    if (oracle_deg) verdicts["degeneracy_ed_vs_oracle"] = ground_degeneracy(spin) == *oracle_deg;
  } else {
    report["min_eigenvalue"] = nullptr;
    report["note"] = "exact diagonalisation skipped: above dense limit";
  }
  RunResult r;
  for (const auto& [k, v] : verdicts.items()) r.pass = r.pass && v.get<bool>();
  report["verdicts"] = verdicts;
  report["pass"] = r.pass;
  r.report = report;
  r.table.columns = {"plaquette", "row", "W", "Wtilde"};
  for (std::size_t k = 0; k < vm.values.size(); ++k) {
    r.table.rows.push_back({k, layout.plaquettes()[k].row, vm.values[k].first, vm.values[k].second});
  }
  return r;
}

inline StringSpec string_of(const HoneycombLayout& layout, const json& s) {
  const std::string type = get_req<std::string>(s, "type");
  if (type == "sx") {
    check_keys(s, {"type", "square", "color"}, "string");
    return sx_string_spec(layout, get_req<int>(s, "square"), color_of(get_req<std::string>(s, "color")));
  }
  if (type == "sites") {
    check_keys(s, {"type", "factors"}, "string");
    std::vector<std::pair<int, char>> f;
    for (const auto& e : s.at("factors")) {
      if (!e.is_array() || e.size() != 2) throw ArgumentError("string: factors are [site, letter] pairs");
      const int site = e[0].get<int>();
      const std::string letter = e[1].get<std::string>();
      if (site < 0 || site >= layout.n_sites()) throw ArgumentError("string: site out of range");
      if (letter.size() != 1 || std::string("IXYZ").find(letter[0]) == std::string::npos) {
        throw ArgumentError("string: letter must be one of I, X, Y, Z");
      }
      f.emplace_back(site, letter[0]);
    }
    return site_string(layout.n_sites(), f);
  }
  if (type == "none") {
    check_keys(s, {"type"}, "string");
    return {Representation::honeycomb_spin, "none", PauliString::identity(layout.n_sites())};
  }
  throw ArgumentError("string: type must be 'sx', 'sites' or 'none'");
}

inline RunResult run_braid(const json& cfg, const RunOptions& opt = {}) {
  check_keys(cfg, {"rows", "cols", "string", "loops", "state_check"}, "braid");
  const HoneycombLayout layout = layout_of(cfg);
  const StringSpec crossing = string_of(layout, cfg.at("string"));
  const bool state_check = get_or(cfg, "state_check", true);
  if (state_check && layout.n_sites() > 2 * opt.dense_limit) {
    throw CapacityError("braid: state check above " + std::to_string(2 * opt.dense_limit) + " sites");
  }
  std::optional<StateVector> ground;
  if (state_check) ground = project_ground(layout);

  RunResult r;
  r.table.columns = {"loop", "family", "crossings", "operator_phase", "state_phase", "agree"};
  json loops = json::array();
  const json& lcfg = cfg.at("loops");
  if (!lcfg.is_array() || lcfg.empty()) throw ArgumentError("braid: 'loops' must be a non-empty array");
  for (std::size_t k = 0; k < lcfg.size(); ++k) {
    check_keys(lcfg[k], {"family", "region"}, "loop");
    const Family f = family_of(get_req<std::string>(lcfg[k], "family"));
    const auto region = get_req<std::vector<int>>(lcfg[k], "region");
    const StringSpec loop = transport_loop(layout, f, region);
    const int n = crossing_count(layout, other(f), region, crossing.op);
    const double expected = n % 2 == 0 ? 1.0 : -1.0;
    const double op_phase = braid_phase(loop, crossing).real();
    json entry = {{"transported", to_string(f)},
                  {"region", region},
                  {"crossings", n},
                  {"expected_phase", expected},
                  {"operator_phase", op_phase}};
    bool agree = op_phase == expected;
    json state_phase = nullptr;
    if (ground) {
      const cplx s = state_braid_phase(*ground, loop, crossing);
      state_phase = {s.real(), s.imag()};
      agree = agree && std::abs(s - expected) <= 1e-10;
    }
    entry["state_phase"] = state_phase;
    entry["agree"] = agree;
    r.pass = r.pass && agree;
    loops.push_back(entry);
    r.table.rows.push_back({k, to_string(f), n, op_phase, ground ? json(state_phase[0]) : json(nullptr), agree});
  }
  const VortexPattern pat = vortex_pattern(layout, crossing.op);
  json created = json::array();
  for (std::size_t k = 0; k < pat.w.size(); ++k) {
    if (pat.w[k]) created.push_back({{"plaquette", k}, {"family", "W"}});
    if (pat.wtilde[k]) created.push_back({{"plaquette", k}, {"family", "Wtilde"}});
  }
  r.report = {{"command", "braid"},
              {"rows", layout.rows()},
              {"cols", layout.cols()},
              {"string", {{"name", crossing.name}, {"operator", to_string(crossing.op)}}},
              {"created_vortices", created},
              {"loops", loops},
              {"pass", r.pass}};
  return r;
}

inline RunResult run_qnd(const json& cfg, const RunOptions& opt = {}) {
  check_keys(cfg, {"n_qubits", "sites", "chi", "tau", "cavity_dim", "mu", "nu", "random_states", "tolerance"},
             "qnd");
  const int n = get_req<int>(cfg, "n_qubits");
  if (n < 1 || n > opt.dense_limit) throw CapacityError("qnd: n_qubits must lie in [1, dense limit]");
  QndParams p = QndParams::canonical(get_or(cfg, "chi", 1.0), sites_of(cfg, "sites", n), n);
  if (cfg.contains("tau")) p.tau = get_req<double>(cfg, "tau");
  p.validate();
  const int cavity_dim = get_or(cfg, "cavity_dim", kDefaultCavityDim);
  if (cavity_dim < 2) throw ArgumentError("qnd: cavity_dim must be >= 2");
  const double tol = get_or(cfg, "tolerance", 1e-10);
  const cplx mu = complex_of(cfg, "mu", {1.0 / std::numbers::sqrt2, 0.0});
  const cplx nu = complex_of(cfg, "nu", {1.0 / std::numbers::sqrt2, 0.0});
  if (std::abs(std::norm(mu) + std::norm(nu) - 1.0) > 1e-12) throw ArgumentError("qnd: |mu|^2 + |nu|^2 must be 1");
  const int trials = get_or(cfg, "random_states", 20);

  const double deviation = qnd_closed_form_deviation(p);
  json verdicts = {{"closed_form", deviation < tol}};
  json report = {{"command", "qnd"},
                 {"n_qubits", n},
                 {"n_selected", p.n_selected()},
                 {"chi", p.chi},
                 {"tau", p.tau},
                 {"canonical_tau", p.is_canonical()},
                 {"closed_form_deviation", deviation}};

  std::mt19937_64 rng(opt.seed);
  std::normal_distribution<double> d;
  auto random_state = [&] {
    StateVector v(n);
    for (auto& a : v.amplitudes()) a = {d(rng), d(rng)};
    v.normalize();
    return v;
  };
  RunResult r;
  if (nu == cplx{}) {
    // vacuum preparation
    double worst = 0.0;
    for (int t = 0; t < std::max(1, trials); ++t) {
      const StateVector q = random_state();
      const ControlledString cs{mu, nu, p.sites};
      const StateVector in = cs.prepare(q, cavity_dim);
      const StateVector out = qnd_evolve(p, in);
      for (std::size_t k = 0; k < in.dim(); ++k) worst = std::max(worst, std::abs(out[k] - in[k]));
    }
    report["identity_deviation"] = worst;
    verdicts["identity"] = worst < tol;
  } else {
    r.table.columns = {"state", "coherence_real", "coherence_imag", "inferred_eigenvalue", "direct_expectation"};
    double worst = 0.0;
    json readouts = json::array();
    for (int t = 0; t < trials; ++t) {
      const StateVector q = random_state();
      const ControlledString cs{mu, nu, p.sites};
      const StateVector out = qnd_evolve(p, cs.prepare(q, cavity_dim));
      cplx rho01{};
      for (std::size_t k = 0; k < q.dim(); ++k) rho01 += out.block(0)[k] * std::conj(out.block(1)[k]);
      const cplx w = rho01 / (mu * std::conj(nu) * i_pow(p.n_selected()));
      const double direct = real_expectation(q, PauliString::uniform(n, p.sites, 'Z'));
      worst = std::max(worst, std::abs(w - direct));
      readouts.push_back({{"coherence_real", rho01.real()},
                          {"coherence_imag", rho01.imag()},
                          {"inferred_eigenvalue", w.real()},
                          {"direct_expectation", direct}});
      r.table.rows.push_back({t, rho01.real(), rho01.imag(), w.real(), direct});
    }
    report["readouts"] = readouts;
    report["max_readout_deviation"] = worst;
    verdicts["interferometry"] = worst < tol;
  }
  for (const auto& [k, v] : verdicts.items()) r.pass = r.pass && v.get<bool>();
  report["verdicts"] = verdicts;
  report["pass"] = r.pass;
  r.report = report;
  if (r.table.columns.empty()) {
    r.table.columns = {"check", "value"};
    r.table.rows.push_back({"closed_form_deviation", deviation});
    r.table.rows.push_back({"identity_deviation", report["identity_deviation"]});
  }
  return r;
}

inline RunResult run_circuit(const json& cfg, const RunOptions& opt = {}) {
  using namespace circuit;
  check_keys(cfg, {"device_a", "device_b", "C_c", "C_a", "C_b", "chain_length", "long_range_threshold",
                   "include_single_device_terms", "qnd", "jc"},
             "circuit");
  for (const char* dev : {"device_a", "device_b"}) {
    if (cfg.contains(dev)) check_keys(cfg.at(dev), {"C_g", "C_J", "E_J", "n_g"}, dev);
  }
  const DeviceNetwork net = network_from_json(cfg);
  const PairCouplings p = two_device_couplings(net);
  const ChainCouplings ch = chain_couplings(net);
  const double threshold = get_or(cfg, "long_range_threshold", 0.01);
  const LongRangeReport lr = long_range_report(net, threshold);

  RunResult r;
  r.table.columns = {"quantity", "joules", "ghz"};
  auto energy = [&](const char* name, double v) {
    r.table.rows.push_back({name, v, to_ghz(v)});
    return energy_json(v);
  };
  json pair = {{"epsilon_a", energy("epsilon_a", p.epsilon_a)},
               {"epsilon_b", energy("epsilon_b", p.epsilon_b)},
               {"delta_a", energy("delta_a", p.delta_a)},
               {"delta_b", energy("delta_b", p.delta_b)},
               {"lambda", energy("lambda", p.lambda)},
               {"E_c_a", energy("E_c_a", p.ec_a)},
               {"E_c_b", energy("E_c_b", p.ec_b)},
               {"beta", p.beta}};
  if (p.beta > 0.0) pair["lambda_over_2_beta_E_c"] = p.lambda / (2.0 * p.beta * p.ec_a);
  json chain = {{"order", "first order in beta"},
                {"lambda_a", energy("lambda_a", ch.lambda_a)},
                {"lambda_b", energy("lambda_b", ch.lambda_b)},
                {"lambda_c", energy("lambda_c", ch.lambda_c)},
                {"lattice", {{"J_q", energy_json(ch.lattice.jq)},
                             {"J_p", energy_json(ch.lattice.jp)},
                             {"U", energy_json(ch.lattice.u)}}}};
  const SingleDeviceTerms sd = single_device_terms(net, p);
  json single = {{"z_a", energy_json(sd.z_a)},
                 {"x_a", energy_json(sd.x_a)},
                 {"z_b", energy_json(sd.z_b)},
                 {"x_b", energy_json(sd.x_b)},
                 {"included", get_or(cfg, "include_single_device_terms", false)}};
  json diagnostics = json::object();
  diagnostics["coupling"] = p.lambda > 0.0 ? "pass" : "warn";
  json long_range = {{"next_nearest", energy_json(lr.next_nearest)},
                     {"ratio_to_lambda", lr.ratio},
                     {"threshold", lr.threshold}};
  if (p.beta > 0.0 && p.beta < 1.0) long_range["beta_squared"] = long_range_estimate(0, 2, p.beta);
  diagnostics["long_range"] = lr.warn ? "warn" : "pass";

  if (single["included"].get<bool>()) {
    if (2 * net.chain_length > opt.dense_limit) throw CapacityError("circuit: chain too long for the dense check");
    const double e0 = dense_spectrum(chain_device_hamiltonian(net, false), opt.dense_limit).front();
    const double e1 = dense_spectrum(chain_device_hamiltonian(net, true), opt.dense_limit).front();
    single["chain_ground_ghz"] = {{"without", e0}, {"with", e1}, {"shift", e1 - e0}};
  }

  json report = {{"command", "circuit"},
                 {"units", "joules; ghz = joules / h / 1e9"},
                 {"pair", pair},
                 {"chain", chain},
                 {"single_device_terms", single},
                 {"long_range", long_range}};

  if (cfg.contains("qnd")) {
    const json& q = cfg.at("qnd");
    check_keys(q, {"n_g", "omega_c", "delta", "g", "temperature", "detuning_ratio", "thermal_ratio"}, "qnd");
    QndInputs in;
    in.e_c = p.ec_a;
    in.n_g = get_or(q, "n_g", net.a.n_g);
    in.omega_c = get_req<double>(q, "omega_c");
    in.delta = get_req<double>(q, "delta");
    in.g = get_req<double>(q, "g");
    in.temperature = get_or(q, "temperature", 0.0);
    in.detuning_ratio = get_or(q, "detuning_ratio", 0.1);
    in.thermal_ratio = get_or(q, "thermal_ratio", 0.1);
    const QndFrequencies f = qnd_frequencies(in);
    report["qnd"] = {{"omega_01", f.omega_01},   {"omega_12", f.omega_12},     {"omega_drive", f.omega_drive},
                     {"detuning_1", f.detuning_1}, {"detuning_2", f.detuning_2}, {"chi", f.chi},
                     {"tau", f.tau},             {"units", "rad/s, s"}};
    diagnostics["small_detuning"] = f.small_detuning_ok ? "pass" : "fail";
    diagnostics["charging_regime"] = f.regime_ok ? "pass" : "fail";
    diagnostics["frequencies_positive"] = f.negative_frequency ? "fail" : "pass";
  }
  if (cfg.contains("jc")) {
    const json& jc = cfg.at("jc");
    check_keys(jc, {"n_g", "omega_c"}, "jc");
    const JcResonance res = jc_resonance(p.ec_a, get_or(jc, "n_g", net.a.n_g), get_req<double>(jc, "omega_c"));
    report["jc"] = {{"omega", res.omega}, {"omega_01", res.omega_01}, {"units", "rad/s"}};
    if (res.at_degeneracy) report["jc"]["note"] = "ancilla at the degeneracy point: omega_01 = 0, no detuned swap";
    diagnostics["jc_detuned"] = res.at_degeneracy ? "warn" : "pass";
  }
  for (const auto& [k, v] : diagnostics.items()) r.pass = r.pass && v.get<std::string>() != "fail";
  report["diagnostics"] = diagnostics;
  report["pass"] = r.pass;
  r.report = report;
  return r;
}

inline RunResult run(const std::string& command, const json& cfg, const RunOptions& opt = {}) {
  if (command == "lattice") return run_lattice(cfg, opt);
  if (command == "spectrum") return run_spectrum(cfg, opt);
  if (command == "ground") return run_ground(cfg, opt);
  if (command == "braid") return run_braid(cfg, opt);
  if (command == "qnd") return run_qnd(cfg, opt);
  if (command == "circuit") return run_circuit(cfg, opt);
  throw ArgumentError("unknown command '" + command + "'");
}

inline std::string csv_cell(const json& v) {
  if (v.is_string()) {
    const std::string s = v.get<std::string>();
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
    return q + "\"";
  }
  if (v.is_null()) return "";
  return v.dump();
}

inline std::string render_csv(const Table& t) {
  std::ostringstream out;
  for (std::size_t k = 0; k < t.columns.size(); ++k) out << (k ? "," : "") << t.columns[k];
  out << "\n";
  for (const auto& row : t.rows) {
    for (std::size_t k = 0; k < row.size(); ++k) out << (k ? "," : "") << csv_cell(row[k]);
    out << "\n";
  }
  return out.str();
}

inline std::string render_json(const RunResult& r) { return r.report.dump(2) + "\n"; }

}  // namespace semion::experiments

#endif  // SEMION_EXPERIMENTS_HPP
