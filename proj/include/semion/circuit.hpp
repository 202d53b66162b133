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

#ifndef SEMION_CIRCUIT_HPP
#define SEMION_CIRCUIT_HPP

// Charge-qubit circuit parameters to effective couplings. Inputs in SI
// (farads, joules, kelvin, rad/s); energies are also rendered in GHz.

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "json.hpp"
#include "semion/errors.hpp"
#include "semion/hamiltonian.hpp"

namespace semion::circuit {

// CODATA 2018 exact values.
struct Constants {
  double e = 1.602176634e-19;   // C
  double h = 6.62607015e-34;    // J s
  double k_b = 1.380649e-23;    // J / K
  double hbar() const { return h / (2.0 * std::numbers::pi); }
};

inline constexpr Constants kCodata{};

inline double to_ghz(double joules, const Constants& k = kCodata) { return joules / k.h / 1e9; }

struct Device {
  double c_g = 0.0;  // gate capacitance
  double c_j = 0.0;  // junction capacitance
  double e_j = 0.0;  // Josephson energy
  double n_g = 0.5;  // gate charge

  double c0() const { return c_g + c_j; }
};

struct DeviceNetwork {
  Device a;
  Device b;
  double c_c = 0.0;  // on-site a-b coupler
  double c_a = 0.0;  // intra-chain coupler, chain a
  double c_b = 0.0;  // intra-chain coupler, chain b
  int chain_length = 2;

  double ct_a() const { return a.c0() + c_c; }
  double ct_b() const { return b.c0() + c_c; }
  double lambda_det() const { return ct_a() * ct_b() - c_c * c_c; }

  void validate() const {
    for (const Device* d : {&a, &b}) {
      if (!(d->c_g > 0.0 && d->c_j > 0.0)) throw ArgumentError("network: C_g and C_J must be > 0");
      if (d->e_j < 0.0) throw ArgumentError("network: E_J must be >= 0");
      if (d->n_g < 0.0 || d->n_g > 1.0) throw ArgumentError("network: n_g must lie in [0, 1]");
    }
    if (!(lambda_det() > 0.0)) throw ArgumentError("network: degenerate, C_t^a C_t^b - C_c^2 <= 0");
    if (c_c < 0.0 || c_a < 0.0 || c_b < 0.0) throw ArgumentError("network: coupler capacitances must be >= 0");
    if (chain_length < 1) throw ArgumentError("network: chain_length must be >= 1");
  }

  static DeviceNetwork identical(double c_g, double c_j, double e_j, double c_c, double c_chain = 0.0,
                                 double n_g = 0.5) {
    DeviceNetwork n;
    n.a = {c_g, c_j, e_j, n_g};
    n.b = n.a;
    n.c_c = c_c;
    n.c_a = c_chain;
    n.c_b = c_chain;
    return n;
  }
};

struct PairCouplings {
  double epsilon_a = 0.0;
  double epsilon_b = 0.0;
  double delta_a = 0.0;
  double delta_b = 0.0;
  double lambda = 0.0;
  double ec_a = 0.0;
  double ec_b = 0.0;
  double beta = 0.0;  // C_c / C_0^a
};

/// Two capacitively coupled boxes reduced to their charge doublets.
inline PairCouplings two_device_couplings(const DeviceNetwork& net, const Constants& k = kCodata) {
  net.validate();
  const double e2 = k.e * k.e;
  const double det = net.lambda_det();
  PairCouplings p;
  p.epsilon_a = 2.0 * e2 * (net.ct_b() + net.c_c) / det;
  p.epsilon_b = 2.0 * e2 * (net.ct_a() + net.c_c) / det;
  p.delta_a = net.a.e_j;
  p.delta_b = net.b.e_j;
  p.lambda = e2 * net.c_c / det;
  p.ec_a = e2 / (2.0 * net.a.c0());
  p.ec_b = e2 / (2.0 * net.b.c0());
  p.beta = net.c_c / net.a.c0();
  return p;
}

struct ChainCouplings {
  double lambda_a = 0.0;
  double lambda_b = 0.0;
  double lambda_c = 0.0;
  /// Lattice couplings reproducing the chain Ising form exactly:
  /// J_q = -lambda_a, J_p = -lambda_b, U = lambda_c.
  Couplings lattice;
};

/// First order in beta, with an overall 1/C_0. Uses C_0 of chain a for both
/// chains. lambda_c equals the pair lambda at C_a = C_b = 0.
inline ChainCouplings chain_couplings(const DeviceNetwork& net, const Constants& k = kCodata) {
  net.validate();
  const double e2 = k.e * k.e;
  const double c0 = net.a.c0();
  ChainCouplings out;
  out.lambda_a = e2 * net.c_a / (c0 * (c0 + 2.0 * (net.c_c + 2.0 * net.c_a)));
  out.lambda_b = e2 * net.c_b / (c0 * (c0 + 2.0 * (net.c_c + 2.0 * net.c_b)));
  out.lambda_c = e2 * net.c_c / (c0 * (c0 + 2.0 * (net.c_c + net.c_a + net.c_b)));
  out.lattice = {-out.lambda_a, -out.lambda_b, out.lambda_c};
  return out;
}

/// beta^|i - j|.
inline double long_range_estimate(int i, int j, double beta) {
  if (!(beta > 0.0 && beta < 1.0)) throw ArgumentError("long_range_estimate: beta must lie in (0, 1)");
  return std::pow(beta, std::abs(i - j));
}

struct LongRangeReport {
  double beta = 0.0;
  double next_nearest = 0.0;  // 2 E_c beta^2, joules
  double ratio = 0.0;         // next_nearest / lambda
  double threshold = 0.01;
  bool warn = false;
};

inline LongRangeReport long_range_report(const DeviceNetwork& net, double threshold = 0.01,
                                         const Constants& k = kCodata) {
  const PairCouplings p = two_device_couplings(net, k);
  LongRangeReport r;
  r.beta = p.beta;
  r.threshold = threshold;
  r.next_nearest = p.beta == 0.0 ? 0.0 : 2.0 * p.ec_a * long_range_estimate(0, 2, p.beta);
  r.ratio = p.lambda > 0.0 ? r.next_nearest / p.lambda : 0.0;
  r.warn = r.ratio > threshold;
  return r;
}

struct QndFrequencies {
  double omega_01 = 0.0;  // rad/s
  double omega_12 = 0.0;
  double omega_drive = 0.0;
  double detuning_1 = 0.0;
  double detuning_2 = 0.0;
  double chi = 0.0;
  double tau = 0.0;
  bool small_detuning_ok = false;
  bool regime_ok = false;
  bool negative_frequency = false;
};

struct QndInputs {
  double e_c = 0.0;        // joules
  double n_g = 0.0;
  double omega_c = 0.0;    // cavity, rad/s
  double delta = 0.0;      // cavity detuning, rad/s
  double g = 0.0;          // single-photon Rabi frequency, rad/s
  double temperature = 0.0;
  double detuning_ratio = 0.1;
  double thermal_ratio = 0.1;
};

inline QndFrequencies qnd_frequencies(const QndInputs& in, const Constants& k = kCodata) {
  if (in.delta == 0.0) throw ArgumentError("qnd_frequencies: delta must be nonzero");
  QndFrequencies f;
  f.omega_12 = 2.0 * in.e_c * (3.0 - 2.0 * in.n_g) / k.hbar();
  f.omega_01 = 2.0 * in.e_c * (1.0 - 2.0 * in.n_g) / k.hbar();
  f.omega_drive = f.omega_12 + in.omega_c + in.delta;
  f.detuning_1 = f.omega_drive - f.omega_01;
  f.detuning_2 = f.omega_01 + f.omega_12 - f.omega_drive;
  f.chi = in.g * in.g / (2.0 * in.delta);
  if (f.chi == 0.0) throw ArgumentError("qnd_frequencies: g must be nonzero");
  f.tau = std::numbers::pi / (2.0 * f.chi);
  f.small_detuning_ok = f.detuning_1 != 0.0 && f.detuning_2 != 0.0 &&
                        std::abs(in.delta / f.detuning_1) < in.detuning_ratio &&
                        std::abs(in.delta / f.detuning_2) < in.detuning_ratio;
  f.regime_ok = k.k_b * in.temperature < in.thermal_ratio * in.e_c;
  f.negative_frequency = f.omega_01 < 0.0 || f.omega_12 < 0.0 || f.omega_drive < 0.0 ||
                         f.detuning_1 < 0.0 || f.detuning_2 < 0.0 || f.chi < 0.0 || f.tau < 0.0;
  return f;
}

struct JcResonance {
  double omega = 0.0;
  double omega_01 = 0.0;
  bool at_degeneracy = false;  // omega_01 == 0: no resonant swap possible
};

/// Drive frequency for the ancilla swap: omega_c + omega~_01.
inline JcResonance jc_resonance(double e_c, double n_g, double omega_c, const Constants& k = kCodata) {
  JcResonance r;
  r.omega_01 = 2.0 * e_c * (1.0 - 2.0 * n_g) / k.hbar();
  r.omega = omega_c + r.omega_01;
  r.at_degeneracy = std::abs(1.0 - 2.0 * n_g) < 1e-12;
  return r;
}

/// Single-device terms of the pair Hamiltonian, reported for sensitivity
/// studies; they are excluded from the lattice model.
struct SingleDeviceTerms {
  double z_a = 0.0;  // -epsilon^a (1 - 2 n_g^a) / 2
  double x_a = 0.0;  // -Delta^a / 2
  double z_b = 0.0;
  double x_b = 0.0;
};

inline SingleDeviceTerms single_device_terms(const DeviceNetwork& net, const PairCouplings& p) {
  return {-0.5 * p.epsilon_a * (1.0 - 2.0 * net.a.n_g), -0.5 * p.delta_a,
          -0.5 * p.epsilon_b * (1.0 - 2.0 * net.b.n_g), -0.5 * p.delta_b};
}

/// One a/b chain pair of `chain_length` devices on the device register, in
/// GHz. With `single_device` the sigma_z / sigma_x terms of every device are
/// added on top of the Ising couplings.
inline HamiltonianTerms chain_device_hamiltonian(const DeviceNetwork& net, bool single_device,
                                                 const Constants& k = kCodata) {
  const ChainCouplings ch = chain_couplings(net, k);
  if (net.chain_length < 2) throw ArgumentError("chain_device_hamiltonian: chain_length must be >= 2");
  const HoneycombLayout layout(1, net.chain_length);
  Couplings ghz{to_ghz(ch.lattice.jq, k), to_ghz(ch.lattice.jp, k), to_ghz(ch.lattice.u, k)};
  HamiltonianTerms h = build_device_hamiltonian(layout, ghz);
  if (single_device) {
    const SingleDeviceTerms t = single_device_terms(net, two_device_couplings(net, k));
    const int n = h.n_sites;
    for (int i = 0; i < layout.n_square(); ++i) {
      const std::string s = std::to_string(i);
      h.add(to_ghz(t.z_a, k), PauliString::single(n, device_qubit(i, false), 'Z'), "za" + s);
      h.add(to_ghz(t.x_a, k), PauliString::single(n, device_qubit(i, false), 'X'), "xa" + s);
      h.add(to_ghz(t.z_b, k), PauliString::single(n, device_qubit(i, true), 'Z'), "zb" + s);
      h.add(to_ghz(t.x_b, k), PauliString::single(n, device_qubit(i, true), 'X'), "xb" + s);
    }
  }
  return h;
}

inline nlohmann::json energy_json(double joules, const Constants& k = kCodata) {
  return {{"joules", joules}, {"ghz", to_ghz(joules, k)}};
}

inline DeviceNetwork network_from_json(const nlohmann::json& j) {
  auto device = [](const nlohmann::json& d) {
    return Device{d.at("C_g").get<double>(), d.at("C_J").get<double>(), d.at("E_J").get<double>(),
                  d.value("n_g", 0.5)};
  };
  DeviceNetwork n;
  n.a = device(j.at("device_a"));
  n.b = j.contains("device_b") ? device(j.at("device_b")) : n.a;
  n.c_c = j.at("C_c").get<double>();
  n.c_a = j.value("C_a", 0.0);
  n.c_b = j.value("C_b", 0.0);
  n.chain_length = j.value("chain_length", 2);
  n.validate();
  return n;
}

}  // namespace semion::circuit

#endif  // SEMION_CIRCUIT_HPP
