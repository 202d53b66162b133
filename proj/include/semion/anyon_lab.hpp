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

#ifndef SEMION_ANYON_LAB_HPP
#define SEMION_ANYON_LAB_HPP

// Excitations and protocols on top of the honeycomb register.
//
// Vortices are plaquettes where W_P or W~_P is -1. A loop that transports a
// family-F vortex around a region R is prod_{P in R} W^{other(F)}_P: it
// detects the other family inside R. Pauli strings either commute or
// anticommute, so braid phases are +1 or -1.

#include <algorithm>
#include <bit>
#include <cmath>
#include <complex>
#include <numbers>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "semion/errors.hpp"
#include "semion/lattice.hpp"
#include "semion/operators.hpp"
#include "semion/pauli.hpp"
#include "semion/state.hpp"

namespace semion {

struct StringSpec {
  Representation rep = Representation::honeycomb_spin;
  std::string name;
  PauliString op;
};

inline StringSpec sx_string_spec(const HoneycombLayout& layout, int square, Color color) {
  return {Representation::honeycomb_spin,
          "sx_string(" + std::to_string(square) + "," + to_string(color) + ")",
          sx_string(layout, square, color)};
}

/// Product of one letter per listed site, in list order.
inline StringSpec site_string(int n_sites, const std::vector<std::pair<int, char>>& factors,
                              std::string name = "sites") {
  PauliString op(n_sites);
  for (const auto& [site, letter] : factors) op = op * PauliString::single(n_sites, site, letter);
  return {Representation::honeycomb_spin, std::move(name), op};
}

/// U_z = prod_{j in sites} sigma^z_j.
inline StringSpec uz_string(int n_sites, Mask sites) {
  return {Representation::honeycomb_spin, "U_z", PauliString::uniform(n_sites, sites, 'Z')};
}

inline Mask mask_of(const std::vector<int>& sites) {
  Mask m = 0;
  for (int s : sites) m |= Mask{1} << s;
  return m;
}

/// prod_{P in region} W^F_P; region holds plaquette indices.
inline StringSpec plaquette_loop(const HoneycombLayout& layout, Family detected,
                                 const std::vector<int>& region) {
  PauliString op(layout.n_sites());
  const auto& plaqs = layout.plaquettes();
  for (int k : region) {
    if (k < 0 || k >= static_cast<int>(plaqs.size())) throw ArgumentError("loop: bad plaquette index");
    op = op * plaquette_op(layout, plaqs[static_cast<std::size_t>(k)], detected);
  }
  return {Representation::honeycomb_spin, std::string("loop[") + to_string(detected) + "]", op};
}

/// Loop moving a vortex of family `transported` around the region.
inline StringSpec transport_loop(const HoneycombLayout& layout, Family transported,
                                 const std::vector<int>& region) {
  StringSpec s = plaquette_loop(layout, other(transported), region);
  s.name = std::string("transport[") + to_string(transported) + "]";
  return s;
}

struct VortexPattern {
  std::vector<bool> w;
  std::vector<bool> wtilde;

  friend bool operator==(const VortexPattern&, const VortexPattern&) = default;

  VortexPattern operator^(const VortexPattern& o) const {
    VortexPattern r = *this;
    for (std::size_t k = 0; k < w.size(); ++k) {
      r.w[k] = w[k] != o.w[k];
      r.wtilde[k] = wtilde[k] != o.wtilde[k];
    }
    return r;
  }
  bool empty() const {
    for (std::size_t k = 0; k < w.size(); ++k) {
      if (w[k] || wtilde[k]) return false;
    }
    return true;
  }
  int count(Family f) const {
    const auto& v = f == Family::w ? w : wtilde;
    return static_cast<int>(std::count(v.begin(), v.end(), true));
  }
};

/// Plaquettes whose operators anticommute with `op`: the vortices it creates
/// from a stabilised state.
inline VortexPattern vortex_pattern(const HoneycombLayout& layout, const PauliString& op) {
  VortexPattern out;
  for (const Plaquette& p : layout.plaquettes()) {
    out.w.push_back(!commutes(op, plaquette_W(layout, p)));
    out.wtilde.push_back(!commutes(op, plaquette_Wtilde(layout, p)));
  }
  return out;
}

struct VortexMap {
  std::vector<std::pair<double, double>> values;  // (<W_P>, <W~_P>)

  /// Plaquettes with a negative expectation.
  VortexPattern pattern() const {
    VortexPattern out;
    for (const auto& [w, wt] : values) {
      out.w.push_back(w < 0.0);
      out.wtilde.push_back(wt < 0.0);
    }
    return out;
  }
  bool stabilized(double tol = 1e-10) const {
    for (const auto& [w, wt] : values) {
      if (std::abs(std::abs(w) - 1.0) > tol || std::abs(std::abs(wt) - 1.0) > tol) return false;
    }
    return true;
  }
};

inline VortexMap vortex_map(const StateVector& state, const HoneycombLayout& layout) {
  if (state.n_qubits() != layout.n_sites()) throw DimensionError("vortex_map: size mismatch");
  VortexMap m;
  for (const Plaquette& p : layout.plaquettes()) {
    m.values.emplace_back(real_expectation(state, plaquette_W(layout, p)),
                          real_expectation(state, plaquette_Wtilde(layout, p)));
  }
  return m;
}

/// s with L C = s C L, from the symplectic form.
inline cplx braid_phase(const StringSpec& loop, const StringSpec& crossing) {
  if (loop.rep != crossing.rep) throw RepresentationError("braid_phase: representations differ");
  return commutes(loop.op, crossing.op) ? cplx{1.0, 0.0} : cplx{-1.0, 0.0};
}

/// Number of family-`detected` plaquettes in the region that the string
/// anticommutes with, i.e. crossings of the loop boundary by its vortices.
inline int crossing_count(const HoneycombLayout& layout, Family detected,
                          const std::vector<int>& region, const PauliString& string) {
  int n = 0;
  for (int k : region) {
    const Plaquette& p = layout.plaquettes().at(static_cast<std::size_t>(k));
    if (!commutes(string, plaquette_op(layout, p, detected))) ++n;
  }
  return n;
}

/// <C psi | L C psi> for a state psi stabilised by the loop: the interference
/// between the braided and unbraided evolutions.
inline cplx state_braid_phase(const StateVector& stabilized, const StringSpec& loop,
                              const StringSpec& crossing) {
  const StateVector created = apply_to_state(crossing.op, stabilized);
  const StateVector braided = apply_to_state(loop.op, created);
  return overlap(created, braided) / overlap(created, created);
}

enum class FusionOutcome { vacuum, w_vortex, wtilde_vortex, mixed };

inline const char* to_string(FusionOutcome f) {
  switch (f) {
    case FusionOutcome::vacuum: return "vacuum";
    case FusionOutcome::w_vortex: return "W";
    case FusionOutcome::wtilde_vortex: return "Wtilde";
    default: return "W+Wtilde";
  }
}

struct FusionReport {
  FusionOutcome outcome = FusionOutcome::vacuum;
  PauliString residual;        // s2 * s1
  bool residual_trivial = false;  // identity up to phase
  VortexPattern first;
  VortexPattern second;
  VortexPattern composite;
  bool z2_additive = false;    // composite == first ^ second on states
};

/// Applies s1 then s2 to a stabilised state and classifies the surviving
/// vortex pattern against the original map.
inline FusionReport fuse_check(const HoneycombLayout& layout, const StateVector& state,
                               const StringSpec& s1, const StringSpec& s2) {
  if (s1.rep != s2.rep || s1.op.n_sites() != s2.op.n_sites()) {
    throw ArgumentError("fuse_check: incompatible strings");
  }
  const VortexPattern base = vortex_map(state, layout).pattern();
  const StateVector a = apply_to_state(s1.op, state);
  const StateVector b = apply_to_state(s2.op, state);
  const StateVector ab = apply_to_state(s2.op, a);
  FusionReport r;
  r.first = vortex_map(a, layout).pattern() ^ base;
  r.second = vortex_map(b, layout).pattern() ^ base;
  r.composite = vortex_map(ab, layout).pattern() ^ base;
  r.residual = s2.op * s1.op;
  r.residual_trivial = r.residual.is_identity_up_to_phase();
  r.z2_additive = r.composite == (r.first ^ r.second);
  const bool has_w = r.composite.count(Family::w) > 0;
  const bool has_wt = r.composite.count(Family::wtilde) > 0;
  r.outcome = !has_w && !has_wt ? FusionOutcome::vacuum
              : has_w && has_wt ? FusionOutcome::mixed
              : has_w           ? FusionOutcome::w_vortex
                                : FusionOutcome::wtilde_vortex;
  return r;
}

// ---------------------------------------------------------------------------
// Cavity QND string protocol

struct QndParams {
  double chi = 1.0;   // g^2 / (2 delta), angular frequency
  double tau = std::numbers::pi / 2.0;
  Mask sites = 0;     // selected qubits
  int n_qubits = 1;

  static QndParams canonical(double chi, Mask sites, int n_qubits) {
    if (chi == 0.0) throw ArgumentError("QndParams: chi must be nonzero");
    return {chi, std::numbers::pi / (2.0 * chi), sites, n_qubits};
  }
  int n_selected() const { return std::popcount(sites); }
  bool is_canonical(double tol = 1e-12) const {
    return std::abs(chi * tau - std::numbers::pi / 2.0) <= tol;
  }
  void validate() const {
    if (n_selected() < 1) throw ArgumentError("QndParams: at least one site must be selected");
    if ((sites & ~PauliString::site_mask(n_qubits)) != 0) {
      throw ArgumentError("QndParams: selected site outside the register");
    }
  }
};

/// Closed form at tau = pi / (2 chi): I for n_c = 0 and (-i)^N prod sigma^z
/// for n_c = 1.
inline PauliString qnd_unitary(const QndParams& params, int n_c) {
  params.validate();
  if (!params.is_canonical()) {
    throw ArgumentError("qnd_unitary: tau != pi / (2 chi); closed form does not apply");
  }
  if (n_c == 0) return PauliString::identity(params.n_qubits);
  if (n_c == 1) {
    return PauliString::uniform(params.n_qubits, params.sites, 'Z').times_i_pow(-params.n_selected());
  }
  throw ArgumentError("qnd_unitary: closed form covers n_c in {0, 1}");
}

/// exp(-i chi tau n_c sum_j sigma^z_j) applied to every cavity level; H_QND is
/// diagonal in the product basis so each amplitude picks up one phase.
inline StateVector qnd_evolve(const QndParams& params, const StateVector& v) {
  params.validate();
  if (params.n_qubits != v.n_qubits()) throw DimensionError("qnd_evolve: size mismatch");
  StateVector out = v;
  const int n_sel = params.n_selected();
  for (int n = 0; n < v.cavity_dim(); ++n) {
    auto blk = out.block(n);
    for (Mask b = 0; b < blk.size(); ++b) {
      const int down = std::popcount(b & params.sites);
      const double zsum = static_cast<double>(n_sel - 2 * down);
      blk[b] *= std::exp(cplx{0.0, -params.chi * params.tau * n * zsum});
    }
  }
  return out;
}

/// Max over both cavity sectors of |exact evolution - closed form|, which is
/// the operator norm since both sides are diagonal. At a non-canonical tau the
/// closed form is still the reference and the deviation is reported.
inline double qnd_closed_form_deviation(const QndParams& params) {
  params.validate();
  const int n_sel = params.n_selected();
  double worst = 0.0;
  const cplx closed_phase = i_pow(-n_sel);
  for (int n = 0; n <= 1; ++n) {
    for (Mask b = 0; b < (Mask{1} << params.n_qubits); ++b) {
      const int down = std::popcount(b & params.sites);
      const double zsum = static_cast<double>(n_sel - 2 * down);
      const cplx exact = std::exp(cplx{0.0, -params.chi * params.tau * n * zsum});
      const cplx closed = n == 0 ? cplx{1.0, 0.0} : closed_phase * ((down & 1) ? -1.0 : 1.0);
      worst = std::max(worst, std::abs(exact - closed));
    }
  }
  return worst;
}

/// U_cs = mu |0><0| (x) I + nu |1><1| (x) U_z, with (mu, nu) the prepared
/// cavity amplitudes; the gate itself is the canonical QND evolution.
struct ControlledString {
  cplx mu{1.0 / std::numbers::sqrt2, 0.0};
  cplx nu{1.0 / std::numbers::sqrt2, 0.0};
  Mask sites = 0;

  StateVector prepare(const StateVector& qubits, int cavity_dim = kDefaultCavityDim) const {
    if (cavity_dim < 2) throw ArgumentError("controlled_string: cavity_dim must be >= 2");
    std::vector<cplx> cav(static_cast<std::size_t>(cavity_dim), cplx{});
    cav[0] = mu;
    cav[1] = nu;
    return StateVector::with_cavity(qubits, cav);
  }

  StateVector apply(const StateVector& v) const {
    if (v.cavity_dim() < 2) throw ArgumentError("controlled_string: cavity_dim must be >= 2");
    return qnd_evolve(QndParams::canonical(1.0, sites, v.n_qubits()), v);
  }
};

inline ControlledString controlled_string(cplx mu, cplx nu, Mask sites) {
  return {mu, nu, sites};
}

enum class StringAxis { x, y };

/// U_x = H U_z H and U_y = (R H) U_z (R H)^dagger with R = exp(-i pi/4 sigma^z),
/// applied as Clifford maps on the Pauli string.
inline PauliString string_basis_change(StringAxis axis, int n_sites, Mask sites) {
  const PauliString uz = PauliString::uniform(n_sites, sites, 'Z');
  // H Z H = X on every selected site: the z bits move to x bits.
  const PauliString ux(n_sites, uz.z_mask(), 0, uz.phase_exp());
  if (axis == StringAxis::x) return ux;
  // R X R^dagger = Y = i X Z on every selected site.
  return PauliString(n_sites, ux.x_mask(), ux.x_mask(), ux.phase_exp() + std::popcount(sites));
}

/// Dense route: conjugates prod sigma^z by the single-qubit rotations.
inline Eigen::MatrixXcd string_basis_change_dense(StringAxis axis, int n_sites, Mask sites) {
  const double r2 = 1.0 / std::numbers::sqrt2;
  Eigen::Matrix2cd h;
  h << r2, r2, r2, -r2;
  Eigen::Matrix2cd r;
  r << std::exp(cplx{0.0, -std::numbers::pi / 4}), 0.0, 0.0, std::exp(cplx{0.0, std::numbers::pi / 4});
  Eigen::Matrix2cd z;
  z << 1.0, 0.0, 0.0, -1.0;
  const Eigen::Matrix2cd rot = axis == StringAxis::x ? Eigen::Matrix2cd(h) : Eigen::Matrix2cd(r * h);
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Identity(1, 1);
  // Qubit 0 is the least significant bit, so it is the rightmost factor.
  for (int j = n_sites - 1; j >= 0; --j) {
    const Eigen::Matrix2cd f = ((sites >> j) & 1U) ? Eigen::Matrix2cd(rot * z * rot.adjoint())
                                                   : Eigen::Matrix2cd::Identity();
    Eigen::MatrixXcd next(out.rows() * 2, out.cols() * 2);
    for (Eigen::Index a = 0; a < out.rows(); ++a) {
      for (Eigen::Index b = 0; b < out.cols(); ++b) {
        next.block(2 * a, 2 * b, 2, 2) = out(a, b) * f;
      }
    }
    out = std::move(next);
  }
  return out;
}

struct ReadoutRecord {
  cplx coherence;             // Tr[rho |1><0|] = rho_01 of the cavity
  double inferred_eigenvalue = 0.0;
  double inferred_imag = 0.0;   // should vanish for Hermitian U_z
  double direct_expectation = 0.0;
};

/// Cavity-coherence interferometry: prepare (mu|0> + nu|1>) (x) state, run the
/// controlled string, read rho_01 = mu conj(nu) i^N <U_z>, invert for <U_z>.
inline ReadoutRecord interferometry_run(const StateVector& qubits, Mask sites,
                                        int cavity_dim = kDefaultCavityDim,
                                        cplx mu = {1.0 / std::numbers::sqrt2, 0.0},
                                        cplx nu = {1.0 / std::numbers::sqrt2, 0.0}) {
  if (cavity_dim < 2) throw ArgumentError("interferometry_run: needs a cavity (cavity_dim >= 2)");
  if (qubits.cavity_dim() != 1) throw DimensionError("interferometry_run: expects a qubit-only state");
  const ControlledString cs{mu, nu, sites};
  const StateVector out = cs.apply(cs.prepare(qubits, cavity_dim));
  cplx rho01{};
  const auto b0 = out.block(0);
  const auto b1 = out.block(1);
  for (std::size_t k = 0; k < b0.size(); ++k) rho01 += b0[k] * std::conj(b1[k]);
  ReadoutRecord rec;
  rec.coherence = rho01;
  const int n_sel = std::popcount(sites);
  const cplx w = rho01 / (mu * std::conj(nu) * i_pow(n_sel));
  rec.inferred_eigenvalue = w.real() / overlap(qubits, qubits).real();
  rec.inferred_imag = w.imag();
  rec.direct_expectation = real_expectation(qubits, PauliString::uniform(qubits.n_qubits(), sites, 'Z')) /
                           overlap(qubits, qubits).real();
  return rec;
}

/// Exact evolution under H_JC = Omega (a sigma^+ + a^dagger sigma^-) on a
/// truncated cavity (x) one ancilla qubit; ancilla bit 1 is the excited state.
inline StateVector jc_swap(const StateVector& v, double omega, double t) {
  if (v.n_qubits() != 1) throw DimensionError("jc_swap: expects a single ancilla qubit");
  if (v.cavity_dim() < 2) throw ArgumentError("jc_swap: cavity_dim must be >= 2");
  const int d = v.cavity_dim();
  const Eigen::Index dim = 2 * d;
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(dim, dim);
  // a sigma^+ : |n, 0> -> sqrt(n) |n-1, 1>
  for (int n = 1; n < d; ++n) {
    const Eigen::Index from = 2 * n;
    const Eigen::Index to = 2 * (n - 1) + 1;
    h(to, from) = omega * std::sqrt(static_cast<double>(n));
    h(from, to) = h(to, from);
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(h);
  const Eigen::VectorXcd phases =
      (es.eigenvalues().cast<cplx>() * cplx{0.0, -t}).array().exp().matrix();
  const Eigen::MatrixXcd vecs = es.eigenvectors().cast<cplx>();
  const Eigen::MatrixXcd u = vecs * phases.asDiagonal() * vecs.adjoint();
  Eigen::VectorXcd in(dim);
  for (Eigen::Index k = 0; k < dim; ++k) in(k) = v[static_cast<std::size_t>(k)];
  const Eigen::VectorXcd res = u * in;
  StateVector out(1, d);
  for (Eigen::Index k = 0; k < dim; ++k) out[static_cast<std::size_t>(k)] = res(k);
  return out;
}

}  // namespace semion

#endif  // SEMION_ANYON_LAB_HPP
