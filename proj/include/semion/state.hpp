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

#ifndef SEMION_STATE_HPP
#define SEMION_STATE_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"
#include "semion/errors.hpp"
#include "semion/hamiltonian.hpp"
#include "semion/lattice.hpp"
#include "semion/operators.hpp"
#include "semion/pauli.hpp"

namespace semion {

inline constexpr std::size_t kDefaultStateCapacity = std::size_t{1} << 24;
inline constexpr int kDefaultCavityDim = 2;

/// Amplitudes over (cavity level) x (qubit register). Index is
/// n_c * 2^n_qubits + qubit bits.
class StateVector {
 public:
  StateVector(int n_qubits, int cavity_dim = 1,
              std::size_t capacity = kDefaultStateCapacity)
      : n_qubits_(n_qubits), cavity_dim_(cavity_dim) {
    if (n_qubits < 1 || n_qubits > 40) throw ArgumentError("StateVector: bad qubit count");
    if (cavity_dim < 1) throw ArgumentError("StateVector: cavity_dim must be >= 1");
    const std::size_t dim = static_cast<std::size_t>(cavity_dim) << n_qubits;
    if (dim > capacity) {
      throw CapacityError("StateVector: " + std::to_string(dim) +
                          " amplitudes exceeds capacity " + std::to_string(capacity));
    }
    amp_.assign(dim, cplx{});
  }

  static StateVector basis(int n_qubits, Mask bits, int cavity_level = 0, int cavity_dim = 1) {
    StateVector s(n_qubits, cavity_dim);
    if (cavity_level < 0 || cavity_level >= cavity_dim) {
      throw ArgumentError("StateVector::basis: cavity level out of range");
    }
    s.amp_.at(s.index(cavity_level, bits)) = 1.0;
    return s;
  }

  /// Cavity state sum_n c_n |n> tensored with a qubit-only state.
  static StateVector with_cavity(const StateVector& qubits, std::span<const cplx> cavity) {
    if (qubits.cavity_dim() != 1) throw DimensionError("with_cavity: input already has a cavity");
    StateVector s(qubits.n_qubits(), static_cast<int>(cavity.size()));
    for (std::size_t n = 0; n < cavity.size(); ++n) {
      for (std::size_t b = 0; b < qubits.block_size(); ++b) {
        s.amp_[n * qubits.block_size() + b] = cavity[n] * qubits.amp_[b];
      }
    }
    return s;
  }

  int n_qubits() const { return n_qubits_; }
  int cavity_dim() const { return cavity_dim_; }
  std::size_t block_size() const { return std::size_t{1} << n_qubits_; }
  std::size_t dim() const { return amp_.size(); }
  std::size_t index(int cavity_level, Mask bits) const {
    return static_cast<std::size_t>(cavity_level) * block_size() + static_cast<std::size_t>(bits);
  }

  std::span<cplx> amplitudes() { return amp_; }
  std::span<const cplx> amplitudes() const { return amp_; }
  std::span<cplx> block(int cavity_level) {
    return std::span<cplx>(amp_).subspan(static_cast<std::size_t>(cavity_level) * block_size(), block_size());
  }
  std::span<const cplx> block(int cavity_level) const {
    return std::span<const cplx>(amp_).subspan(static_cast<std::size_t>(cavity_level) * block_size(),
                                               block_size());
  }
  cplx& operator[](std::size_t k) { return amp_[k]; }
  const cplx& operator[](std::size_t k) const { return amp_[k]; }

  double norm() const {
    double s = 0.0;
    for (const cplx& a : amp_) s += std::norm(a);
    return std::sqrt(s);
  }

  /// Returns the norm before normalising.
  double normalize() {
    const double n = norm();
    if (n == 0.0) throw ArgumentError("StateVector: cannot normalise the zero vector");
    for (cplx& a : amp_) a /= n;
    return n;
  }

  StateVector& operator+=(const StateVector& o) {
    check_same(o);
    for (std::size_t k = 0; k < amp_.size(); ++k) amp_[k] += o.amp_[k];
    return *this;
  }
  StateVector& operator*=(cplx s) {
    for (cplx& a : amp_) a *= s;
    return *this;
  }

  void check_same(const StateVector& o) const {
    if (n_qubits_ != o.n_qubits_ || cavity_dim_ != o.cavity_dim_) {
      throw DimensionError("StateVector: dimensions differ");
    }
  }

 private:
  int n_qubits_;
  int cavity_dim_;
  std::vector<cplx> amp_;
};

/// P acting on the qubit register; the cavity factor is untouched.
inline StateVector apply_to_state(const PauliString& p, const StateVector& v) {
  if (p.n_sites() != v.n_qubits()) {
    throw DimensionError("apply_to_state: operator has " + std::to_string(p.n_sites()) +
                         " sites, state has " + std::to_string(v.n_qubits()) + " qubits");
  }
  StateVector out(v.n_qubits(), v.cavity_dim());
  for (int n = 0; n < v.cavity_dim(); ++n) apply(p, v.block(n), out.block(n));
  return out;
}

inline cplx overlap(const StateVector& u, const StateVector& v) {
  u.check_same(v);
  cplx s{};
  for (std::size_t k = 0; k < u.dim(); ++k) s += std::conj(u[k]) * v[k];
  return s;
}

inline cplx expectation(const StateVector& v, const PauliString& p) {
  return overlap(v, apply_to_state(p, v));
}

/// Real expectation of a Hermitian operator; throws if the imaginary part is
/// above 1e-12 (relative to the squared norm).
inline double real_expectation(const StateVector& v, const PauliString& p) {
  if (!is_hermitian(p)) throw ArgumentError("real_expectation: operator is not Hermitian");
  const cplx e = expectation(v, p);
  const double scale = std::max(1.0, overlap(v, v).real());
  if (std::abs(e.imag()) > 1e-12 * scale) {
    throw ConvergenceError("real_expectation: imaginary part " + std::to_string(e.imag()));
  }
  return e.real();
}

inline StateVector apply_hamiltonian(const HamiltonianTerms& h, const StateVector& v) {
  if (h.n_sites != v.n_qubits()) throw DimensionError("apply_hamiltonian: size mismatch");
  StateVector out(v.n_qubits(), v.cavity_dim());
  for (int n = 0; n < v.cavity_dim(); ++n) apply_hamiltonian(h, v.block(n), out.block(n));
  return out;
}

struct EnergyStats {
  double energy = 0.0;
  double variance = 0.0;
};

inline EnergyStats energy_stats(const HamiltonianTerms& h, const StateVector& v) {
  const StateVector hv = apply_hamiltonian(h, v);
  const double norm2 = overlap(v, v).real();
  const double e = overlap(v, hv).real() / norm2;
  const double e2 = overlap(hv, hv).real() / norm2;
  return {e, e2 - e * e};
}

/// |phi> with every honeycomb S^z = +1, i.e. all qubit bits 0.
inline StateVector reference_state(const HoneycombLayout& layout) {
  return StateVector::basis(layout.n_sites(), 0);
}

/// v <- (1 + P) v, then renormalised. Throws if the projection vanishes.
inline void project_plus(StateVector& v, const PauliString& p) {
  StateVector pv = apply_to_state(p, v);
  pv += v;
  if (pv.norm() < 1e-12) throw ArgumentError("projection onto +1 eigenspace vanished");
  pv.normalize();
  v = std::move(pv);
}

/// Makes the largest-magnitude amplitude (lowest index on ties) real positive.
inline void fix_global_phase(StateVector& v) {
  std::size_t best = 0;
  double best_mag = -1.0;
  for (std::size_t k = 0; k < v.dim(); ++k) {
    const double m = std::abs(v[k]);
    if (m > best_mag + 1e-12) {
      best_mag = m;
      best = k;
    }
  }
  if (best_mag <= 0.0) return;
  v *= std::conj(v[best]) / best_mag;
}

/// Normalised prod_P (1 + W_P)(1 + W~_P) |phi>.
inline StateVector project_ground(const HoneycombLayout& layout) {
  StateVector v = reference_state(layout);
  for (const Plaquette& p : layout.plaquettes()) {
    project_plus(v, plaquette_W(layout, p));
    project_plus(v, plaquette_Wtilde(layout, p));
  }
  fix_global_phase(v);
  return v;
}

/// Debug dump: one (index, re, im) row per nonzero amplitude.
inline nlohmann::json snapshot(const StateVector& v, double cutoff = 1e-14) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t k = 0; k < v.dim(); ++k) {
    if (std::abs(v[k]) > cutoff) rows.push_back({k, v[k].real(), v[k].imag()});
  }
  return {{"n_qubits", v.n_qubits()}, {"cavity_dim", v.cavity_dim()}, {"amplitudes", rows}};
}

}  // namespace semion

#endif  // SEMION_STATE_HPP
