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

#ifndef SEMION_HAMILTONIAN_HPP
#define SEMION_HAMILTONIAN_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "json.hpp"
#include "semion/errors.hpp"
#include "semion/lattice.hpp"
#include "semion/operators.hpp"
#include "semion/pauli.hpp"

namespace semion {

struct Couplings {
  double jq = 1.0;
  double jp = 1.0;
  double u = 1.0;
};

struct Term {
  double coefficient = 0.0;
  PauliString op;
  std::string label;
};

struct HamiltonianTerms {
  Representation rep = Representation::honeycomb_spin;
  int n_sites = 0;
  Couplings couplings;
  std::vector<Term> terms;

  void add(double coefficient, PauliString op, std::string label) {
    if (op.n_sites() != n_sites) throw DimensionError("HamiltonianTerms: site count mismatch");
    if (!is_hermitian(op)) throw ArgumentError("HamiltonianTerms: non-Hermitian term " + label);
    terms.push_back({coefficient, std::move(op), std::move(label)});
  }

  bool all_commute() const {
    for (std::size_t a = 0; a < terms.size(); ++a) {
      for (std::size_t b = a + 1; b < terms.size(); ++b) {
        if (!commutes(terms[a].op, terms[b].op)) return false;
      }
    }
    return true;
  }

  /// Every matrix element is real (each term has an even phase exponent).
  bool is_real() const {
    return std::all_of(terms.begin(), terms.end(),
                       [](const Term& t) { return (t.op.phase_exp() & 1) == 0; });
  }
};

/// -J_q sum_P W_P - J_p sum_P W~_P - U sum_i Z_{i_b} Z_{i_w}.
inline HamiltonianTerms build_spin_hamiltonian(const HoneycombLayout& layout, Couplings c) {
  HamiltonianTerms h;
  h.rep = Representation::honeycomb_spin;
  h.n_sites = layout.n_sites();
  h.couplings = c;
  const auto& plaqs = layout.plaquettes();
  for (std::size_t k = 0; k < plaqs.size(); ++k) {
    h.add(-c.jq, plaquette_W(layout, plaqs[k]), "W" + std::to_string(k));
  }
  for (std::size_t k = 0; k < plaqs.size(); ++k) {
    h.add(-c.jp, plaquette_Wtilde(layout, plaqs[k]), "Wt" + std::to_string(k));
  }
  for (int i = 0; i < layout.n_square(); ++i) {
    h.add(-c.u, link_zz(layout, i), "ZZ" + std::to_string(i));
  }
  return h;
}

/// Ising form on the device register with sigma_z = 2n - 1 per device:
/// -J_q sum Z^a_i Z^a_j - J_p sum Z^b_i Z^b_j + U sum Z^a_i Z^b_i.
inline HamiltonianTerms build_device_hamiltonian(const HoneycombLayout& layout, Couplings c) {
  HamiltonianTerms h;
  h.rep = Representation::device;
  h.n_sites = 2 * layout.n_square();
  h.couplings = c;
  const int n = h.n_sites;
  auto zz = [n](int p, int q) {
    return PauliString::single(n, p, 'Z') * PauliString::single(n, q, 'Z');
  };
  for (const Bond& b : layout.bonds()) {
    h.add(-c.jq, zz(device_qubit(b.left, false), device_qubit(b.right, false)),
          "a" + std::to_string(b.left) + "-" + std::to_string(b.right));
  }
  for (const Bond& b : layout.bonds()) {
    h.add(-c.jp, zz(device_qubit(b.left, true), device_qubit(b.right, true)),
          "b" + std::to_string(b.left) + "-" + std::to_string(b.right));
  }
  for (int i = 0; i < layout.n_square(); ++i) {
    h.add(c.u, zz(device_qubit(i, false), device_qubit(i, true)), "ab" + std::to_string(i));
  }
  return h;
}

/// Energy of the two-component fermion model on occupation bitstrings.
/// Bit 2i is n_{up,i}, bit 2i+1 is n_{down,i}.
class FermionOracle {
 public:
  static constexpr int kMaxEnumerationSquares = 12;

  FermionOracle(const HoneycombLayout& layout, Couplings c)
      : n_square_(layout.n_square()), bonds_(layout.bonds()), c_(c) {}

  int n_bits() const { return 2 * n_square_; }

  double energy(Mask bits) const {
    auto s = [bits](int bit) { return ((bits >> bit) & 1U) ? 1.0 : -1.0; };
    double e = 0.0;
    for (const Bond& b : bonds_) {
      e -= c_.jq * s(2 * b.left) * s(2 * b.right);
      e -= c_.jp * s(2 * b.left + 1) * s(2 * b.right + 1);
    }
    for (int i = 0; i < n_square_; ++i) e += c_.u * s(2 * i) * s(2 * i + 1);
    return e;
  }

  /// Bitstring text, character k is bit k ('0' or '1').
  double energy(std::string_view occupations) const {
    if (static_cast<int>(occupations.size()) != n_bits()) {
      throw DimensionError("fermion_energy: expected " + std::to_string(n_bits()) +
                           " occupations, got " + std::to_string(occupations.size()));
    }
    Mask bits = 0;
    for (std::size_t k = 0; k < occupations.size(); ++k) {
      if (occupations[k] == '1') {
        bits |= Mask{1} << k;
      } else if (occupations[k] != '0') {
        throw ArgumentError("fermion_energy: occupations must be '0' or '1'");
      }
    }
    return energy(bits);
  }

  /// Sorted energies of all 2^(2N) bitstrings.
  std::vector<double> all_energies() const {
    if (n_square_ > kMaxEnumerationSquares) {
      throw CapacityError("FermionOracle: enumeration limited to 12 square sites");
    }
    const Mask dim = Mask{1} << n_bits();
    std::vector<double> out(static_cast<std::size_t>(dim));
    for (Mask b = 0; b < dim; ++b) out[static_cast<std::size_t>(b)] = energy(b);
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  int n_square_;
  std::vector<Bond> bonds_;
  Couplings c_;
};

inline double fermion_energy(const FermionOracle& oracle, std::string_view occupations) {
  return oracle.energy(occupations);
}

/// Ground-level degeneracy predicted by ferromagnetic chains: in every chain
/// the up pattern and the down pattern are each uniform, and among those four
/// candidates the on-site term picks its minimisers. Requires J_q, J_p > 0.
inline std::uint64_t ferromagnetic_ground_count(const HoneycombLayout& layout, Couplings c) {
  if (!(c.jq > 0.0 && c.jp > 0.0)) {
    throw ArgumentError("ferromagnetic_ground_count: needs J_q > 0 and J_p > 0");
  }
  std::uint64_t count = 1;
  for (const auto& chain : layout.chains()) {
    const double len = static_cast<double>(chain.size());
    double best = 0.0;
    std::uint64_t ways = 0;
    for (int up = -1; up <= 1; up += 2) {
      for (int down = -1; down <= 1; down += 2) {
        const double e = c.u * len * up * down;
        if (ways == 0 || e < best - 1e-12) {
          best = e;
          ways = 1;
        } else if (std::abs(e - best) <= 1e-12) {
          ++ways;
        }
      }
    }
    count *= ways;
  }
  return count;
}

/// Number of values within tol of the smallest one.
inline std::size_t ground_degeneracy(std::span<const double> sorted_values, double tol = 1e-8) {
  if (sorted_values.empty()) return 0;
  return static_cast<std::size_t>(std::count_if(
      sorted_values.begin(), sorted_values.end(),
      [&](double v) { return v - sorted_values.front() <= tol; }));
}

/// out = H * in, matrix-free.
inline void apply_hamiltonian(const HamiltonianTerms& h, std::span<const cplx> in,
                              std::span<cplx> out) {
  const std::size_t dim = std::size_t{1} << h.n_sites;
  if (in.size() != dim || out.size() != dim) {
    throw DimensionError("apply_hamiltonian: vector length mismatch");
  }
  std::fill(out.begin(), out.end(), cplx{});
  for (const Term& t : h.terms) {
    const cplx base = t.coefficient * i_pow(t.op.phase_exp());
    const Mask x = t.op.x_mask();
    const Mask z = t.op.z_mask();
    for (Mask b = 0; b < dim; ++b) {
      out[b ^ x] += parity(z & b) ? -base * in[b] : base * in[b];
    }
  }
}

inline Eigen::MatrixXcd to_dense(const HamiltonianTerms& h, int dense_limit = kDefaultDenseLimit) {
  if (h.n_sites > dense_limit) {
    throw CapacityError("to_dense: " + std::to_string(h.n_sites) +
                        " sites exceeds dense limit " + std::to_string(dense_limit));
  }
  const Eigen::Index dim = Eigen::Index{1} << h.n_sites;
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  for (const Term& t : h.terms) {
    for (Mask b = 0; b < static_cast<Mask>(dim); ++b) {
      m(static_cast<Eigen::Index>(b ^ t.op.x_mask()), static_cast<Eigen::Index>(b)) +=
          t.coefficient * basis_action(t.op, b);
    }
  }
  return m;
}

namespace detail {

/// Diagonal terms that commute with the whole Hamiltonian; their eigenvalues
/// label invariant blocks of the computational basis.
inline std::vector<Mask> diagonal_symmetries(const HamiltonianTerms& h) {
  std::vector<Mask> out;
  for (const Term& t : h.terms) {
    if (t.op.x_mask() != 0 || t.op.z_mask() == 0) continue;
    const bool central = std::all_of(h.terms.begin(), h.terms.end(),
                                     [&](const Term& u) { return commutes(t.op, u.op); });
    if (central && std::find(out.begin(), out.end(), t.op.z_mask()) == out.end()) {
      out.push_back(t.op.z_mask());
    }
  }
  return out;
}

template <class Matrix>
void fill_block(const HamiltonianTerms& h, const std::vector<Mask>& states,
                const std::map<Mask, Eigen::Index>& local, Matrix& m) {
  using Scalar = typename Matrix::Scalar;
  for (std::size_t col = 0; col < states.size(); ++col) {
    const Mask b = states[col];
    for (const Term& t : h.terms) {
      const cplx v = t.coefficient * basis_action(t.op, b);
      const Eigen::Index row = local.at(b ^ t.op.x_mask());
      if constexpr (std::is_same_v<Scalar, double>) {
        m(row, static_cast<Eigen::Index>(col)) += v.real();
      } else {
        m(row, static_cast<Eigen::Index>(col)) += v;
      }
    }
  }
}

}  // namespace detail

/// All eigenvalues, ascending, by dense diagonalisation. The basis is split
/// into blocks labelled by central diagonal terms before diagonalising.
inline std::vector<double> dense_spectrum(const HamiltonianTerms& h,
                                          int dense_limit = kDefaultDenseLimit) {
  if (h.n_sites > dense_limit) {
    throw CapacityError("spectrum: " + std::to_string(h.n_sites) +
                        " sites exceeds dense limit " + std::to_string(dense_limit));
  }
  const Mask dim = Mask{1} << h.n_sites;
  const std::vector<Mask> syms = detail::diagonal_symmetries(h);
  std::map<std::vector<bool>, std::vector<Mask>> blocks;
  for (Mask b = 0; b < dim; ++b) {
    std::vector<bool> key(syms.size());
    for (std::size_t k = 0; k < syms.size(); ++k) key[k] = parity(syms[k] & b) != 0;
    blocks[key].push_back(b);
  }
  std::vector<double> values;
  values.reserve(static_cast<std::size_t>(dim));
  const bool real = h.is_real();
  for (const auto& [key, states] : blocks) {
    std::map<Mask, Eigen::Index> local;
    for (std::size_t k = 0; k < states.size(); ++k) local[states[k]] = static_cast<Eigen::Index>(k);
    const auto bdim = static_cast<Eigen::Index>(states.size());
    if (real) {
      Eigen::MatrixXd m = Eigen::MatrixXd::Zero(bdim, bdim);
      detail::fill_block(h, states, local, m);
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m, Eigen::EigenvaluesOnly);
      for (Eigen::Index k = 0; k < bdim; ++k) values.push_back(es.eigenvalues()(k));
    } else {
      Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(bdim, bdim);
      detail::fill_block(h, states, local, m);
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m, Eigen::EigenvaluesOnly);
      for (Eigen::Index k = 0; k < bdim; ++k) values.push_back(es.eigenvalues()(k));
    }
  }
  std::sort(values.begin(), values.end());
  return values;
}

struct LanczosOptions {
  int max_iterations = 400;
  double tolerance = 1e-8;
  std::uint64_t seed = 12345;
  std::size_t max_dimension = std::size_t{1} << 24;
};

/// Lowest `count` distinct eigenvalues by Lanczos with full
/// reorthogonalisation. A single Krylov space cannot resolve multiplicities,
/// so degenerate levels appear once.
inline std::vector<double> lanczos_lowest(const HamiltonianTerms& h, int count,
                                          LanczosOptions opt = {}) {
  const std::size_t dim = std::size_t{1} << h.n_sites;
  if (dim > opt.max_dimension) throw CapacityError("lanczos: state dimension over limit");
  std::mt19937_64 rng(opt.seed);
  std::normal_distribution<double> normal;
  std::vector<Eigen::VectorXcd> basis;
  Eigen::VectorXcd v(static_cast<Eigen::Index>(dim));
  for (auto& a : v) a = {normal(rng), normal(rng)};
  v.normalize();
  std::vector<double> alpha;
  std::vector<double> beta;
  double scale = 0.0;
  Eigen::VectorXcd w(static_cast<Eigen::Index>(dim));
  const int max_it = static_cast<int>(std::min<std::size_t>(dim, static_cast<std::size_t>(opt.max_iterations)));
  for (int it = 0; it < max_it; ++it) {
    basis.push_back(v);
    apply_hamiltonian(h, {v.data(), dim}, {w.data(), dim});
    const double a = v.dot(w).real();
    alpha.push_back(a);
    for (int pass = 0; pass < 2; ++pass) {
      for (const auto& q : basis) w -= q.dot(w) * q;
    }
    const double b = w.norm();
    scale = std::max({scale, std::abs(a), b});
    const bool breakdown = b <= 1e-9 * scale;

    const auto m = static_cast<Eigen::Index>(alpha.size());
    Eigen::MatrixXd t = Eigen::MatrixXd::Zero(m, m);
    for (Eigen::Index k = 0; k < m; ++k) {
      t(k, k) = alpha[static_cast<std::size_t>(k)];
      if (k + 1 < m) t(k, k + 1) = t(k + 1, k) = beta[static_cast<std::size_t>(k)];
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(t);
    // merge repeated copies of degenerate levels
    const double merge = std::max(1e-7, 100.0 * opt.tolerance) * std::max(1.0, scale);
    std::vector<double> out;
    bool converged = true;
    for (Eigen::Index k = 0; k < m && static_cast<int>(out.size()) < count; ++k) {
      const double e = es.eigenvalues()(k);
      if (!out.empty() && e - out.back() <= merge) continue;
      if (!breakdown && std::abs(b * es.eigenvectors()(m - 1, k)) > opt.tolerance) {
        converged = false;
        break;
      }
      out.push_back(e);
    }
    if (breakdown || (converged && static_cast<int>(out.size()) == count)) return out;
    beta.push_back(b);
    v = w / b;
  }
  throw ConvergenceError("lanczos: lowest " + std::to_string(count) +
                         " eigenvalues not converged within " + std::to_string(max_it) +
                         " iterations");
}

struct SpectrumOptions {
  int dense_limit = kDefaultDenseLimit;
  LanczosOptions lanczos;
};

/// Ascending eigenvalues. count = nullopt asks for the full spectrum (dense
/// only); otherwise the lowest `count`, from the dense path when it fits and
/// from Lanczos (distinct values) beyond it.
inline std::vector<double> spectrum(const HamiltonianTerms& h, std::optional<int> count = std::nullopt,
                                    SpectrumOptions opt = {}) {
  if (!count || h.n_sites <= opt.dense_limit) {
    std::vector<double> all = dense_spectrum(h, opt.dense_limit);
    if (count && static_cast<std::size_t>(*count) < all.size()) {
      all.resize(static_cast<std::size_t>(*count));
    }
    return all;
  }
  return lanczos_lowest(h, *count, opt.lanczos);
}

inline nlohmann::json to_json(const HamiltonianTerms& h) {
  nlohmann::json terms = nlohmann::json::array();
  for (const Term& t : h.terms) {
    terms.push_back({{"label", t.label}, {"coefficient", t.coefficient}, {"operator", to_string(t.op)}});
  }
  return {{"representation", to_string(h.rep)},
          {"n_sites", h.n_sites},
          {"couplings", {{"J_q", h.couplings.jq}, {"J_p", h.couplings.jp}, {"U", h.couplings.u}}},
          {"terms", terms}};
}

inline HamiltonianTerms hamiltonian_from_json(const nlohmann::json& j) {
  HamiltonianTerms h;
  const std::string rep = j.at("representation").get<std::string>();
  if (rep == "honeycomb") {
    h.rep = Representation::honeycomb_spin;
  } else if (rep == "device") {
    h.rep = Representation::device;
  } else {
    throw ArgumentError("hamiltonian: unknown representation " + rep);
  }
  h.n_sites = j.at("n_sites").get<int>();
  const auto& c = j.at("couplings");
  h.couplings = {c.at("J_q").get<double>(), c.at("J_p").get<double>(), c.at("U").get<double>()};
  for (const auto& t : j.at("terms")) {
    h.add(t.at("coefficient").get<double>(), parse_pauli(t.at("operator").get<std::string>()),
          t.at("label").get<std::string>());
  }
  return h;
}

}  // namespace semion

#endif  // SEMION_HAMILTONIAN_HPP
