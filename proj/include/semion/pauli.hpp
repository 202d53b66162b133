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

#ifndef SEMION_PAULI_HPP
#define SEMION_PAULI_HPP

// Multi-site Pauli operators in the symplectic (x|z) bitmask form.
//
// A PauliString with masks (x, z) and phase exponent p stands for
//
//     i^p * prod_j X_j^{x_j} Z_j^{z_j}
//
// with the X factor to the left of the Z factor on every site. Hence a bare
// Y on site j is x_j = z_j = 1 with one unit of phase, since Y = i X Z.
// Multiplication is then XOR on the masks plus a sign from moving the Z's of
// the left operand past the X's of the right one.
//
// Computational basis: bit b of a basis index is qubit b, and bit value 0 is
// the +1 eigenstate of Z.
//
// Site counts are limited to one 64-bit word. Wider registers would replace
// Mask by a fixed array of words; every operation below is a popcount or an
// XOR and carries over unchanged.

#include <bit>
#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "semion/errors.hpp"

namespace semion {

using cplx = std::complex<double>;
using Mask = std::uint64_t;

inline constexpr int kMaxSites = 64;
inline constexpr int kDefaultDenseLimit = 14;

/// i^k for any integer k.
inline cplx i_pow(int k) {
  switch (((k % 4) + 4) % 4) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

inline int parity(Mask m) { return std::popcount(m) & 1; }

class PauliString {
 public:
  PauliString() = default;

  /// Identity on n_sites sites.
  explicit PauliString(int n_sites) : n_(n_sites) {
    if (n_sites < 1 || n_sites > kMaxSites) {
      throw ArgumentError("PauliString: n_sites must be in [1, 64], got " +
                          std::to_string(n_sites));
    }
  }

  PauliString(int n_sites, Mask x, Mask z, int phase_exp = 0)
      : PauliString(n_sites) {
    const Mask valid = site_mask(n_sites);
    if ((x & ~valid) != 0 || (z & ~valid) != 0) {
      throw ArgumentError("PauliString: mask has bits beyond n_sites");
    }
    x_ = x;
    z_ = z;
    phase_ = ((phase_exp % 4) + 4) % 4;
  }

  static PauliString identity(int n_sites) { return PauliString(n_sites); }

  /// Single-site Pauli: letter in {I, X, Y, Z}.
  static PauliString single(int n_sites, int site, char letter) {
    PauliString p(n_sites);
    p.check_site(site);
    const Mask b = Mask{1} << site;
    switch (letter) {
      case 'I': break;
      case 'X': p.x_ = b; break;
      case 'Z': p.z_ = b; break;
      case 'Y': p.x_ = b; p.z_ = b; p.phase_ = 1; break;
      default:
        throw ArgumentError(std::string("PauliString: unknown letter '") +
                            letter + "'");
    }
    return p;
  }

  /// Product of the same letter on every site set in `sites`.
  static PauliString uniform(int n_sites, Mask sites, char letter) {
    PauliString p(n_sites);
    for (int j = 0; j < n_sites; ++j) {
      if ((sites >> j) & 1U) p = p * single(n_sites, j, letter);
    }
    return p;
  }

  static Mask site_mask(int n_sites) {
    return n_sites >= 64 ? ~Mask{0} : ((Mask{1} << n_sites) - 1);
  }

  int n_sites() const { return n_; }
  Mask x_mask() const { return x_; }
  Mask z_mask() const { return z_; }
  int phase_exp() const { return phase_; }
  Mask support() const { return x_ | z_; }
  int weight() const { return std::popcount(support()); }
  bool is_identity_up_to_phase() const { return x_ == 0 && z_ == 0; }

  /// Letter acting on one site, ignoring the global phase.
  char letter(int site) const {
    const bool xb = (x_ >> site) & 1U;
    const bool zb = (z_ >> site) & 1U;
    return xb ? (zb ? 'Y' : 'X') : (zb ? 'Z' : 'I');
  }

  /// Global phase once every site is written as I/X/Y/Z: i^k with k returned.
  int display_phase() const {
    return ((phase_ - std::popcount(x_ & z_)) % 4 + 4) % 4;
  }

  PauliString with_phase(int phase_exp) const {
    PauliString p = *this;
    p.phase_ = ((phase_exp % 4) + 4) % 4;
    return p;
  }

  /// Multiply by i^k.
  PauliString times_i_pow(int k) const { return with_phase(phase_ + k); }

  friend bool operator==(const PauliString&, const PauliString&) = default;

  friend PauliString operator*(const PauliString& p, const PauliString& q) {
    p.check_same(q, "multiply");
    PauliString r(p.n_);
    r.x_ = p.x_ ^ q.x_;
    r.z_ = p.z_ ^ q.z_;
    r.phase_ = (p.phase_ + q.phase_ + 2 * std::popcount(p.z_ & q.x_)) & 3;
    return r;
  }

  void check_same(const PauliString& q, const char* what) const {
    if (n_ != q.n_) {
      throw DimensionError(std::string("PauliString::") + what +
                           ": site counts differ (" + std::to_string(n_) +
                           " vs " + std::to_string(q.n_) + ")");
    }
  }

 private:
  void check_site(int site) const {
    if (site < 0 || site >= n_) {
      throw ArgumentError("PauliString: site " + std::to_string(site) +
                          " out of range");
    }
  }

  int n_ = 0;
  Mask x_ = 0;
  Mask z_ = 0;
  int phase_ = 0;
};

inline PauliString multiply(const PauliString& p, const PauliString& q) {
  return p * q;
}

/// Symplectic form: true iff the two operators commute.
inline bool commutes(const PauliString& p, const PauliString& q) {
  p.check_same(q, "commutes");
  return parity((p.x_mask() & q.z_mask()) ^ (p.z_mask() & q.x_mask())) == 0;
}

inline bool is_hermitian(const PauliString& p) {
  // (X^x Z^z)^dagger = (-1)^{|x&z|} X^x Z^z, so Hermiticity fixes the parity
  // of the phase exponent.
  return (p.phase_exp() & 1) == (std::popcount(p.x_mask() & p.z_mask()) & 1);
}

/// Amplitude factor of P acting on basis state b; P|b> = factor * |b ^ x>.
inline cplx basis_action(const PauliString& p, Mask b) {
  const int sign = parity(p.z_mask() & b) ? 2 : 0;
  return i_pow(p.phase_exp() + sign);
}

/// out = P * in over one register of 2^n amplitudes.
inline void apply(const PauliString& p, std::span<const cplx> in,
                  std::span<cplx> out) {
  const std::size_t dim = std::size_t{1} << p.n_sites();
  if (in.size() != dim || out.size() != dim) {
    throw DimensionError("apply: amplitude block has wrong length");
  }
  const cplx base = i_pow(p.phase_exp());
  const Mask x = p.x_mask();
  const Mask z = p.z_mask();
  for (Mask b = 0; b < dim; ++b) {
    out[b ^ x] = parity(z & b) ? -base * in[b] : base * in[b];
  }
}

inline Eigen::MatrixXcd to_matrix(const PauliString& p,
                                  int dense_limit = kDefaultDenseLimit) {
  if (p.n_sites() > dense_limit) {
    throw CapacityError("to_matrix: " + std::to_string(p.n_sites()) +
                        " sites exceeds dense limit " +
                        std::to_string(dense_limit));
  }
  const Eigen::Index dim = Eigen::Index{1} << p.n_sites();
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  for (Mask b = 0; b < static_cast<Mask>(dim); ++b) {
    m(static_cast<Eigen::Index>(b ^ p.x_mask()), static_cast<Eigen::Index>(b)) =
        basis_action(p, b);
  }
  return m;
}

/// Renders as e.g. "+i XZIIY": phase prefix then one letter per site,
/// site 0 first.
inline std::string to_string(const PauliString& p) {
  static constexpr const char* kPrefix[4] = {"+", "+i", "-", "-i"};
  std::string s = kPrefix[p.display_phase()];
  s += ' ';
  for (int j = 0; j < p.n_sites(); ++j) s += p.letter(j);
  return s;
}

inline PauliString parse_pauli(std::string_view text) {
  const auto space = text.find(' ');
  if (space == std::string_view::npos) {
    throw ArgumentError("parse_pauli: expected '<phase> <letters>'");
  }
  const std::string_view prefix = text.substr(0, space);
  const std::string_view letters = text.substr(space + 1);
  int phase = 0;
  if (prefix == "+") {
    phase = 0;
  } else if (prefix == "+i") {
    phase = 1;
  } else if (prefix == "-") {
    phase = 2;
  } else if (prefix == "-i") {
    phase = 3;
  } else {
    throw ArgumentError("parse_pauli: bad phase prefix '" +
                        std::string(prefix) + "'");
  }
  const int n = static_cast<int>(letters.size());
  PauliString p(n);
  for (int j = 0; j < n; ++j) p = p * PauliString::single(n, j, letters[j]);
  return p.times_i_pow(phase);
}

}  // namespace semion

#endif  // SEMION_PAULI_HPP
