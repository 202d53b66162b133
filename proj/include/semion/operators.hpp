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

#ifndef SEMION_OPERATORS_HPP
#define SEMION_OPERATORS_HPP

// Model operators as Pauli strings.
//
// Honeycomb-spin representation: one qubit per honeycomb site (id 2i + color).
// Majoranas follow the Jordan-Wigner assignment
//   psi_w = Y_w T, psi_b = X_b T, chi_w = X_w T, chi_b = Y_b T,
// with T the product of Z over every site of lower rank.
//
// Device representation: two qubits per square site, (i, a) = 2i and
// (i, b) = 2i + 1. On-site S^z maps to X^a X^b (black) and Y^a Y^b (white);
// the S^x head is Y^b (black) and X^a (white).

#include <string>
#include <string_view>
#include <vector>

#include "semion/errors.hpp"
#include "semion/lattice.hpp"
#include "semion/pauli.hpp"

namespace semion {

enum class Representation { honeycomb_spin, device };
enum class Species { psi, chi };
enum class Family { w, wtilde };

inline const char* to_string(Representation r) {
  return r == Representation::honeycomb_spin ? "honeycomb" : "device";
}
inline const char* to_string(Family f) { return f == Family::w ? "W" : "Wtilde"; }
inline Family other(Family f) { return f == Family::w ? Family::wtilde : Family::w; }

/// Pauli string tagged with the register it lives on.
struct Operator {
  Representation rep = Representation::honeycomb_spin;
  PauliString pauli;

  friend bool operator==(const Operator&, const Operator&) = default;
};

inline void check_same_rep(const Operator& a, const Operator& b) {
  if (a.rep != b.rep) {
    throw RepresentationError(std::string("operators from different representations: ") +
                              to_string(a.rep) + " vs " + to_string(b.rep));
  }
}

inline Operator operator*(const Operator& a, const Operator& b) {
  check_same_rep(a, b);
  return {a.rep, a.pauli * b.pauli};
}

inline bool commutes(const Operator& a, const Operator& b) {
  check_same_rep(a, b);
  return commutes(a.pauli, b.pauli);
}

/// "honeycomb: +i XZIY" / "device: - XXII".
inline std::string to_string(const Operator& op) {
  return std::string(to_string(op.rep)) + ": " + to_string(op.pauli);
}

inline Operator parse_operator(std::string_view text) {
  const auto colon = text.find(": ");
  if (colon == std::string_view::npos) {
    throw ArgumentError("parse_operator: expected '<rep>: <pauli>'");
  }
  const std::string_view tag = text.substr(0, colon);
  Representation rep;
  if (tag == "honeycomb") {
    rep = Representation::honeycomb_spin;
  } else if (tag == "device") {
    rep = Representation::device;
  } else {
    throw ArgumentError("parse_operator: unknown representation '" + std::string(tag) + "'");
  }
  return {rep, parse_pauli(text.substr(colon + 2))};
}

/// Z on every honeycomb site ranked strictly below `site`.
inline Mask jw_tail(const HoneycombLayout& layout, int site) {
  const int rank = layout.jw_rank(site);
  Mask tail = 0;
  for (int k = 0; k < rank; ++k) tail |= Mask{1} << layout.site_at_rank(k);
  return tail;
}

inline PauliString majorana(const HoneycombLayout& layout, int square, Species species,
                            Color color) {
  layout.check_square(square);
  const int n = layout.n_sites();
  const int site = HoneycombLayout::site_id(square, color);
  const bool y_head = (species == Species::psi) == (color == Color::white);
  return PauliString::single(n, site, y_head ? 'Y' : 'X') *
         PauliString(n, 0, jw_tail(layout, site));
}

namespace detail {

inline PauliString plaquette_product(const HoneycombLayout& layout, const Plaquette& p,
                                     const char (&letters)[6]) {
  const int n = layout.n_sites();
  if (!p.sites[0] || !p.sites[1] || !p.sites[3] || !p.sites[4]) {
    throw ArgumentError("plaquette: link labels 1, 2, 4, 5 are required");
  }
  PauliString out(n);
  Mask seen = 0;
  for (int label = 0; label < 6; ++label) {
    if (!p.sites[static_cast<std::size_t>(label)]) continue;
    const int s = *p.sites[static_cast<std::size_t>(label)];
    layout.check_site(s);
    if ((seen >> s) & 1U) throw ArgumentError("plaquette: repeated site");
    seen |= Mask{1} << s;
    out = out * PauliString::single(n, s, letters[label]);
  }
  return out;
}

}  // namespace detail

/// W_P = Y1 X2 Z3 Y4 X5 Z6 over the labels present.
inline PauliString plaquette_W(const HoneycombLayout& layout, const Plaquette& p) {
  static constexpr char kLetters[6] = {'Y', 'X', 'Z', 'Y', 'X', 'Z'};
  return detail::plaquette_product(layout, p, kLetters);
}

/// W~_P = X1 Y2 Z3 X4 Y5 Z6 over the labels present.
inline PauliString plaquette_Wtilde(const HoneycombLayout& layout, const Plaquette& p) {
  static constexpr char kLetters[6] = {'X', 'Y', 'Z', 'X', 'Y', 'Z'};
  return detail::plaquette_product(layout, p, kLetters);
}

inline PauliString plaquette_op(const HoneycombLayout& layout, const Plaquette& p, Family f) {
  return f == Family::w ? plaquette_W(layout, p) : plaquette_Wtilde(layout, p);
}

/// Honeycomb S^z: the Pauli Z on the site.
inline PauliString sz_op(const HoneycombLayout& layout, int square, Color color) {
  layout.check_square(square);
  return PauliString::single(layout.n_sites(), HoneycombLayout::site_id(square, color), 'Z');
}

/// i chi psi at one honeycomb site. Equals +Z on black sites and -Z on white
/// sites under the Jordan-Wigner assignment above.
inline PauliString sz_from_majoranas(const HoneycombLayout& layout, int square, Color color) {
  return (majorana(layout, square, Species::chi, color) *
          majorana(layout, square, Species::psi, color))
      .times_i_pow(1);
}

/// Z_{i_b} Z_{i_w}, the on-site term of the spin Hamiltonian.
inline PauliString link_zz(const HoneycombLayout& layout, int square) {
  return sz_op(layout, square, Color::black) * sz_op(layout, square, Color::white);
}

/// Nonlocal S^x: head Majorana (psi on black, chi on white) times
/// prod (i chi_k psi_k) over every site of lower rank.
inline PauliString sx_string(const HoneycombLayout& layout, int square, Color color) {
  layout.check_square(square);
  const int target = HoneycombLayout::site_id(square, color);
  PauliString out = majorana(layout, square,
                             color == Color::black ? Species::psi : Species::chi, color);
  for (int k = 0; k < layout.jw_rank(target); ++k) {
    const HoneycombSite s = HoneycombLayout::site(layout.site_at_rank(k));
    out = out * sz_from_majoranas(layout, s.square, s.color);
  }
  return out;
}

inline int device_qubit(int square, bool chain_b) { return 2 * square + (chain_b ? 1 : 0); }

inline PauliString sz_op_device(int n_square, int square, Color color) {
  if (square < 0 || square >= n_square) {
    throw ArgumentError("sz_op_device: unknown square site " + std::to_string(square));
  }
  const int n = 2 * n_square;
  const char letter = color == Color::black ? 'X' : 'Y';
  return PauliString::single(n, device_qubit(square, false), letter) *
         PauliString::single(n, device_qubit(square, true), letter);
}

/// Device S^x: sigma_y^b (black) or sigma_x^a (white) at the target times
/// prod (i sigma sigma) over the device images of every lower-ranked site.
inline PauliString sx_string_device(const HoneycombLayout& layout, int square, Color color) {
  layout.check_square(square);
  const int n = 2 * layout.n_square();
  const int target = HoneycombLayout::site_id(square, color);
  PauliString out = color == Color::black
                        ? PauliString::single(n, device_qubit(square, true), 'Y')
                        : PauliString::single(n, device_qubit(square, false), 'X');
  for (int k = 0; k < layout.jw_rank(target); ++k) {
    const HoneycombSite s = HoneycombLayout::site(layout.site_at_rank(k));
    out = out * sz_op_device(layout.n_square(), s.square, s.color).times_i_pow(1);
  }
  return out;
}

inline Operator honeycomb(PauliString p) { return {Representation::honeycomb_spin, std::move(p)}; }
inline Operator device(PauliString p) { return {Representation::device, std::move(p)}; }

}  // namespace semion

#endif  // SEMION_OPERATORS_HPP
