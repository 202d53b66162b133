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

#ifndef SEMION_LATTICE_HPP
#define SEMION_LATTICE_HPP

// Square lattice with open boundaries and its honeycomb extension.
//
// Coordinates. The square lattice is drawn rotated by 45 degrees so that one
// diagonal of every square is horizontal. Square site (r, c), r in [0, rows),
// c in [0, cols), has index i = r * cols + c and horizontal position
// x = 2c + (r mod 2). Horizontal-diagonal neighbours are (r, c) and (r, c+1);
// each row is therefore one chain.
//
// Honeycomb. Square site i becomes a vertical link: a black site i_b at the
// bottom and a white site i_w directly above it. Honeycomb site ids are
// 2i (black) and 2i + 1 (white); these ids are also qubit indices.
//
// Zigzag lines, bottom to top: line r holds the black ends of row r and the
// white ends of row r - 1, interleaved by x. Jordan-Wigner rank orders by
// line first, then left to right.
//
// Plaquettes. Every horizontal bond (i, j) with j to the right of i bounds one
// hexagon, labelled
//   1 = i_b, 2 = i_w, 3 = black end of row r+1 at x_i + 1,
//   4 = j_w, 5 = j_b, 6 = white end of row r-1 at x_i + 1.
// Labels 3 and 6 are absent on the top and bottom rows respectively.

#include <algorithm>
#include <array>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "semion/errors.hpp"

namespace semion {

enum class Color : int { black = 0, white = 1 };

inline const char* to_string(Color c) {
  return c == Color::black ? "black" : "white";
}

struct HoneycombSite {
  int square = 0;
  Color color = Color::black;

  int id() const { return 2 * square + static_cast<int>(color); }
  friend bool operator==(const HoneycombSite&, const HoneycombSite&) = default;
};

struct Bond {
  int left = 0;
  int right = 0;
  friend bool operator==(const Bond&, const Bond&) = default;
};

struct Plaquette {
  int row = 0;
  Bond bond;
  /// Honeycomb site ids by label 1..6 (index 0..5); empty on the boundary.
  std::array<std::optional<int>, 6> sites;

  bool complete() const {
    return std::all_of(sites.begin(), sites.end(),
                       [](const auto& s) { return s.has_value(); });
  }
  friend bool operator==(const Plaquette&, const Plaquette&) = default;
};

class SquareLattice {
 public:
  SquareLattice(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 1 || cols < 2) {
      throw ArgumentError("SquareLattice: need rows >= 1 and cols >= 2, got " +
                          std::to_string(rows) + "x" + std::to_string(cols));
    }
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int size() const { return rows_ * cols_; }
  int index(int r, int c) const { return r * cols_ + c; }
  int row(int i) const { return i / cols_; }
  int col(int i) const { return i % cols_; }
  int x(int i) const { return 2 * col(i) + (row(i) & 1); }

  bool contains(int i) const { return i >= 0 && i < size(); }

  std::vector<int> neighbors(int i) const {
    std::vector<int> out;
    if (col(i) > 0) out.push_back(i - 1);
    if (col(i) + 1 < cols_) out.push_back(i + 1);
    return out;
  }

  std::vector<Bond> bonds() const {
    std::vector<Bond> out;
    for (int r = 0; r < rows_; ++r) {
      for (int c = 0; c + 1 < cols_; ++c) out.push_back({index(r, c), index(r, c + 1)});
    }
    return out;
  }

  /// Square site in row r at horizontal position x, if any.
  std::optional<int> at(int r, int x) const {
    if (r < 0 || r >= rows_) return std::nullopt;
    const int shifted = x - (r & 1);
    if (shifted < 0 || (shifted & 1) != 0) return std::nullopt;
    const int c = shifted / 2;
    if (c >= cols_) return std::nullopt;
    return index(r, c);
  }

 private:
  int rows_;
  int cols_;
};

class HoneycombLayout {
 public:
  HoneycombLayout(int rows, int cols) : square_(rows, cols) {
    const int n = n_sites();
    // Sort key (line, x) is unique: within a line black ends and white ends
    // sit at x of opposite parity.
    std::vector<int> order(static_cast<std::size_t>(n));
    for (int s = 0; s < n; ++s) order[static_cast<std::size_t>(s)] = s;
    std::sort(order.begin(), order.end(), [this](int a, int b) {
      const int la = zigzag_line(a);
      const int lb = zigzag_line(b);
      if (la != lb) return la < lb;
      return site_x(a) < site_x(b);
    });
    rank_.assign(static_cast<std::size_t>(n), 0);
    by_rank_ = order;
    for (int k = 0; k < n; ++k) rank_[static_cast<std::size_t>(order[static_cast<std::size_t>(k)])] = k;

    for (const Bond& b : square_.bonds()) {
      Plaquette p;
      p.row = square_.row(b.left);
      p.bond = b;
      const int mid = square_.x(b.left) + 1;
      p.sites[0] = site_id(b.left, Color::black);
      p.sites[1] = site_id(b.left, Color::white);
      if (auto up = square_.at(p.row + 1, mid)) p.sites[2] = site_id(*up, Color::black);
      p.sites[3] = site_id(b.right, Color::white);
      p.sites[4] = site_id(b.right, Color::black);
      if (auto down = square_.at(p.row - 1, mid)) p.sites[5] = site_id(*down, Color::white);
      plaquettes_.push_back(p);
    }

    for (int r = 0; r < rows; ++r) {
      std::vector<int> chain;
      for (int c = 0; c < cols; ++c) chain.push_back(square_.index(r, c));
      chains_.push_back(std::move(chain));
    }
  }

  const SquareLattice& square() const { return square_; }
  int rows() const { return square_.rows(); }
  int cols() const { return square_.cols(); }
  int n_square() const { return square_.size(); }
  int n_sites() const { return 2 * square_.size(); }

  static int site_id(int square, Color color) {
    return 2 * square + static_cast<int>(color);
  }
  static HoneycombSite site(int id) {
    return {id / 2, (id & 1) ? Color::white : Color::black};
  }

  void check_site(int id) const {
    if (id < 0 || id >= n_sites()) {
      throw ArgumentError("HoneycombLayout: unknown honeycomb site " +
                          std::to_string(id));
    }
  }
  void check_square(int i) const {
    if (!square_.contains(i)) {
      throw ArgumentError("HoneycombLayout: unknown square site " +
                          std::to_string(i));
    }
  }

  int zigzag_line(int id) const {
    const HoneycombSite s = site(id);
    return square_.row(s.square) + (s.color == Color::white ? 1 : 0);
  }
  int site_x(int id) const { return square_.x(site(id).square); }
  int n_zigzag_lines() const { return rows() + 1; }

  int jw_rank(int id) const {
    check_site(id);
    return rank_[static_cast<std::size_t>(id)];
  }
  int site_at_rank(int rank) const {
    if (rank < 0 || rank >= n_sites()) {
      throw ArgumentError("HoneycombLayout: rank out of range");
    }
    return by_rank_[static_cast<std::size_t>(rank)];
  }

  const std::vector<Plaquette>& plaquettes() const { return plaquettes_; }
  int n_complete_plaquettes() const {
    return static_cast<int>(std::count_if(plaquettes_.begin(), plaquettes_.end(),
                                          [](const Plaquette& p) { return p.complete(); }));
  }
  const std::vector<std::vector<int>>& chains() const { return chains_; }
  std::vector<Bond> bonds() const { return square_.bonds(); }

 private:
  SquareLattice square_;
  std::vector<int> rank_;
  std::vector<int> by_rank_;
  std::vector<Plaquette> plaquettes_;
  std::vector<std::vector<int>> chains_;
};

inline HoneycombLayout build_layout(int rows, int cols) { return {rows, cols}; }

inline nlohmann::json to_json(const HoneycombLayout& layout) {
  using nlohmann::json;
  json sites = json::array();
  for (int s = 0; s < layout.n_sites(); ++s) {
    const HoneycombSite hs = HoneycombLayout::site(s);
    sites.push_back({{"id", s},
                     {"square", hs.square},
                     {"color", to_string(hs.color)},
                     {"line", layout.zigzag_line(s)},
                     {"x", layout.site_x(s)},
                     {"jw_rank", layout.jw_rank(s)}});
  }
  json plaqs = json::array();
  for (const Plaquette& p : layout.plaquettes()) {
    json labels = json::array();
    for (const auto& s : p.sites) labels.push_back(s ? json(*s) : json(nullptr));
    plaqs.push_back({{"row", p.row},
                     {"bond", {p.bond.left, p.bond.right}},
                     {"sites", labels},
                     {"complete", p.complete()}});
  }
  return {{"rows", layout.rows()},
          {"cols", layout.cols()},
          {"boundary", "open"},
          {"n_sites", layout.n_sites()},
          {"sites", sites},
          {"plaquettes", plaqs},
          {"chains", layout.chains()}};
}

/// Rebuilds a layout from its serialized form and checks that every derived
/// table matches what was stored.
inline HoneycombLayout layout_from_json(const nlohmann::json& j) {
  if (j.value("boundary", std::string("open")) != "open") {
    throw ArgumentError("layout: only open boundary conditions are supported");
  }
  HoneycombLayout layout(j.at("rows").get<int>(), j.at("cols").get<int>());
  if (to_json(layout) != j) {
    throw ArgumentError("layout: serialized tables disagree with the geometry");
  }
  return layout;
}

}  // namespace semion

#endif  // SEMION_LATTICE_HPP
