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

#include <random>

#include "catch_amalgamated.hpp"
#include "semion/state.hpp"

using namespace semion;

namespace {

StateVector random_state(int n, std::uint64_t seed, int cavity_dim = 1) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> d;
  StateVector v(n, cavity_dim);
  for (auto& a : v.amplitudes()) a = {d(rng), d(rng)};
  v.normalize();
  return v;
}

}  // namespace

TEST_CASE("reference state", "[state]") {
  const HoneycombLayout layout(2, 3);
  const StateVector ref = reference_state(layout);
  CHECK(ref.norm() == 1.0);
  for (int s = 0; s < layout.n_sites(); ++s) {
    CHECK(real_expectation(ref, PauliString::single(layout.n_sites(), s, 'Z')) == 1.0);
  }
}

TEST_CASE("projected ground state", "[state]") {
  const Couplings c{1.0, 0.8, 0.3};
  for (auto [rows, cols] : {std::pair{1, 4}, {2, 3}, {3, 3}}) {
    const HoneycombLayout layout(rows, cols);
    const StateVector g = project_ground(layout);
    CHECK(std::abs(g.norm() - 1.0) < 1e-12);
    for (const auto& p : layout.plaquettes()) {
      CHECK(std::abs(real_expectation(g, plaquette_W(layout, p)) - 1.0) < 1e-12);
      CHECK(std::abs(real_expectation(g, plaquette_Wtilde(layout, p)) - 1.0) < 1e-12);
    }
    const auto h = build_spin_hamiltonian(layout, c);
    const EnergyStats st = energy_stats(h, g);
    CHECK(st.variance < 1e-10);
    if (layout.n_sites() <= kDefaultDenseLimit) {
      CHECK(std::abs(st.energy - dense_spectrum(h).front()) < 1e-10);
    } else {
      // Every W, W~ at +1 and every on-site ZZ at +1.
      const double expected = -c.jq * layout.plaquettes().size() - c.jp * layout.plaquettes().size() -
                              c.u * layout.n_square();
      CHECK(std::abs(st.energy - expected) < 1e-10);
    }
  }
}

TEST_CASE("projection is idempotent and phase-fixed", "[state]") {
  const HoneycombLayout layout(2, 3);
  const StateVector g = project_ground(layout);
  StateVector again = g;
  for (const auto& p : layout.plaquettes()) {
    project_plus(again, plaquette_W(layout, p));
    project_plus(again, plaquette_Wtilde(layout, p));
  }
  fix_global_phase(again);
  double diff = 0.0;
  for (std::size_t k = 0; k < g.dim(); ++k) diff = std::max(diff, std::abs(g[k] - again[k]));
  CHECK(diff < 1e-12);

  std::size_t best = 0;
  for (std::size_t k = 0; k < g.dim(); ++k) {
    if (std::abs(g[k]) > std::abs(g[best]) + 1e-15) best = k;
  }
  CHECK(g[best].imag() == 0.0);
  CHECK(g[best].real() > 0.0);

  StateVector bad = reference_state(layout);
  CHECK_THROWS_AS(project_plus(bad, PauliString::single(layout.n_sites(), 0, 'Z').times_i_pow(2)),
                  ArgumentError);
}

TEST_CASE("expectations and overlaps", "[state]") {
  StateVector plus(1);
  plus[0] = plus[1] = 1.0 / std::sqrt(2.0);
  CHECK(std::abs(real_expectation(plus, PauliString::single(1, 0, 'X')) - 1.0) < 1e-15);
  CHECK(std::abs(real_expectation(plus, PauliString::single(1, 0, 'Z'))) < 1e-15);
  CHECK_THROWS_AS(real_expectation(plus, PauliString::single(1, 0, 'X').times_i_pow(1)), ArgumentError);

  const auto u = random_state(6, 1);
  const auto v = random_state(6, 2);
  CHECK(std::abs(overlap(u, v) - std::conj(overlap(v, u))) < 1e-14);
  CHECK(std::abs(overlap(u, u) - 1.0) < 1e-14);

  const auto p = parse_pauli("+ XYZIXZ");
  const auto m = to_matrix(p);
  Eigen::Map<const Eigen::VectorXcd> vv(v.amplitudes().data(), static_cast<Eigen::Index>(v.dim()));
  const cplx dense = vv.dot(m * vv);
  CHECK(std::abs(expectation(v, p) - dense) < 1e-13);

  CHECK_THROWS_AS(overlap(u, random_state(5, 3)), DimensionError);
  CHECK_THROWS_AS(apply_to_state(PauliString(5), u), DimensionError);
}

TEST_CASE("cavity blocks", "[state]") {
  const auto v = random_state(3, 4, 3);
  CHECK(v.dim() == 24);
  CHECK(v.block(2).size() == 8);
  const auto xv = apply_to_state(parse_pauli("+ XII"), v);
  for (int n = 0; n < 3; ++n) {
    for (Mask b = 0; b < 8; ++b) CHECK(xv[v.index(n, b ^ 1)] == v[v.index(n, b)]);
  }
  const std::vector<cplx> cav{0.6, cplx{0.0, 0.8}};
  const auto q = random_state(2, 5);
  const auto joint = StateVector::with_cavity(q, cav);
  CHECK(std::abs(joint.norm() - 1.0) < 1e-14);
  CHECK(joint[joint.index(1, 2)] == cav[1] * q[2]);
  CHECK_THROWS(StateVector(30, 1, std::size_t{1} << 20));
}

TEST_CASE("snapshot lists nonzero amplitudes", "[state]") {
  const auto s = snapshot(StateVector::basis(3, 5));
  CHECK(s["amplitudes"].size() == 1);
  CHECK(s["n_qubits"] == 3);
}
