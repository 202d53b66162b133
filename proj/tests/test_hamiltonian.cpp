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
#include "semion/hamiltonian.hpp"

using namespace semion;

namespace {

double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b) {
  REQUIRE(a.size() == b.size());
  double m = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) m = std::max(m, std::abs(a[k] - b[k]));
  return m;
}

Couplings random_couplings(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> d(-2.0, 2.0);
  return {d(rng), d(rng), d(rng)};
}

}  // namespace

TEST_CASE("term bookkeeping", "[hamiltonian]") {
  const HoneycombLayout l12(1, 2);
  const auto h = build_spin_hamiltonian(l12, {});
  CHECK(h.terms.size() == 4);
  CHECK(h.terms[0].label == "W0");
  CHECK(h.terms[1].label == "Wt0");
  CHECK(h.terms[3].label == "ZZ1");
  CHECK(h.all_commute());
  CHECK(h.is_real());

  const HoneycombLayout l33(3, 3);
  const auto h33 = build_spin_hamiltonian(l33, {0.3, -1.1, 0.7});
  CHECK(h33.terms.size() == 2 * 6 + 9);
  CHECK(h33.all_commute());
  CHECK(build_device_hamiltonian(l33, {}).terms.size() == 6 + 6 + 9);
}

TEST_CASE("dense matrix is Hermitian", "[hamiltonian]") {
  const HoneycombLayout layout(2, 3);
  const auto m = to_dense(build_spin_hamiltonian(layout, {0.4, 1.3, -0.6}));
  CHECK((m - m.adjoint()).cwiseAbs().maxCoeff() == 0.0);
  CHECK_THROWS_AS(to_dense(build_spin_hamiltonian(HoneycombLayout(2, 4), {})), CapacityError);
}

TEST_CASE("fermion oracle", "[hamiltonian]") {
  const HoneycombLayout layout(1, 2);
  const FermionOracle f(layout, {1.0, 1.0, 1.0});
  // Both bonds ferromagnetic (-2), both sites doubly occupied (+2).
  CHECK(fermion_energy(f, "1111") == 0.0);
  CHECK(fermion_energy(f, "1010") == -4.0);
  CHECK(fermion_energy(f, "1001") == 0.0);
  CHECK(fermion_energy(f, "1100") == 4.0);
  CHECK_THROWS_AS(fermion_energy(f, "101"), DimensionError);
  CHECK_THROWS_AS(fermion_energy(f, "10a1"), ArgumentError);

  std::mt19937_64 rng(7);
  const HoneycombLayout l23(2, 3);
  Couplings c = random_couplings(rng);
  const FermionOracle g(l23, c);
  c.u = 0.0;
  const FermionOracle free(l23, c);
  const Mask all = PauliString::site_mask(g.n_bits());
  const Mask up = 0x555;
  for (Mask b = 0; b < (Mask{1} << g.n_bits()); ++b) {
    CHECK(g.energy(b) == g.energy(b ^ all));
    CHECK(std::abs(free.energy(b) - free.energy(b ^ up)) < 1e-12);
  }
  CHECK_THROWS_AS(FermionOracle(HoneycombLayout(4, 4), {}).all_energies(), CapacityError);
}

TEST_CASE("device Hamiltonian is diagonal with oracle energies", "[hamiltonian]") {
  std::mt19937_64 rng(11);
  for (auto [rows, cols] : {std::pair{1, 2}, {2, 2}, {2, 3}}) {
    const HoneycombLayout layout(rows, cols);
    const Couplings c = random_couplings(rng);
    const auto h = build_device_hamiltonian(layout, c);
    const FermionOracle f(layout, c);
    for (Mask b = 0; b < (Mask{1} << h.n_sites); ++b) {
      double diag = 0.0;
      for (const auto& t : h.terms) {
        REQUIRE(t.op.x_mask() == 0);
        diag += t.coefficient * basis_action(t.op, b).real();
      }
      CHECK(std::abs(diag - f.energy(b)) < 1e-12);
    }
  }
}

TEST_CASE("spin spectrum equals the fermion spectrum", "[hamiltonian]") {
  std::mt19937_64 rng(2024);
  for (auto [rows, cols] : {std::pair{1, 2}, {1, 4}, {2, 2}, {2, 3}}) {
    for (int trial = 0; trial < 3; ++trial) {
      const HoneycombLayout layout(rows, cols);
      const Couplings c = random_couplings(rng);
      const auto spin = dense_spectrum(build_spin_hamiltonian(layout, c));
      const auto ferm = FermionOracle(layout, c).all_energies();
      CHECK(max_abs_diff(spin, ferm) < 1e-10);
    }
  }
  // Decoupled plaquettes: only the on-site term survives.
  const HoneycombLayout layout(1, 4);
  const auto spin = dense_spectrum(build_spin_hamiltonian(layout, {0.0, 0.0, 0.8}));
  CHECK(std::abs(spin.front() + 3.2) < 1e-12);
  CHECK(std::abs(spin.back() - 3.2) < 1e-12);
}

TEST_CASE("zero couplings", "[hamiltonian]") {
  const HoneycombLayout layout(1, 2);
  const auto spin = dense_spectrum(build_spin_hamiltonian(layout, {0.0, 0.0, 0.0}));
  CHECK(spin.size() == 16);
  for (double e : spin) CHECK(e == 0.0);
}

TEST_CASE("ground degeneracy", "[hamiltonian]") {
  const Couplings c{1.0, 0.7, 0.5};
  for (auto [rows, cols, expected] : {std::tuple{1, 4, 2}, {2, 3, 4}, {2, 2, 4}}) {
    const HoneycombLayout layout(rows, cols);
    const auto ferm = FermionOracle(layout, c).all_energies();
    const auto spin = dense_spectrum(build_spin_hamiltonian(layout, c));
    CHECK(ground_degeneracy(ferm) == static_cast<std::size_t>(expected));
    CHECK(ground_degeneracy(spin) == static_cast<std::size_t>(expected));
    CHECK(ferromagnetic_ground_count(layout, c) == static_cast<std::uint64_t>(expected));
  }
  CHECK(ferromagnetic_ground_count(HoneycombLayout(2, 3), {1.0, 1.0, 0.0}) == 16);
  CHECK_THROWS_AS(ferromagnetic_ground_count(HoneycombLayout(2, 3), {-1.0, 1.0, 0.0}), ArgumentError);
}

TEST_CASE("Lanczos agrees with dense diagonalisation", "[hamiltonian]") {
  const HoneycombLayout layout(2, 3);
  const Couplings c{1.0, 0.6, 0.35};
  const auto h = build_spin_hamiltonian(layout, c);
  auto dense = dense_spectrum(h);
  dense.erase(std::unique(dense.begin(), dense.end(), [](double a, double b) { return std::abs(a - b) < 1e-8; }),
              dense.end());
  const auto lz = lanczos_lowest(h, 3);
  REQUIRE(lz.size() == 3);
  for (int k = 0; k < 3; ++k) CHECK(std::abs(lz[static_cast<std::size_t>(k)] - dense[static_cast<std::size_t>(k)]) < 1e-7);

  SpectrumOptions opt;
  opt.dense_limit = 8;
  const auto via = spectrum(h, 2, opt);
  CHECK(std::abs(via[0] - dense[0]) < 1e-7);
  CHECK_THROWS_AS(spectrum(h, std::nullopt, opt), CapacityError);
}

TEST_CASE("matrix-free action matches the dense matrix", "[hamiltonian]") {
  const HoneycombLayout layout(2, 2);
  const auto h = build_spin_hamiltonian(layout, {0.2, -0.9, 1.4});
  const auto m = to_dense(h);
  std::mt19937_64 rng(3);
  std::normal_distribution<double> n;
  Eigen::VectorXcd v(m.rows());
  for (auto& a : v) a = {n(rng), n(rng)};
  Eigen::VectorXcd w(m.rows());
  apply_hamiltonian(h, {v.data(), static_cast<std::size_t>(v.size())}, {w.data(), static_cast<std::size_t>(w.size())});
  CHECK((w - m * v).norm() < 1e-12);
}

TEST_CASE("Hamiltonian JSON round trip", "[hamiltonian]") {
  const HoneycombLayout layout(2, 3);
  const auto h = build_spin_hamiltonian(layout, {0.25, 1.5, -0.75});
  const auto j = to_json(h);
  const auto back = hamiltonian_from_json(j);
  CHECK(to_json(back) == j);
  CHECK(back.rep == h.rep);
  auto bad = j;
  bad["representation"] = "spin";
  CHECK_THROWS_AS(hamiltonian_from_json(bad), ArgumentError);
}
