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
#include "semion/lattice.hpp"
#include "semion/operators.hpp"
#include "semion/pauli.hpp"
#include "semion/state.hpp"

using namespace semion;

namespace {

PauliString random_pauli(std::mt19937_64& rng, int n) {
  const Mask m = PauliString::site_mask(n);
  return PauliString(n, rng() & m, rng() & m, static_cast<int>(rng() % 4));
}

}  // namespace

TEST_CASE("single-site products follow Y = i X Z", "[pauli]") {
  const auto x = PauliString::single(1, 0, 'X');
  const auto z = PauliString::single(1, 0, 'Z');
  const auto y = PauliString::single(1, 0, 'Y');
  const PauliString xz = x * z;
  CHECK(xz.x_mask() == 1);
  CHECK(xz.z_mask() == 1);
  Eigen::Matrix2cd expected;
  expected << 0.0, -1.0, 1.0, 0.0;  // X Z
  CHECK(to_matrix(xz).isApprox(expected, 0.0));
  CHECK(xz == y.times_i_pow(-1));
  CHECK(to_string(xz) == "-i Y");
}

TEST_CASE("basic matrices", "[pauli]") {
  CHECK(to_matrix(PauliString::identity(1)) == Eigen::Matrix2cd::Identity());
  Eigen::Matrix2cd z;
  z << 1.0, 0.0, 0.0, -1.0;
  CHECK(to_matrix(PauliString::single(1, 0, 'Z')) == z);
  Eigen::Matrix2cd y;
  y << 0.0, cplx(0, -1), cplx(0, 1), 0.0;
  CHECK(to_matrix(PauliString::single(1, 0, 'Y')) == y);
  CHECK_THROWS_AS(to_matrix(PauliString(15)), CapacityError);
  CHECK_NOTHROW(to_matrix(PauliString(3), 3));
}

TEST_CASE("multiplication is a phase-exact homomorphism", "[pauli][property]") {
  // Exhaustive on two sites.
  for (Mask x1 = 0; x1 < 4; ++x1)
    for (Mask z1 = 0; z1 < 4; ++z1)
      for (Mask x2 = 0; x2 < 4; ++x2)
        for (Mask z2 = 0; z2 < 4; ++z2) {
          const PauliString p(2, x1, z1, 1), q(2, x2, z2, 0);
          REQUIRE((to_matrix(p * q) - to_matrix(p) * to_matrix(q)).norm() == 0.0);
        }
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 6);
    const auto p = random_pauli(rng, n);
    const auto q = random_pauli(rng, n);
    REQUIRE((to_matrix(p * q) - to_matrix(p) * to_matrix(q)).norm() == 0.0);
    const auto r = random_pauli(rng, n);
    REQUIRE((p * q) * r == p * (q * r));
  }
}

TEST_CASE("identity and involution", "[pauli][property]") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const auto p = random_pauli(rng, 4);
    CHECK(p * PauliString::identity(4) == p);
    const auto sq = p * p;
    CHECK(sq.is_identity_up_to_phase());
    CHECK((sq.phase_exp() == 0 || sq.phase_exp() == 2));
    if (is_hermitian(p)) CHECK(sq.phase_exp() == 0);
  }
}

TEST_CASE("commutation by symplectic form", "[pauli]") {
  CHECK_FALSE(commutes(parse_pauli("+ XI"), parse_pauli("+ ZZ")));
  CHECK(commutes(parse_pauli("+ XX"), parse_pauli("+ ZZ")));
  CHECK_THROWS_AS(commutes(PauliString(2), PauliString(3)), DimensionError);
  CHECK_THROWS_AS(PauliString(2) * PauliString(3), DimensionError);

  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 60; ++trial) {
    const auto p = random_pauli(rng, 4);
    const auto q = random_pauli(rng, 4);
    const auto pq = p * q;
    const auto qp = q * p;
    CHECK(pq.x_mask() == qp.x_mask());
    const int offset = (pq.phase_exp() - qp.phase_exp() + 4) % 4;
    CHECK(offset == (commutes(p, q) ? 0 : 2));
    const Eigen::MatrixXcd comm = to_matrix(p) * to_matrix(q) - to_matrix(q) * to_matrix(p);
    CHECK((comm.norm() == 0.0) == commutes(p, q));
  }
}

TEST_CASE("hermiticity", "[pauli]") {
  CHECK(is_hermitian(PauliString::single(1, 0, 'Y')));
  CHECK_FALSE(is_hermitian(PauliString::single(1, 0, 'Z').times_i_pow(1)));
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 60; ++trial) {
    const auto p = random_pauli(rng, 3);
    const Eigen::MatrixXcd m = to_matrix(p);
    CHECK(is_hermitian(p) == m.isApprox(m.adjoint(), 0.0));
  }
}

TEST_CASE("text rendering round-trips", "[pauli]") {
  const auto p = parse_pauli("+i XZIIY");
  CHECK(p.n_sites() == 5);
  CHECK(p.letter(0) == 'X');
  CHECK(p.letter(4) == 'Y');
  CHECK(to_string(p) == "+i XZIIY");
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 50; ++trial) {
    const auto q = random_pauli(rng, 7);
    CHECK(parse_pauli(to_string(q)) == q);
  }
  CHECK_THROWS_AS(parse_pauli("XZ"), ArgumentError);
  CHECK_THROWS_AS(parse_pauli("* XZ"), ArgumentError);
  CHECK_THROWS_AS(parse_pauli("+ XQ"), ArgumentError);
}

TEST_CASE("apply_to_state", "[pauli][state]") {
  const auto e0 = StateVector::basis(3, 0b000);
  const auto x0 = apply_to_state(PauliString::single(3, 0, 'X'), e0);
  CHECK(x0[0b001] == cplx(1.0));
  const auto z0 = apply_to_state(PauliString::single(3, 0, 'Z'), StateVector::basis(3, 0b001));
  CHECK(z0[0b001] == cplx(-1.0));
  CHECK_THROWS_AS(apply_to_state(PauliString(2), e0), DimensionError);

  std::mt19937_64 rng(13);
  std::normal_distribution<double> normal;
  const int n = 10;
  for (int trial = 0; trial < 3; ++trial) {
    const auto p = random_pauli(rng, n);
    StateVector v(n);
    for (auto& a : v.amplitudes()) a = {normal(rng), normal(rng)};
    v.normalize();
    const StateVector pv = apply_to_state(p, v);
    Eigen::VectorXcd ev(static_cast<Eigen::Index>(v.dim()));
    for (std::size_t k = 0; k < v.dim(); ++k) ev(static_cast<Eigen::Index>(k)) = v[k];
    const Eigen::VectorXcd dense = to_matrix(p, n) * ev;
    double worst = 0.0;
    for (std::size_t k = 0; k < v.dim(); ++k) {
      worst = std::max(worst, std::abs(dense(static_cast<Eigen::Index>(k)) - pv[k]));
    }
    CHECK(worst < 1e-12);
    CHECK(pv.norm() == Catch::Approx(1.0).margin(1e-14));
  }
}

TEST_CASE("plaquette operators square to identity and are Hermitian", "[pauli]") {
  const HoneycombLayout layout(2, 3);
  for (const auto& p : layout.plaquettes()) {
    const auto w = plaquette_W(layout, p);
    CHECK(is_hermitian(w));
    CHECK(w * w == PauliString::identity(layout.n_sites()));
  }
  const HoneycombLayout small(2, 2);
  for (const auto& p : small.plaquettes()) {
    const Eigen::MatrixXcd m = to_matrix(plaquette_W(small, p));
    CHECK((m - m.adjoint()).norm() == 0.0);
    CHECK((m * m - Eigen::MatrixXcd::Identity(m.rows(), m.cols())).norm() == 0.0);
  }
}
