// Copyright 2026 The qae-denoise Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <doctest.h>

#include <cmath>

#include "qae/gates.hpp"
#include "qae/noise.hpp"
#include "qae/qmath.hpp"
#include "test_helpers.hpp"

using namespace qae;
using testing::max_abs_diff;
using testing::random_cmat;
using testing::random_density;
using testing::random_pure;

namespace {

// Index-by-index Kronecker product, the oracle for qae::kron.
CMat kron_brute_force(const CMat& a, const CMat& b) {
  CMat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < out.rows(); ++i) {
    for (Eigen::Index j = 0; j < out.cols(); ++j) {
      out(i, j) = a(i / b.rows(), j / b.cols()) * b(i % b.rows(), j % b.cols());
    }
  }
  return out;
}

// Element-wise double sum over traced indices, the oracle for partial_trace.
// Kept qubits must be ascending; bit q of an n-qubit index sits at n-1-q.
CMat partial_trace_brute_force(const CMat& rho, int n, const std::vector<int>& keep) {
  std::vector<int> traced;
  for (int q = 0; q < n; ++q) {
    bool kept = false;
    for (int k : keep) kept = kept || (k == q);
    if (!kept) traced.push_back(q);
  }
  const auto n_keep = static_cast<int>(keep.size());
  const auto n_tr = static_cast<int>(traced.size());
  CMat out = CMat::Zero(dim_of(n_keep), dim_of(n_keep));
  for (Eigen::Index r = 0; r < out.rows(); ++r) {
    for (Eigen::Index c = 0; c < out.cols(); ++c) {
      for (Eigen::Index s = 0; s < dim_of(n_tr); ++s) {
        Eigen::Index fr = 0, fc = 0;
        for (int t = 0; t < n_keep; ++t) {
          const Eigen::Index bit = (r >> (n_keep - 1 - t)) & 1;
          fr |= bit << (n - 1 - keep[t]);
          fc |= ((c >> (n_keep - 1 - t)) & 1) << (n - 1 - keep[t]);
        }
        for (int t = 0; t < n_tr; ++t) {
          const Eigen::Index bit = (s >> (n_tr - 1 - t)) & 1;
          fr |= bit << (n - 1 - traced[t]);
          fc |= bit << (n - 1 - traced[t]);
        }
        out(r, c) += rho(fr, fc);
      }
    }
  }
  return out;
}

}  // namespace

TEST_CASE("kron identity case") {
  const CMat i2 = CMat::Identity(2, 2);
  CHECK(max_abs_diff(kron(i2, i2), CMat::Identity(4, 4)) == 0.0);
}

TEST_CASE("kron builds the GHZ-symmetric X(x)X operator") {
  const CMat xx = kron(pauli_x(), pauli_x());
  const PureState g2 = ghz(2);
  const CVec mapped = xx * g2.amplitudes;
  CHECK((mapped - g2.amplitudes).norm() < 1e-14);
}

TEST_CASE("kron of random 2x2 matrices matches the index-by-index oracle") {
  Rng rng(7);
  for (int k = 0; k < 20; ++k) {
    const CMat a = random_cmat(2, 2, rng);
    const CMat b = random_cmat(2, 2, rng);
    CHECK(max_abs_diff(kron(a, b), kron_brute_force(a, b)) < 1e-14);
  }
  // Rectangular dims exercise the stride arithmetic.
  const CMat a = random_cmat(2, 3, rng);
  const CMat b = random_cmat(4, 2, rng);
  CHECK(max_abs_diff(kron(a, b), kron_brute_force(a, b)) < 1e-14);
}

TEST_CASE("kron is associative") {
  Rng rng(8);
  const CMat a = random_cmat(2, 2, rng);
  const CMat b = random_cmat(3, 3, rng);
  const CMat c = random_cmat(2, 2, rng);
  CHECK(max_abs_diff(kron(kron(a, b), c), kron(a, kron(b, c))) < 1e-12);
}

TEST_CASE("partial trace of a product state factorizes") {
  Rng rng(9);
  const DensityMatrix rho_a = random_density(1, rng);
  const DensityMatrix rho_b = random_density(2, rng);
  const DensityMatrix joint{3, kron(rho_a.mat, rho_b.mat)};
  const DensityMatrix back_a = partial_trace(joint, {0});
  const DensityMatrix back_b = partial_trace(joint, {1, 2});
  CHECK(max_abs_diff(back_a.mat, rho_a.mat) < 1e-12);
  CHECK(max_abs_diff(back_b.mat, rho_b.mat) < 1e-12);
}

TEST_CASE("partial trace of a maximally entangled pair is I/2") {
  const DensityMatrix rho = density_from_pure(ghz(2));
  const DensityMatrix reduced = partial_trace(rho, {0});
  CHECK(max_abs_diff(reduced.mat, 0.5 * CMat::Identity(2, 2)) < 1e-14);
}

TEST_CASE("partial trace matches the brute-force double sum") {
  Rng rng(10);
  const DensityMatrix rho = random_density(3, rng);
  for (const std::vector<int>& keep :
       {std::vector<int>{0}, {1}, {2}, {0, 1}, {0, 2}, {1, 2}}) {
    const DensityMatrix got = partial_trace(rho, keep);
    CHECK(max_abs_diff(got.mat, partial_trace_brute_force(rho.mat, 3, keep)) < 1e-13);
    CHECK(std::abs(got.mat.trace().real() - 1.0) < 1e-12);
  }
}

TEST_CASE("partial trace over the empty complement is the identity map") {
  Rng rng(11);
  const DensityMatrix rho = random_density(2, rng);
  const DensityMatrix same = partial_trace(rho, {0, 1});
  CHECK(max_abs_diff(same.mat, rho.mat) == 0.0);
}

TEST_CASE("partial trace rejects bad indices") {
  const DensityMatrix rho = density_from_pure(ghz(2));
  CHECK_THROWS_AS((void)partial_trace(rho, {2}), std::invalid_argument);
  CHECK_THROWS_AS((void)partial_trace(rho, {-1}), std::invalid_argument);
  CHECK_THROWS_AS((void)partial_trace(rho, {0, 0}), std::invalid_argument);
}

TEST_CASE("purity of pure and maximally mixed states") {
  CHECK(purity(density_from_pure(ghz(3))) == doctest::Approx(1.0).epsilon(1e-12));
  const DensityMatrix mixed{1, 0.5 * CMat::Identity(2, 2)};
  CHECK(purity(mixed) == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("purity of a random mixture matches the explicit matrix product") {
  Rng rng(12);
  const DensityMatrix r1 = random_density(2, rng);
  const DensityMatrix r2 = random_density(2, rng);
  const double lambda = 0.3;
  const DensityMatrix mix{2, lambda * r1.mat + (1.0 - lambda) * r2.mat};
  const Complex direct = (mix.mat * mix.mat).trace();
  CHECK(purity(mix) == doctest::Approx(direct.real()).epsilon(1e-12));
  CHECK(std::abs(direct.imag()) < 1e-10);
}

TEST_CASE("purity is Schmidt-symmetric across a bipartition") {
  Rng rng(13);
  for (int k = 0; k < 10; ++k) {
    const DensityMatrix rho = density_from_pure(random_pure(3, rng));
    const double pa = purity(partial_trace(rho, {0}));
    const double pb = purity(partial_trace(rho, {1, 2}));
    CHECK(pa == doctest::Approx(pb).epsilon(1e-10));
  }
}

TEST_CASE("fidelity against pure references") {
  const PureState g2 = ghz(2);
  CHECK(fidelity_pure(density_from_pure(g2), g2) == doctest::Approx(1.0));

  CVec e00 = CVec::Zero(4);
  e00(0) = 1.0;
  const PureState zeros{2, e00};
  CHECK(fidelity_pure(density_from_pure(zeros), g2) == doctest::Approx(0.5));

  // A single flip gives an orthogonal state.
  const CMat x1 = embed(pauli_x(), {1}, 2);
  const PureState flipped{2, x1 * g2.amplitudes};
  CHECK(std::abs(fidelity_pure(density_from_pure(flipped), g2)) < 1e-14);
}

TEST_CASE("fidelity stays within [0,1] and rejects dimension mismatch") {
  Rng rng(14);
  for (int k = 0; k < 25; ++k) {
    const double f = fidelity_pure(random_density(2, rng), random_pure(2, rng));
    CHECK(f >= -1e-10);
    CHECK(f <= 1.0 + 1e-10);
  }
  CHECK_THROWS_AS((void)fidelity_pure(random_density(2, rng), ghz(3)),
                  std::invalid_argument);
}

TEST_CASE("construction guards") {
  CHECK_THROWS_AS((void)make_pure(2, CVec::Ones(4)), std::invalid_argument);
  CHECK_THROWS_AS((void)make_pure(2, CVec::Zero(3)), std::invalid_argument);
  CHECK_THROWS_AS((void)make_density(1, CMat::Identity(2, 2)), std::invalid_argument);
  CHECK_NOTHROW((void)make_density(1, 0.5 * CMat::Identity(2, 2)));

  CMat not_hermitian = 0.5 * CMat::Identity(2, 2);
  not_hermitian(0, 1) = Complex{0.1, 0.0};
  CHECK_THROWS_AS((void)make_density(1, not_hermitian), std::invalid_argument);

  CMat negative(2, 2);
  negative << 1.1, 0.0, 0.0, -0.1;
  CHECK_THROWS_AS((void)make_density(1, negative), std::invalid_argument);
}
