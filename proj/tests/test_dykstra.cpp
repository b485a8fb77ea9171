// Copyright 2026 The dmaj authors
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

#include "dmaj/dykstra.hpp"

#include <doctest.h>

#include <cmath>

#include "dmaj/eig.hpp"
#include "dmaj/errors.hpp"
#include "test_helpers.hpp"

using namespace dmaj;
using dmaj::testing::Rng;

TEST_CASE("hermitian vectorizer is an isometry") {
  Rng rng(7);
  const HermitianVectorizer vec(3);
  CHECK(vec.real_dim() == 9);

  const auto a = dmaj::testing::random_hermitian(3, rng);
  const auto b = dmaj::testing::random_hermitian(3, rng);
  const auto va = vec.to_real(a);
  const auto vb = vec.to_real(b);

  double euclidean = 0.0;
  for (std::size_t i = 0; i < va.size(); ++i) euclidean += va[i] * vb[i];
  const double hilbert_schmidt = (a * b).trace().real();
  CHECK(euclidean == doctest::Approx(hilbert_schmidt).epsilon(1e-12));

  // Round trip.
  CHECK(dmaj::testing::max_abs_diff(vec.from_real(va), a) < 1e-14);

  // The basis elements are orthonormal hermitian matrices.
  for (std::size_t i = 0; i < vec.real_dim(); ++i) {
    const auto e = vec.basis_element(i);
    CHECK(e.is_hermitian(1e-14));
    for (std::size_t j = i; j < vec.real_dim(); ++j) {
      const double overlap = (e * vec.basis_element(j)).trace().real();
      CHECK(overlap == doctest::Approx(i == j ? 1.0 : 0.0).epsilon(1e-13));
    }
  }

  CHECK_THROWS_AS(vec.basis_element(9), IndexOutOfRange);
  CHECK_THROWS_AS(vec.to_real(ComplexMatrix(2, 2)), DimensionMismatch);
}

TEST_CASE("affine subspace projection and rank") {
  // x + y = 1 in the plane.
  AffineSubspace line(2, {{1.0, 1.0}}, {1.0});
  CHECK(line.rank() == 1);
  CHECK(line.consistent());

  const std::vector<double> v{3.0, 0.0};
  const auto p = line.project(v);
  CHECK(p[0] == doctest::Approx(2.0));
  CHECK(p[1] == doctest::Approx(-1.0));
  CHECK(line.violation(p) < 1e-14);
  CHECK(line.violation(v) == doctest::Approx(2.0 / std::sqrt(2.0)));

  // Anchor is the minimum-norm solution.
  CHECK(line.anchor()[0] == doctest::Approx(0.5));
  CHECK(line.anchor()[1] == doctest::Approx(0.5));

  // A repeated consistent row does not change the rank.
  AffineSubspace doubled(2, {{1.0, 1.0}, {2.0, 2.0}}, {1.0, 2.0});
  CHECK(doubled.rank() == 1);
  CHECK(doubled.consistent());

  // Contradictory rows are certified inconsistent.
  AffineSubspace bad(2, {{1.0, 1.0}, {1.0, 1.0}}, {1.0, 2.0});
  CHECK_FALSE(bad.consistent());
  CHECK(bad.inconsistency() > 0.5);
}

TEST_CASE("feasible orthant problem converges to the intersection") {
  // {x + y = 1} meets the nonnegative orthant.
  AffineSubspace line(2, {{1.0, 1.0}}, {1.0});
  const auto result = dykstra_feasibility(line, project_nonnegative);
  REQUIRE(result.verdict == FeasibilityVerdict::Feasible);
  CHECK(result.residual < 1e-8);
  REQUIRE(result.point.size() == 2);
  CHECK(result.point[0] >= 0.0);
  CHECK(result.point[1] >= 0.0);
  CHECK(result.point[0] + result.point[1] == doctest::Approx(1.0).epsilon(1e-7));
  CHECK_FALSE(result.residual_trace.empty());
  CHECK(result.residual_trace.back().iteration == result.iterations);
}

TEST_CASE("infeasible orthant problem plateaus at the gap distance") {
  // {x + y = -1} never meets the nonnegative orthant; the gap is 1/sqrt(2).
  AffineSubspace line(2, {{1.0, 1.0}}, {-1.0});
  const auto result = dykstra_feasibility(line, project_nonnegative);
  CHECK(result.verdict == FeasibilityVerdict::InfeasibleHeuristic);
  CHECK(result.residual == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-3));
  CHECK(result.iterations < 5000);
}

TEST_CASE("contradictory affine rows are certified without iterating") {
  AffineSubspace bad(2, {{1.0, 0.0}, {1.0, 0.0}}, {0.0, 1.0});
  const auto result = dykstra_feasibility(bad, project_nonnegative);
  CHECK(result.verdict == FeasibilityVerdict::InfeasibleCertified);
  CHECK(result.iterations == 0);
}

TEST_CASE("PSD cone with entry constraints, feasible and infeasible") {
  const HermitianVectorizer vec(2);
  const ConeProjector psd_cone = [&vec](const std::vector<double>& v) {
    return vec.to_real(psd_project(vec.from_real(v)));
  };

  auto entry_rows = [&vec](double off_value) {
    std::vector<std::vector<double>> rows;
    std::vector<double> rhs;
    rows.push_back(functional_row(
        vec, [](const ComplexMatrix& e) { return e(0, 0).real(); }));
    rhs.push_back(1.0);
    rows.push_back(functional_row(
        vec, [](const ComplexMatrix& e) { return e(1, 1).real(); }));
    rhs.push_back(1.0);
    rows.push_back(functional_row(
        vec, [](const ComplexMatrix& e) { return e(0, 1).real(); }));
    rhs.push_back(off_value);
    rows.push_back(functional_row(
        vec, [](const ComplexMatrix& e) { return e(0, 1).imag(); }));
    rhs.push_back(0.0);
    return std::pair{rows, rhs};
  };

  SUBCASE("off-diagonal 1/2 is feasible") {
    auto [rows, rhs] = entry_rows(0.5);
    AffineSubspace affine(vec.real_dim(), rows, rhs);
    const auto result = dykstra_feasibility(affine, psd_cone);
    REQUIRE(result.verdict == FeasibilityVerdict::Feasible);
    const ComplexMatrix m = vec.from_real(result.point);
    CHECK(psd_check(m).classification != PsdClass::Indefinite);
    CHECK(m(0, 0).real() == doctest::Approx(1.0).epsilon(1e-6));
    CHECK(m(1, 1).real() == doctest::Approx(1.0).epsilon(1e-6));
    CHECK(m(0, 1).real() == doctest::Approx(0.5).epsilon(1e-6));
  }

  SUBCASE("off-diagonal 2 contradicts unit diagonal") {
    auto [rows, rhs] = entry_rows(2.0);
    AffineSubspace affine(vec.real_dim(), rows, rhs);
    const auto result = dykstra_feasibility(affine, psd_cone);
    CHECK(result.verdict == FeasibilityVerdict::InfeasibleHeuristic);
    CHECK(result.residual > 0.1);
  }
}

TEST_CASE("fully pinned PSD matrix is recovered exactly") {
  Rng rng(11);
  const ComplexMatrix target = dmaj::testing::random_psd(3, rng);
  const HermitianVectorizer vec(3);

  std::vector<std::vector<double>> rows;
  std::vector<double> rhs;
  const auto target_coords = vec.to_real(target);
  for (std::size_t i = 0; i < vec.real_dim(); ++i) {
    std::vector<double> row(vec.real_dim(), 0.0);
    row[i] = 1.0;
    rows.push_back(row);
    rhs.push_back(target_coords[i]);
  }

  AffineSubspace affine(vec.real_dim(), rows, rhs);
  const ConeProjector psd_cone = [&vec](const std::vector<double>& v) {
    return vec.to_real(psd_project(vec.from_real(v)));
  };
  const auto result = dykstra_feasibility(affine, psd_cone);
  REQUIRE(result.verdict == FeasibilityVerdict::Feasible);
  CHECK(dmaj::testing::max_abs_diff(vec.from_real(result.point), target) < 1e-6);
}
