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

#include "dmaj/vector_majorization.hpp"

#include <doctest.h>

#include <cmath>
#include <cstring>
#include <string>

#include "dmaj/errors.hpp"
#include "test_helpers.hpp"

using namespace dmaj;
using dmaj::testing::Rng;

TEST_CASE("weight vector validation") {
  CHECK_THROWS_AS(WeightVector({1.0, 0.0}), NonpositiveWeight);
  CHECK_THROWS_AS(WeightVector({1.0, -0.5}), NonpositiveWeight);
  CHECK_THROWS_AS(WeightVector({}), DimensionTooSmall);
  CHECK_THROWS_AS(WeightVector({1.0, std::nan("")}), NonFiniteEntry);

  const WeightVector d({2.0, 1.0, 1.0});
  CHECK(d.sum() == doctest::Approx(4.0));
  CHECK(d.min_entry() == doctest::Approx(1.0));
  CHECK_FALSE(d.proportional_to_uniform());
  CHECK(WeightVector({3.0, 3.0, 3.0}).proportional_to_uniform());
}

TEST_CASE("classical majorization on hand-picked pairs") {
  CHECK(classical_majorization_check({0.5, 0.5}, {1.0, 0.0}).majorized);
  CHECK_FALSE(classical_majorization_check({1.0, 0.0}, {0.5, 0.5}).majorized);
  CHECK(classical_majorization_check({0.2, 0.5, 0.3}, {0.2, 0.5, 0.3}).majorized);
  // Unequal totals are never comparable.
  CHECK_FALSE(classical_majorization_check({0.5, 0.5}, {1.0, 0.1}).majorized);
  CHECK_THROWS_AS(classical_majorization_check({1.0}, {1.0, 0.0}), LengthMismatch);
}

TEST_CASE("mixing by a doubly stochastic matrix always majorizes down") {
  Rng rng(5);
  for (int rep = 0; rep < 200; ++rep) {
    const std::size_t n = 2 + rep % 5;
    const RealVector y = dmaj::testing::random_real_vector(n, rng);
    const RealMatrix a = dmaj::testing::random_doubly_stochastic(n, rng);
    CHECK(classical_majorization_check(a.apply(y), y).majorized);
  }
}

TEST_CASE("collapse matrix concentrates signs onto two coordinates") {
  const StochasticMatrix id_like = collapse_matrix({1.0, -1.0});
  CHECK(id_like.entries(0, 0) == 1.0);
  CHECK(id_like.entries(1, 1) == 1.0);
  CHECK(id_like.entries(0, 1) == 0.0);

  const StochasticMatrix a = collapse_matrix({3.0, -1.0, 2.0});
  const RealVector image = a.entries.apply({3.0, -1.0, 2.0});
  CHECK(image[0] == doctest::Approx(5.0));
  CHECK(image[1] == doctest::Approx(-1.0));
  CHECK(image[2] == doctest::Approx(0.0));

  const RealVector nonneg{0.3, 0.2, 0.5};
  const RealVector collapsed = collapse_matrix(nonneg).entries.apply(nonneg);
  CHECK(collapsed[0] == doctest::Approx(1.0));
  CHECK(collapsed[1] == doctest::Approx(0.0));

  CHECK_THROWS_AS(collapse_matrix({1.0}), DimensionTooSmall);
}

TEST_CASE("transfer matrix on the two-coordinate example") {
  const StochasticMatrix m = transfer_matrix({1.0, 1.0}, {2.0, 0.0});
  const RealVector image = m.entries.apply({2.0, 0.0});
  CHECK(image[0] == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(image[1] == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(m.entries(0, 0) == doctest::Approx(0.5));
  CHECK(m.entries(1, 0) == doctest::Approx(0.5));
}

TEST_CASE("transfer matrix on a signed three-coordinate example") {
  const RealVector x{0.6, -0.1, 0.5};
  const RealVector y{1.0, -0.3, 0.3};
  const StochasticMatrix m = transfer_matrix(x, y);
  const RealVector image = m.entries.apply(y);
  for (std::size_t i = 0; i < 3; ++i)
    CHECK(image[i] == doctest::Approx(x[i]).epsilon(1e-12));
  const auto diag = stochastic_diagnostics(m.entries);
  CHECK(diag.min_entry >= -1e-12);
  CHECK(diag.worst_column_sum_gap <= 1e-12);
}

TEST_CASE("transfer matrix preconditions name the failing inequality") {
  CHECK_THROWS_WITH_AS(transfer_matrix({1.0, 0.0}, {2.0, 0.0}),
                       doctest::Contains("totals"), PreconditionViolated);
  // Equal totals but x has the larger one-norm.
  CHECK_THROWS_WITH_AS(transfer_matrix({2.0, -1.0}, {1.0, 0.0}),
                       doctest::Contains("one-norm"), PreconditionViolated);
}

TEST_CASE("transfer matrix properties over random admissible pairs") {
  Rng rng(13);
  for (int rep = 0; rep < 100; ++rep) {
    const std::size_t n = 2 + rep % 5;
    const RealVector y = dmaj::testing::random_real_vector(n, rng);
    // Mixing by a column-stochastic matrix preserves the total and can only
    // shrink the one-norm, so the preconditions hold by construction.
    const RealMatrix mix = dmaj::testing::random_column_stochastic(n, rng);
    const RealVector x = mix.apply(y);

    const StochasticMatrix m = transfer_matrix(x, y);
    const RealVector image = m.entries.apply(y);
    for (std::size_t i = 0; i < n; ++i) CHECK(std::abs(image[i] - x[i]) < 1e-10);
    const auto diag = stochastic_diagnostics(m.entries);
    CHECK(diag.min_entry >= -1e-12);
    CHECK(diag.worst_column_sum_gap <= 1e-12);
  }
}

TEST_CASE("transfer matrix accepts x equal to y") {
  Rng rng(17);
  const RealVector y = dmaj::testing::random_real_vector(4, rng);
  const StochasticMatrix m = transfer_matrix(y, y);
  const RealVector image = m.entries.apply(y);
  for (std::size_t i = 0; i < 4; ++i)
    CHECK(image[i] == doctest::Approx(y[i]).epsilon(1e-12));
}

TEST_CASE("stochastic matrix validation rejects broken invariants") {
  RealMatrix negative = RealMatrix::identity(2);
  negative(0, 0) = -0.1;
  negative(1, 0) = 1.1;
  CHECK_THROWS_AS(StochasticMatrix::checked(negative), NotDStochastic);

  RealMatrix bad_sum = RealMatrix::identity(2);
  bad_sum(0, 0) = 0.5;
  CHECK_THROWS_AS(StochasticMatrix::checked(bad_sum), NotDStochastic);

  // Column stochastic but does not fix the requested weight vector.
  RealMatrix swap(2, 2);
  swap(0, 1) = 1.0;
  swap(1, 0) = 1.0;
  CHECK_THROWS_AS(StochasticMatrix::checked(swap, WeightVector({2.0, 1.0})),
                  NotDStochastic);
  CHECK_NOTHROW(StochasticMatrix::checked(swap, WeightVector({1.0, 1.0})));
}

TEST_CASE("d-majorization is reflexive and has d as minimum") {
  Rng rng(19);
  for (int rep = 0; rep < 50; ++rep) {
    const std::size_t n = 2 + rep % 4;
    const WeightVector d = dmaj::testing::random_weight_vector(n, rng);
    const RealVector y = dmaj::testing::random_real_vector(n, rng);
    CHECK(d_majorization_check(y, y, d).majorized);

    // Rescale d to match the total of y; the weight vector sits below
    // everything on its trace slice.
    RealVector x = d.entries();
    const double factor = sum_of(y) / d.sum();
    for (double& e : x) e *= factor;
    if (std::abs(factor) > 0.1) {
      // Keep x a positive multiple of d; a negative multiple is not minimal.
      if (factor > 0.0) {
        CHECK(d_majorization_check(x, y, d).majorized);
      }
    }
  }
}

TEST_CASE("uniform weights reduce to classical majorization") {
  Rng rng(23);
  int agreements = 0;
  for (int rep = 0; rep < 500; ++rep) {
    const std::size_t n = 2 + rep % 5;
    const WeightVector e(RealVector(n, 1.0));
    RealVector y = dmaj::testing::random_real_vector(n, rng);
    RealVector x;
    if (rep % 2 == 0) {
      x = dmaj::testing::random_doubly_stochastic(n, rng).apply(y);
    } else {
      x = dmaj::testing::random_real_vector(n, rng);
      // Match the totals so the comparison is not decided by the sum alone.
      const double shift = (sum_of(y) - sum_of(x)) / n;
      for (double& v : x) v += shift;
    }
    const bool classical = classical_majorization_check(x, y).majorized;
    const auto weighted = d_majorization_check(x, y, e);
    CHECK(weighted.majorized == classical);
    CHECK(weighted.criteria_agree);
    agreements += weighted.majorized ? 1 : 0;
  }
  // The sample contains both verdicts.
  CHECK(agreements > 100);
  CHECK(agreements < 400);
}

TEST_CASE("the two finite criteria agree on random triples") {
  Rng rng(29);
  for (int rep = 0; rep < 10000; ++rep) {
    const std::size_t n = 2 + rep % 7;
    const WeightVector d = dmaj::testing::random_weight_vector(n, rng);
    const RealVector y = dmaj::testing::random_real_vector(n, rng);
    RealVector x;
    switch (rep % 3) {
      case 0:
        x = dmaj::testing::random_d_stochastic(d, rng).apply(y);
        break;
      case 1: {
        x = dmaj::testing::random_real_vector(n, rng);
        const double shift = (sum_of(y) - sum_of(x)) / n;
        for (double& v : x) v += shift;
        break;
      }
      default:
        x = dmaj::testing::random_real_vector(n, rng);
        break;
    }
    const auto report = d_majorization_check(x, y, d);
    CHECK(report.criteria_agree);
  }
}

TEST_CASE("mixing by a d-stochastic matrix always d-majorizes down") {
  Rng rng(31);
  for (int rep = 0; rep < 300; ++rep) {
    const std::size_t n = 2 + rep % 5;
    const WeightVector d = dmaj::testing::random_weight_vector(n, rng);
    const RealVector y = dmaj::testing::random_real_vector(n, rng);
    const RealMatrix m = dmaj::testing::random_d_stochastic(d, rng);
    const auto report = d_majorization_check(m.apply(y), y, d);
    CHECK(report.majorized);
  }
}

TEST_CASE("d-majorization is transitive and witnesses compose") {
  Rng rng(37);
  for (int rep = 0; rep < 100; ++rep) {
    const std::size_t n = 2 + rep % 4;
    const WeightVector d = dmaj::testing::random_weight_vector(n, rng);
    const RealVector y = dmaj::testing::random_real_vector(n, rng);
    const RealMatrix m1 = dmaj::testing::random_d_stochastic(d, rng);
    const RealMatrix m2 = dmaj::testing::random_d_stochastic(d, rng);
    const RealVector x = m1.apply(y);
    const RealVector w = m2.apply(x);

    CHECK(d_majorization_check(w, y, d).majorized);

    const auto diag = stochastic_diagnostics(m2 * m1, &d);
    CHECK(diag.min_entry >= -1e-12);
    CHECK(diag.worst_column_sum_gap <= 1e-12);
    CHECK(diag.worst_fixed_point_gap <= 1e-10);
  }
}

TEST_CASE("witness search finds a d-stochastic matrix on feasible instances") {
  Rng rng(41);
  for (int rep = 0; rep < 20; ++rep) {
    const std::size_t n = 2 + rep % 3;
    const WeightVector d = dmaj::testing::random_weight_vector(n, rng);
    const RealVector y = dmaj::testing::random_real_vector(n, rng);
    const RealVector x = dmaj::testing::random_d_stochastic(d, rng).apply(y);

    const auto report = d_stochastic_witness(x, y, d);
    REQUIRE(report.verdict == FeasibilityVerdict::Feasible);
    REQUIRE(report.witness.has_value());
    const auto diag = stochastic_diagnostics(report.witness->entries, &d);
    CHECK(diag.min_entry >= -1e-12);
    CHECK(diag.worst_column_sum_gap <= 1e-6);
    CHECK(diag.worst_fixed_point_gap <= 1e-6);
    const RealVector image = report.witness->entries.apply(y);
    for (std::size_t i = 0; i < n; ++i) CHECK(std::abs(image[i] - x[i]) < 1e-6);
  }
}

TEST_CASE("witness search rejects the unmixing direction") {
  const WeightVector e({1.0, 1.0});

  // y proportional to d makes the affine rows themselves contradictory, so
  // this instance is certified rather than decided heuristically.
  const auto certified = d_stochastic_witness({1.0, 0.0}, {0.5, 0.5}, e);
  CHECK(certified.verdict == FeasibilityVerdict::InfeasibleCertified);
  CHECK_FALSE(certified.witness.has_value());

  // A generic unmixing instance needs the cone and plateaus instead.
  const auto heuristic = d_stochastic_witness({1.0, 0.0}, {0.7, 0.3}, e);
  CHECK(heuristic.verdict == FeasibilityVerdict::InfeasibleHeuristic);
  CHECK(heuristic.residual > 1e-3);
  CHECK_FALSE(heuristic.witness.has_value());
}

TEST_CASE("witness search and finite criteria agree on decided instances") {
  Rng rng(43);
  int decided = 0, feasible = 0;
  for (int rep = 0; rep < 60; ++rep) {
    const std::size_t n = 2 + rep % 2;
    const WeightVector d = dmaj::testing::random_weight_vector(n, rng);
    const RealVector y = dmaj::testing::random_real_vector(n, rng);
    RealVector x;
    if (rep % 2 == 0) {
      x = dmaj::testing::random_d_stochastic(d, rng).apply(y);
    } else {
      x = dmaj::testing::random_real_vector(n, rng);
      const double shift = (sum_of(y) - sum_of(x)) / n;
      for (double& v : x) v += shift;
    }
    const bool finite_verdict = d_majorization_check(x, y, d).majorized;
    const auto solver = d_stochastic_witness(x, y, d);
    if (solver.verdict == FeasibilityVerdict::Feasible) {
      CHECK(finite_verdict);
      ++decided;
      ++feasible;
    } else if (solver.verdict == FeasibilityVerdict::InfeasibleHeuristic) {
      CHECK_FALSE(finite_verdict);
      ++decided;
    }
  }
  CHECK(decided >= 55);
  CHECK(feasible >= 25);
}

TEST_CASE("minimality witness: the rank-one projection onto d") {
  Rng rng(47);
  const WeightVector d = dmaj::testing::random_weight_vector(4, rng);
  RealMatrix m(4, 4);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) m(i, j) = d[i] / d.sum();
  const auto diag = stochastic_diagnostics(m, &d);
  CHECK(diag.min_entry >= 0.0);
  CHECK(diag.worst_column_sum_gap <= 1e-12);
  CHECK(diag.worst_fixed_point_gap <= 1e-12);

  // It maps any equal-total y to the scaled weight vector.
  const RealVector y = dmaj::testing::random_real_vector(4, rng);
  const RealVector image = m.apply(y);
  for (std::size_t i = 0; i < 4; ++i)
    CHECK(image[i] == doctest::Approx(sum_of(y) * d[i] / d.sum()).epsilon(1e-12));
}
