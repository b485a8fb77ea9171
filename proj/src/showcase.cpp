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

#include "dmaj/showcase.hpp"

#include <cmath>

#include "dmaj/errors.hpp"

namespace dmaj {

ChoiMatrix showcase_qubit_leaky_channel() {
  return choi_from_map(
      [](const ComplexMatrix& a) {
        ComplexMatrix out(2, 2);
        out(0, 0) = a(0, 0) + 0.5 * a(1, 1);
        out(1, 1) = 0.5 * a(1, 1);
        return out;
      },
      2, 2);
}

ChoiMatrix showcase_qutrit_shift_channel() {
  return choi_from_map(
      [](const ComplexMatrix& a) {
        ComplexMatrix out(3, 3);
        out(0, 0) = a(1, 1) + a(2, 2);
        out(1, 1) = 0.5 * a(0, 0);
        out(2, 2) = 0.5 * a(0, 0);
        return out;
      },
      3, 3);
}

ChoiMatrix showcase_nonpositive_tp_map(unsigned m) {
  if (m == 0) throw PreconditionViolated("family index must be >= 1");
  const double w = 1.0 / static_cast<double>(m);
  return choi_from_map(
      [w](const ComplexMatrix& a) {
        ComplexMatrix out(2, 2);
        out(0, 0) = (1.0 + w) * a(0, 0) - w * a(1, 1);
        out(0, 1) = a(0, 1);
        out(1, 0) = a(1, 0);
        out(1, 1) = (1.0 + w) * a(1, 1) - w * a(0, 0);
        return out;
      },
      2, 2);
}

ChoiMatrix showcase_rank_deficient_channel() {
  const Complex iw(0.0, 1.0 / std::sqrt(2.0));
  return choi_from_map(
      [iw](const ComplexMatrix& a) {
        ComplexMatrix out(3, 3);
        out(0, 0) = a(0, 0);
        out(0, 1) = iw * (a(0, 1) + a(0, 2));
        out(1, 0) = -iw * (a(1, 0) + a(2, 0));
        out(1, 1) = a(1, 1) + a(2, 2);
        return out;
      },
      3, 3);
}

ChoiMatrix showcase_rank_deficient_dual() {
  const Complex iw(0.0, 1.0 / std::sqrt(2.0));
  return choi_from_map(
      [iw](const ComplexMatrix& b) {
        ComplexMatrix out(3, 3);
        out(0, 0) = b(0, 0);
        out(0, 1) = -iw * b(0, 1);
        out(0, 2) = -iw * b(0, 1);
        out(1, 0) = iw * b(1, 0);
        out(2, 0) = iw * b(1, 0);
        out(1, 1) = b(1, 1);
        out(2, 2) = b(1, 1);
        return out;
      },
      3, 3);
}

ChoiMatrix showcase_swap_conjugation() {
  const ComplexMatrix swap = ComplexMatrix::from_rows({{0.0, 1.0}, {1.0, 0.0}});
  return choi_from_map([&](const ComplexMatrix& a) { return swap * a * swap; }, 2, 2);
}

TransposePairInstance showcase_transpose_pair() {
  const Complex i(0.0, 1.0);
  TransposePairInstance inst;
  inst.b = ComplexMatrix::from_rows(
      {{2.0, 1.0, 0.0}, {1.0, 2.0, i}, {0.0, -i, 2.0}});
  inst.a = inst.b.transpose();
  inst.d_full = ComplexMatrix::from_rows(
      {{2.0, 1.0, 0.0}, {1.0, 2.0, 1.0}, {0.0, 1.0, 2.0}});
  return inst;
}

}  // namespace dmaj
