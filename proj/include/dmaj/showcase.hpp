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

#pragma once

#include "dmaj/channels.hpp"
#include "dmaj/matrix.hpp"

// A small gallery of hand-picked maps and matrix triples that exercise the
// interesting corners of the library: strict positivity holding and failing,
// trace preservation without positivity, rank-deficient channels, and a
// matrix pair that defeats every trace-norm test while no suitable channel
// exists. The CLI `reproduce` subcommand re-runs all of them with their
// expected outcomes.

namespace dmaj {

// Qubit channel a -> diag(a11 + a22/2, a22/2): leaks half of the upper
// population down, CPTP and strictly positive; T(1) = diag(3/2, 1/2).
ChoiMatrix showcase_qubit_leaky_channel();

// Qutrit channel a -> diag(a22 + a33, a11/2, a11/2): strictly positive with
// fixed point diag(2, 1, 1), yet it maps some rank-one inputs to rank-two
// outputs and vice versa.
ChoiMatrix showcase_qutrit_shift_channel();

// Trace-preserving qubit map that is not positive for any m >= 1: it sends
// diag(1, 0) to diag(1 + 1/m, -1/m). As m grows it approaches the identity.
ChoiMatrix showcase_nonpositive_tp_map(unsigned m);

// CPTP qutrit map whose outputs all have a vanishing third row and column;
// T(1) = diag(1, 2, 0), so it is not strictly positive with a
// one-dimensional common kernel, but it is not a trace projection either.
ChoiMatrix showcase_rank_deficient_channel();

// The adjoint of showcase_rank_deficient_channel written out by hand; used
// to validate dual_map against an independent derivation.
ChoiMatrix showcase_rank_deficient_dual();

// Conjugation by the qubit swap: unitary, strictly positive, and at maximal
// distance 2 from the identity map.
ChoiMatrix showcase_swap_conjugation();

struct TransposePairInstance {
  ComplexMatrix a;
  ComplexMatrix b;
  ComplexMatrix d_full;  // positive definite, not diagonal
};

// A = B^T and D = D^T with all three sharing the diagonal: every trace-norm
// comparison between A - tD and B - tD collapses to equality, and every
// matrix-convex trace inequality to an identity, yet no completely positive
// trace-preserving map with fixed point D sends B to A. The feasibility
// solver is expected to stall at a strictly positive residual here.
TransposePairInstance showcase_transpose_pair();

}  // namespace dmaj
