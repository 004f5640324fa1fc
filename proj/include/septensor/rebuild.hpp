// Copyright 2026 The septensor developers
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

#include <map>
#include <optional>
#include <set>
#include <vector>

#include "septensor/corrtensor.hpp"

namespace septensor {

/// One Pauli axis (1..3) per qubit.
struct AxisTuple {
  std::vector<int> axes;

  AxisTuple() = default;
  explicit AxisTuple(std::vector<int> a);
  int n_qubits() const { return static_cast<int>(axes.size()); }
  auto operator<=>(const AxisTuple&) const = default;
};

/// Projector weights l_j over product-basis bitstrings j in {0,1}^N, in the
/// axes of one tuple. Gauge-reduced so that min_j l_j = 0.
struct WeightVector {
  std::vector<double> l;  // size 2^N
  bool feasible = true;   // sum <= 1 + 1e-9

  double sum() const;
};

/// One rebuild step: an axis tuple together with the non-global coefficients
/// it consumed and the hidden strength they compose to.
struct RebuildEvent {
  AxisTuple axes;
  std::vector<PauliString> consumed;
  WeightVector weights;
  double hidden_strength = 0.0;  // t_hat = sum of weights
  double t_add = 0.0;            // t_hat - |t_full|
  bool participates = false;     // the tuple's own full-weight coefficient is nonzero
  bool anchored = true;          // counts toward S (see strict_nonglobal)
};

struct RebuildResult {
  CorrelationTensorT t_core;           // the actual global coefficients
  CorrelationTensorT t_add;            // event strengths at their tuple positions
  std::vector<RebuildEvent> events;
  std::vector<PauliString> unconsumed;     // infeasible leftovers
  double sum_t_add = 0.0;                  // sum of anchored event strengths
  double excluded_strength = 0.0;          // isolated strengths kept out of S
  bool feasible = true;                    // no unconsumed coefficients
  bool used_exhaustive = false;
};

struct RebuildOptions {
  int exhaustive_limit = 12;               // candidate-tuple bound for exhaustive search
  std::size_t assignment_budget = 200000;  // hard cap on enumerated assignments
  bool strict_nonglobal = false;           // count isolated strengths in S
  double coeff_tol = 1e-11;
};

/// (-1)^(sum of j_n over n in S): the parity-character table entry for the
/// string of tuple `a` supported on S, at the product-basis column j.
int parity_character(const AxisTuple& a, const std::set<int>& support, std::uint64_t column);

/// Distributes |t_S| / 2^(N-1) over the sign-matching half of the columns for
/// every supplied coefficient, then removes the common gauge (the full
/// projector sum is traceless, so the minimum can be subtracted).
WeightVector compose_weights(const AxisTuple& a, const std::map<std::set<int>, double>& coeffs);

/// t_hat: total weight carried by the composition (the target row of the
/// character table has entries +-1, so every column contributes its weight).
double hidden_strength(const AxisTuple& a, const WeightVector& l, const std::set<int>& target);

/// The full preprocessing pass over an R tensor.
RebuildResult rebuild(const CorrelationTensorR& R, const RebuildOptions& opt = {});

/// Closed-form additive strength for mixtures of the eight GHZ-type basis
/// states: 1 - 4 min(p1+p2, p3+p4, p5+p6, p7+p8), clamped at zero.
double ghz_diag_tadd(const std::vector<double>& p);

}  // namespace septensor
