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

#include <optional>

#include "septensor/hosvd.hpp"
#include "septensor/rebuild.hpp"

namespace septensor {

enum class Verdict { separable, entangled };

struct EvaluateOptions {
  double verdict_tol = 1e-9;   // S > 1 + tol declares entanglement
  int max_qubits = 8;
  RebuildOptions rebuild;
};

struct CriterionReport {
  int n_qubits = 0;
  double S = 0.0;
  double sum_s = 0.0;       // slice singular values of the correlation tensor
  double sum_s_add = 0.0;   // additive strengths from the rebuild
  Verdict verdict = Verdict::separable;
  bool boundary = false;        // |S - 1| within verdict tolerance
  bool feasibility_ok = true;   // slice values <= 1 and rebuild consumed everything
  std::optional<double> noise_threshold;
  SminResult reduction;         // slices + rearranged singular tensor of the T form
  RebuildResult rebuild;
};

/// The full separability analysis: correlation tensor, rebuild, slice sums.
/// For 2 qubits the non-global elements carry no entanglement strength and
/// the rebuild step is skipped.
CriterionReport evaluate(const DensityMatrix& rho, const EvaluateOptions& opt = {});

/// max(S - 1, 0) with S the nuclear norm of the 3x3 correlation matrix.
double two_qubit_measure(const DensityMatrix& rho);

/// Critical white-noise strength where S crosses 1, by bisection.
double noise_threshold(const DensityMatrix& rho_pure, const EvaluateOptions& opt = {});

/// Closed form 2^(N-1) + 1 for the N-qubit GHZ state.
double ghz_S(int n_qubits);

/// Closed form |t111|+|t122|+|t212|+|t221| + t_add for GHZ-diagonal mixtures.
double ghz_diagonal_S(const std::vector<double>& p);

enum class EnsembleLevel { pure, mixed };

/// Explicit separable ensemble for a state with S <= 1; members reproduce the
/// state exactly (any residual probability rides on the maximally mixed
/// state). `pure` splits every correlation term into product projectors.
Ensemble extract_ensemble(const DensityMatrix& rho, EnsembleLevel level = EnsembleLevel::pure,
                          const EvaluateOptions& opt = {});

enum class RobustnessVariant { E, E_prime, E_double_prime, negativity };

struct RobustnessCurve {
  RobustnessVariant variant;
  int n_qubits = 0;
  std::vector<std::pair<double, double>> samples;  // (q, value)
  std::optional<double> zero_crossing;
};

/// Entanglement robustness of the N-qubit GHZ state under per-qubit
/// depolarizing noise. E, E' and E'' are closed forms in S_N (1-q)^N; the
/// negativity variant diagonalizes the partial transpose (N <= 8).
RobustnessCurve robustness_curve(int n_qubits, RobustnessVariant variant,
                                 const std::vector<double>& grid, bool find_zero = false);

}  // namespace septensor
