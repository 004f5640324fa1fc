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

#include "septensor/qcore.hpp"

namespace septensor {

/// Nonempty proper subset of the qubits (the transposed side).
struct Bipartition {
  std::vector<int> left;
  int n_qubits = 0;

  Bipartition(std::vector<int> left_qubits, int n);
};

enum class PptVerdict { ppt, npt };

/// Trace norm of the partial transpose minus one, clamped at zero. This is
/// twice the conventional negativity; the Bell-diagonal closed form below
/// matches it.
double negativity(const DensityMatrix& rho, const Bipartition& b);

/// max(0, (|a|+|b|+|c|-1)/2) for the Bell-diagonal state with correlation
/// matrix diag(a,b,c); (a,b,c) must lie in the state tetrahedron.
double bell_diag_negativity(double a, double b, double c);

/// Builds the Bell-diagonal state with correlation matrix diag(a, b, c).
DensityMatrix bell_diagonal_state(double a, double b, double c);

/// Wootters concurrence: max(0, l1 - l2 - l3 - l4) from sqrt(sqrt(rho)
/// rho~ sqrt(rho)).
double concurrence(const DensityMatrix& rho);

/// npt iff the partial transpose has an eigenvalue below -1e-10.
PptVerdict ppt_verdict(const DensityMatrix& rho, const Bipartition& b);

/// Purity-style quantity Tr(pt * pt^dag) - 1; reported alongside the trace
/// norm for reference (it is not the entanglement monotone).
double negativity_purity_form(const DensityMatrix& rho, const Bipartition& b);

/// Critical white-noise strength where the partial transpose stops having
/// negative eigenvalues, by bisection.
double ppt_noise_threshold(const DensityMatrix& rho_pure, const Bipartition& b);

}  // namespace septensor
