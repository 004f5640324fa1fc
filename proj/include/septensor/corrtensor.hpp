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

#include <string>

#include "septensor/qcore.hpp"
#include "septensor/tensor.hpp"

namespace septensor {

inline constexpr int kMaxQubits = 10;  // dense 3^N / 4^N storage bound

/// Pauli expectation tensor over indices {0,1,2,3}^N; entry (0,...,0) is 1.
struct CorrelationTensorR {
  int n_qubits = 0;
  Tensor values;  // order N, dim 4

  double at(std::span<const int> idx) const { return values.at(idx); }
};

/// Restriction of the R tensor to indices {1,2,3}^N (stored 0-based).
struct CorrelationTensorT {
  int n_qubits = 0;
  Tensor values;  // order N, dim 3

  double at(std::span<const int> idx) const { return values.at(idx); }
};

/// Proper rotation: O^T O = I, det O = +1.
struct Rotation3 {
  Eigen::Matrix3d entries;

  explicit Rotation3(Eigen::Matrix3d m);
  static Rotation3 identity() { return Rotation3(Eigen::Matrix3d::Identity()); }
};

/// t_{i1..iN} = Tr(sigma_{i1} (x) ... (x) sigma_{iN} rho).
CorrelationTensorR correlation_tensor(const DensityMatrix& rho);

/// T-form restriction (indices 1..3 only) of an R tensor.
CorrelationTensorT t_form(const CorrelationTensorR& R);

/// Inverse expansion rho = 2^-N sum_t t sigma(x)...(x)sigma; errors if the
/// result is not a state.
DensityMatrix reconstruct_density(const CorrelationTensorR& R);

/// O_ij = Tr(sigma_i U sigma_j U^dag)/2. Requires U unitary.
Rotation3 su2_to_so3(const Eigen::Matrix2cd& u);

/// Applies one rotation per qubit as successive mode products.
CorrelationTensorT local_rotate_tensor(const CorrelationTensorT& T,
                                       const std::vector<Rotation3>& rotations);

/// Slice-by-slice text rendering (trailing indices fixed), in the layout the
/// analysis report uses.
std::string format_tensor_slices(const Tensor& t, const std::string& name);

}  // namespace septensor
