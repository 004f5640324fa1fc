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

#include <array>
#include <vector>

#include "septensor/tensor.hpp"

namespace septensor {

inline constexpr double kSvdFloor = 1e-12;  // singular values below are rank noise

/// Tucker decomposition with all-orthogonal, norm-ordered core:
/// input = core x_1 P(1) ... x_N P(N).
struct HosvdResult {
  Tensor core;
  std::vector<Eigen::MatrixXd> factors;      // orthogonal, one per mode
  std::vector<double> factor_determinants;   // +-1; O(3) vs SO(3) bookkeeping

  Tensor reconstruct() const;
};

/// Singular values plus their sum (nuclear norm), descending.
struct SvdSum {
  std::array<double, 3> values;
  double sum;
};

SvdSum matrix_svd_sum(const Eigen::Matrix3d& m);

HosvdResult hosvd(const Tensor& t);

/// A 3x3 matrix produced by the iterative order reduction, labeled by the
/// fixed indices of modes 3..N (0-based values).
struct ReducedSlice {
  std::vector<int> fixed;     // fixed[k] = index chosen for mode k+2
  Eigen::Matrix3d matrix;
  SvdSum svd;
};

/// Repeated HOSVD + last-mode splitting until order 2; 3^(N-2) slices.
std::vector<ReducedSlice> iterate_reduce(const Tensor& t);

/// Rearranged per-slice singular values: at most one nonzero per fiber along
/// every mode (diagonal placement for the first slice, cyclic shifts for the
/// rest).
struct SingularTensor {
  Tensor values;          // order N, dim 3, nonnegative
  double smin = 0.0;      // sum of entries
  bool feasible = true;   // every singular value <= 1 + 1e-9
  bool delta_ok = true;
};

struct SminResult {
  double value = 0.0;
  std::vector<ReducedSlice> slices;
  SingularTensor singular;
};

/// S_min: sum of singular values over the reduced slices, plus the
/// rearranged singular tensor.
SminResult smin(const Tensor& t);

/// Rank-one expansion t = sum_k s_k w1 (x) ... (x) wN obtained from the same
/// reduction, with unit direction vectors per mode. Used by the ensemble
/// extractor.
struct RankOneTerm {
  double value;
  std::vector<Eigen::Vector3d> directions;
};

std::vector<RankOneTerm> rank_one_terms(const Tensor& t);

/// Diagnostic for the mode-fixing order: runs the reduction over every
/// permutation of modes (feasible for N <= 4) and reports the minimum.
double smin_over_orders(const Tensor& t);

}  // namespace septensor
