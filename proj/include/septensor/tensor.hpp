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

#include <Eigen/Dense>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace septensor {

/// Dense real tensor with a uniform dimension per mode (3 for correlation
/// tensors, 4 for the identity-extended form). Row-major storage, last index
/// fastest.
class Tensor {
 public:
  Tensor() = default;
  Tensor(int order, int dim)
      : order_(order), dim_(dim), data_(size_of(order, dim), 0.0) {
    if (order < 1 || dim < 1) throw std::invalid_argument("Tensor: bad shape");
  }

  static std::size_t size_of(int order, int dim) {
    std::size_t s = 1;
    for (int i = 0; i < order; ++i) s *= static_cast<std::size_t>(dim);
    return s;
  }

  int order() const { return order_; }
  int dim() const { return dim_; }
  std::size_t size() const { return data_.size(); }

  double* data() { return data_.data(); }
  const double* data() const { return data_.data(); }

  double operator[](std::size_t lin) const { return data_[lin]; }
  double& operator[](std::size_t lin) { return data_[lin]; }

  std::size_t linear_index(std::span<const int> idx) const {
    std::size_t lin = 0;
    for (int k = 0; k < order_; ++k) lin = lin * dim_ + static_cast<std::size_t>(idx[k]);
    return lin;
  }

  double at(std::span<const int> idx) const { return data_[linear_index(idx)]; }
  double& at(std::span<const int> idx) { return data_[linear_index(idx)]; }

  /// Decode a linear index into per-mode indices.
  std::vector<int> multi_index(std::size_t lin) const {
    std::vector<int> idx(order_);
    for (int k = order_ - 1; k >= 0; --k) {
      idx[k] = static_cast<int>(lin % dim_);
      lin /= dim_;
    }
    return idx;
  }

  double frobenius_norm() const {
    double s = 0;
    for (double v : data_) s += v * v;
    return std::sqrt(s);
  }

  double max_abs() const {
    double m = 0;
    for (double v : data_) m = std::max(m, std::abs(v));
    return m;
  }

  double abs_sum() const {
    double s = 0;
    for (double v : data_) s += std::abs(v);
    return s;
  }

  /// Mode-n unfolding: rows indexed by mode `mode`, columns by the remaining
  /// indices in their original order.
  Eigen::MatrixXd unfold(int mode) const {
    require_mode(mode);
    const std::size_t cols = size() / dim_;
    Eigen::MatrixXd M(dim_, static_cast<Eigen::Index>(cols));
    std::size_t inner = 1;  // product of dims after `mode`
    for (int k = mode + 1; k < order_; ++k) inner *= dim_;
    for (std::size_t lin = 0; lin < size(); ++lin) {
      const int r = static_cast<int>((lin / inner) % dim_);
      const std::size_t outer = lin / (inner * dim_);
      const std::size_t c = outer * inner + lin % inner;
      M(r, static_cast<Eigen::Index>(c)) = data_[lin];
    }
    return M;
  }

  /// n-mode product (T x_n M): contracts mode `mode` with the columns of M,
  /// out[.., m, ..] = sum_i M(m, i) * T[.., i, ..].
  Tensor mode_product(const Eigen::MatrixXd& M, int mode) const {
    require_mode(mode);
    if (M.cols() != dim_) throw std::invalid_argument("mode_product: dimension mismatch");
    if (M.rows() != dim_)
      throw std::invalid_argument("mode_product: only square factors supported");
    Tensor out(order_, dim_);
    std::size_t inner = 1;
    for (int k = mode + 1; k < order_; ++k) inner *= dim_;
    const std::size_t block = inner * dim_;
    for (std::size_t base = 0; base < size(); base += block) {
      for (std::size_t off = 0; off < inner; ++off) {
        for (int m = 0; m < dim_; ++m) {
          double acc = 0;
          for (int i = 0; i < dim_; ++i) acc += M(m, i) * data_[base + i * inner + off];
          out.data_[base + m * inner + off] = acc;
        }
      }
    }
    return out;
  }

  /// Subtensor with the last mode fixed to `index` (order drops by one).
  Tensor slice_last(int index) const {
    if (order_ < 2) throw std::invalid_argument("slice_last: order too small");
    require_index(index);
    Tensor out(order_ - 1, dim_);
    for (std::size_t j = 0; j < out.size(); ++j)
      out.data_[j] = data_[j * dim_ + static_cast<std::size_t>(index)];
    return out;
  }

  /// The trailing 3x3 matrix block at offset `base` (order must be 2).
  Eigen::Matrix3d as_matrix3() const {
    if (order_ != 2 || dim_ != 3) throw std::invalid_argument("as_matrix3: not a 3x3 tensor");
    Eigen::Matrix3d M;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) M(i, j) = data_[static_cast<std::size_t>(i * 3 + j)];
    return M;
  }

  static Tensor from_matrix3(const Eigen::Matrix3d& M) {
    Tensor t(2, 3);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) t.data_[static_cast<std::size_t>(i * 3 + j)] = M(i, j);
    return t;
  }

  bool operator==(const Tensor& o) const = default;

 private:
  void require_mode(int mode) const {
    if (mode < 0 || mode >= order_) throw std::invalid_argument("Tensor: mode out of range");
  }
  void require_index(int index) const {
    if (index < 0 || index >= dim_) throw std::invalid_argument("Tensor: index out of range");
  }

  int order_ = 0;
  int dim_ = 0;
  std::vector<double> data_;
};

}  // namespace septensor
