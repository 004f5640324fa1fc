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

#include "septensor/corrtensor.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace septensor {

Rotation3::Rotation3(Eigen::Matrix3d m) : entries(std::move(m)) {
  if ((entries.transpose() * entries - Eigen::Matrix3d::Identity()).cwiseAbs().maxCoeff() > 1e-10)
    throw std::invalid_argument("Rotation3: not orthogonal");
  if (std::abs(entries.determinant() - 1.0) > 1e-10)
    throw std::invalid_argument("Rotation3: determinant is not +1");
}

CorrelationTensorR correlation_tensor(const DensityMatrix& rho) {
  const int n = rho.n_qubits();
  if (n > kMaxQubits) throw std::invalid_argument("correlation_tensor: too many qubits");
  CorrelationTensorR R{n, Tensor(n, 4)};
  std::vector<int> idx(n, 0);
  for (std::size_t lin = 0; lin < R.values.size(); ++lin) {
    const auto midx = R.values.multi_index(lin);
    const Complex v = pauli_expectation(PauliString(midx), rho);
    if (std::abs(v.imag()) > 1e-8)
      throw NumericError("correlation_tensor: imaginary residue " + std::to_string(v.imag()));
    R.values[lin] = v.real();
  }
  return R;
}

CorrelationTensorT t_form(const CorrelationTensorR& R) {
  const int n = R.n_qubits;
  CorrelationTensorT T{n, Tensor(n, 3)};
  std::vector<int> ridx(n);
  for (std::size_t lin = 0; lin < T.values.size(); ++lin) {
    const auto tidx = T.values.multi_index(lin);
    for (int k = 0; k < n; ++k) ridx[k] = tidx[k] + 1;
    T.values[lin] = R.values.at(ridx);
  }
  return T;
}

DensityMatrix reconstruct_density(const CorrelationTensorR& R) {
  const int n = R.n_qubits;
  const auto d = dim_of(n);
  Matrix acc = Matrix::Zero(d, d);
  for (std::size_t lin = 0; lin < R.values.size(); ++lin) {
    const double t = R.values[lin];
    if (t == 0.0) continue;
    acc += t * pauli_string_matrix(PauliString(R.values.multi_index(lin)));
  }
  acc /= static_cast<double>(d);
  // Validate as a state; surface PSD violations as not-a-state.
  Eigen::SelfAdjointEigenSolver<Matrix> es(acc, Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() < -1e-8)
    throw InvalidState("reconstruct_density: expansion is not a state");
  return DensityMatrix::trusted(n, std::move(acc));
}

Rotation3 su2_to_so3(const Eigen::Matrix2cd& u) {
  if ((u.adjoint() * u - Eigen::Matrix2cd::Identity()).cwiseAbs().maxCoeff() > 1e-10)
    throw std::invalid_argument("su2_to_so3: input is not unitary");
  Eigen::Matrix3d o;
  for (int i = 0; i < 3; ++i) {
    const Eigen::Matrix2cd left = pauli_matrix(i + 1);
    for (int j = 0; j < 3; ++j) {
      const Eigen::Matrix2cd m = left * u * pauli_matrix(j + 1) * u.adjoint();
      o(i, j) = 0.5 * m.trace().real();
    }
  }
  return Rotation3(o);
}

CorrelationTensorT local_rotate_tensor(const CorrelationTensorT& T,
                                       const std::vector<Rotation3>& rotations) {
  if (static_cast<int>(rotations.size()) != T.n_qubits)
    throw std::invalid_argument("local_rotate_tensor: need one rotation per qubit");
  CorrelationTensorT out = T;
  for (int mode = 0; mode < T.n_qubits; ++mode)
    out.values = out.values.mode_product(rotations[mode].entries, mode);
  return out;
}

std::string format_tensor_slices(const Tensor& t, const std::string& name) {
  std::ostringstream os;
  const int order = t.order();
  const int dim = t.dim();
  auto fmt = [](double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "% 9.4f", v + 0.0);  // avoid -0
    return std::string(buf);
  };
  if (order == 1) {
    os << name << " = [";
    for (int i = 0; i < dim; ++i) os << (i ? " " : "") << fmt(t[static_cast<std::size_t>(i)]);
    os << " ]\n";
    return os.str();
  }
  // One 2-D block per assignment of the trailing indices.
  const std::size_t blocks = t.size() / static_cast<std::size_t>(dim * dim);
  std::vector<int> fixed(order > 2 ? order - 2 : 0);
  for (std::size_t b = 0; b < blocks; ++b) {
    std::size_t rem = b;
    for (int k = static_cast<int>(fixed.size()) - 1; k >= 0; --k) {
      fixed[static_cast<std::size_t>(k)] = static_cast<int>(rem % dim);
      rem /= dim;
    }
    os << name << "[:,:";
    for (int f : fixed) os << "," << (f + (dim == 3 ? 1 : 0));
    os << "] =\n";
    std::vector<int> idx(order);
    for (int i = 0; i < dim; ++i) {
      os << "  ";
      for (int j = 0; j < dim; ++j) {
        idx[0] = i;
        idx[1] = j;
        for (std::size_t k = 0; k < fixed.size(); ++k) idx[k + 2] = fixed[k];
        os << fmt(t.at(idx));
      }
      os << "\n";
    }
  }
  return os.str();
}

}  // namespace septensor
