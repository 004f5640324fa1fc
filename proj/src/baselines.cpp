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

#include "septensor/baselines.hpp"

#include <algorithm>
#include <cmath>

namespace septensor {

namespace {

Eigen::VectorXd pt_eigenvalues(const DensityMatrix& rho, const Bipartition& b) {
  const Matrix pt = partial_transpose(rho, b.left);
  Eigen::SelfAdjointEigenSolver<Matrix> es(pt, Eigen::EigenvaluesOnly);
  return es.eigenvalues();
}

}  // namespace

Bipartition::Bipartition(std::vector<int> left_qubits, int n) : left(std::move(left_qubits)), n_qubits(n) {
  if (left.empty() || static_cast<int>(left.size()) >= n)
    throw std::invalid_argument("Bipartition: left side must be nonempty and proper");
  std::sort(left.begin(), left.end());
  if (std::adjacent_find(left.begin(), left.end()) != left.end())
    throw std::invalid_argument("Bipartition: repeated qubit");
  if (left.front() < 0 || left.back() >= n) throw std::invalid_argument("Bipartition: qubit out of range");
}

double negativity(const DensityMatrix& rho, const Bipartition& b) {
  if (b.n_qubits != rho.n_qubits()) throw std::invalid_argument("negativity: size mismatch");
  const Eigen::VectorXd ev = pt_eigenvalues(rho, b);
  return std::max(0.0, ev.cwiseAbs().sum() - 1.0);
}

double negativity_purity_form(const DensityMatrix& rho, const Bipartition& b) {
  const Matrix pt = partial_transpose(rho, b.left);
  return (pt * pt.adjoint()).trace().real() - 1.0;
}

DensityMatrix bell_diagonal_state(double a, double b, double c) {
  // eigenvalues (1 -+ a -+ b -+ c)/4 with an even number of minus signs
  const double e1 = (1 - a - b - c) / 4, e2 = (1 - a + b + c) / 4;
  const double e3 = (1 + a - b + c) / 4, e4 = (1 + a + b - c) / 4;
  if (std::min(std::min(e1, e2), std::min(e3, e4)) < -1e-12)
    throw InvalidState("bell_diagonal_state: (a,b,c) outside the state tetrahedron");
  Matrix m = Matrix::Identity(4, 4);
  const double coef[3] = {a, b, c};
  for (int k = 1; k <= 3; ++k)
    m += coef[k - 1] * pauli_string_matrix(PauliString({k, k}));
  return DensityMatrix::trusted(2, m / 4.0);
}

double bell_diag_negativity(double a, double b, double c) {
  bell_diagonal_state(a, b, c);  // validates the tetrahedron constraint
  return std::max(0.0, 0.5 * (std::abs(a) + std::abs(b) + std::abs(c) - 1.0));
}

double concurrence(const DensityMatrix& rho) {
  if (rho.n_qubits() != 2) throw std::invalid_argument("concurrence: needs exactly 2 qubits");
  const Matrix yy = pauli_string_matrix(PauliString({2, 2}));
  const Matrix rho_tilde = yy * rho.matrix().conjugate() * yy;

  // sqrt(rho) via eigen-decomposition, eigenvalues clamped at zero
  Eigen::SelfAdjointEigenSolver<Matrix> es(rho.matrix());
  Eigen::VectorXd vals = es.eigenvalues().cwiseMax(1e-14);
  const Matrix sqrt_rho =
      es.eigenvectors() * vals.cwiseSqrt().asDiagonal() * es.eigenvectors().adjoint();

  Eigen::SelfAdjointEigenSolver<Matrix> es2(sqrt_rho * rho_tilde * sqrt_rho);
  Eigen::Vector4d lam = es2.eigenvalues().cwiseMax(0.0).cwiseSqrt();
  std::sort(lam.data(), lam.data() + 4, std::greater<double>());
  return std::max(0.0, lam[0] - lam[1] - lam[2] - lam[3]);
}

PptVerdict ppt_verdict(const DensityMatrix& rho, const Bipartition& b) {
  if (b.n_qubits != rho.n_qubits()) throw std::invalid_argument("ppt_verdict: size mismatch");
  return pt_eigenvalues(rho, b).minCoeff() < -1e-10 ? PptVerdict::npt : PptVerdict::ppt;
}

double ppt_noise_threshold(const DensityMatrix& rho_pure, const Bipartition& b) {
  auto npt_at = [&](double q) {
    return ppt_verdict(white_noise_mix(rho_pure, q), b) == PptVerdict::npt;
  };
  if (!npt_at(0.0)) return 0.0;
  double lo = 0.0, hi = 1.0;
  while (hi - lo > 1e-9) {
    const double mid = 0.5 * (lo + hi);
    (npt_at(mid) ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace septensor
