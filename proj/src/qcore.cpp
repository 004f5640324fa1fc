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

#include "septensor/qcore.hpp"

#include <algorithm>
#include <cmath>

namespace septensor {

namespace {

// Full eigenvalue PSD checks get expensive past this dimension; larger
// matrices come from trusted constructions anyway.
constexpr std::int64_t kPsdCheckMaxDim = 1 << 9;

void require_hermitian_trace(const Matrix& m, double scale) {
  const double herm = (m - m.adjoint()).cwiseAbs().maxCoeff();
  if (herm > kHermTol * std::max(1.0, scale))
    throw InvalidState("density matrix is not Hermitian (residue " + std::to_string(herm) + ")");
  const Complex tr = m.trace();
  if (std::abs(tr - Complex(1.0, 0.0)) > 1e-9)
    throw InvalidState("density matrix trace differs from one");
}

}  // namespace

StateVector::StateVector(int n_qubits, Vector amplitudes)
    : n_qubits_(n_qubits), amps_(std::move(amplitudes)) {
  if (n_qubits_ < 1) throw std::invalid_argument("StateVector: need at least one qubit");
  if (amps_.size() != dim_of(n_qubits_))
    throw std::invalid_argument("StateVector: amplitude count != 2^n");
  const double norm = amps_.norm();
  if (std::abs(norm - 1.0) > 1e-9) throw InvalidState("StateVector: norm differs from one");
  amps_ /= norm;
}

DensityMatrix::DensityMatrix(int n_qubits, Matrix entries) {
  if (n_qubits < 1) throw std::invalid_argument("DensityMatrix: need at least one qubit");
  const auto d = dim_of(n_qubits);
  if (entries.rows() != d || entries.cols() != d)
    throw std::invalid_argument("DensityMatrix: wrong dimensions");
  require_hermitian_trace(entries, entries.cwiseAbs().maxCoeff());
  n_qubits_ = n_qubits;
  mat_ = 0.5 * (entries + entries.adjoint());  // symmetrize round-off
  if (d <= kPsdCheckMaxDim) {
    if (min_eigenvalue() < -kPsdTol) throw InvalidState("DensityMatrix: negative eigenvalue");
  } else if (mat_.diagonal().real().minCoeff() < -kPsdTol) {
    throw InvalidState("DensityMatrix: negative diagonal entry");
  }
}

DensityMatrix DensityMatrix::trusted(int n_qubits, Matrix entries) {
  DensityMatrix out;
  require_hermitian_trace(entries, 1.0);
  out.n_qubits_ = n_qubits;
  out.mat_ = 0.5 * (entries + entries.adjoint());
  return out;
}

double DensityMatrix::min_eigenvalue() const {
  Eigen::SelfAdjointEigenSolver<Matrix> es(mat_, Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

PauliString::PauliString(std::vector<int> idx) : indices(std::move(idx)) {
  if (indices.empty()) throw std::invalid_argument("PauliString: empty");
  for (int i : indices)
    if (i < 0 || i > 3) throw std::invalid_argument("PauliString: index outside {0,1,2,3}");
}

int PauliString::weight() const {
  return static_cast<int>(std::count_if(indices.begin(), indices.end(), [](int i) { return i != 0; }));
}

std::string PauliString::name() const {
  static const char* letters = "IXYZ";
  std::string s;
  for (int i : indices) s.push_back(letters[i]);
  return s;
}

KrausChannel::KrausChannel(std::vector<Eigen::Matrix2cd> ops) : operators(std::move(ops)) {
  if (operators.empty()) throw std::invalid_argument("KrausChannel: no operators");
  Eigen::Matrix2cd sum = Eigen::Matrix2cd::Zero();
  for (const auto& e : operators) sum += e.adjoint() * e;
  if ((sum - Eigen::Matrix2cd::Identity()).cwiseAbs().maxCoeff() > 1e-9)
    throw InvalidState("KrausChannel: completeness relation violated");
}

KrausChannel KrausChannel::depolarizing(double q) {
  if (q < 0.0 || q > 1.0) throw std::invalid_argument("depolarizing: q outside [0,1]");
  std::vector<Eigen::Matrix2cd> ops;
  ops.push_back(std::sqrt(1.0 - 0.75 * q) * pauli_matrix(0));
  for (int k = 1; k <= 3; ++k) ops.push_back(std::sqrt(0.25 * q) * pauli_matrix(k));
  return KrausChannel(std::move(ops));
}

double Ensemble::total_probability() const {
  double s = 0;
  for (const auto& m : members) s += m.probability;
  return s;
}

Eigen::Matrix2cd pauli_matrix(int index) {
  Eigen::Matrix2cd m;
  switch (index) {
    case 0: m << 1, 0, 0, 1; break;
    case 1: m << 0, 1, 1, 0; break;
    case 2: m << 0, Complex(0, -1), Complex(0, 1), 0; break;
    case 3: m << 1, 0, 0, -1; break;
    default: throw std::invalid_argument("pauli_matrix: index outside {0,1,2,3}");
  }
  return m;
}

Matrix pauli_string_matrix(const PauliString& p) {
  // Qubit 0 is the leftmost (outer) Kronecker factor.
  Matrix out = Matrix::Identity(1, 1);
  for (int i : p.indices) {
    const Eigen::Matrix2cd s = pauli_matrix(i);
    Matrix next(out.rows() * 2, out.cols() * 2);
    for (Eigen::Index r = 0; r < out.rows(); ++r)
      for (Eigen::Index c = 0; c < out.cols(); ++c)
        next.block<2, 2>(2 * r, 2 * c) = out(r, c) * s;
    out = std::move(next);
  }
  return out;
}

Complex pauli_expectation(const PauliString& p, const DensityMatrix& rho) {
  const int n = rho.n_qubits();
  if (p.n_qubits() != n) throw std::invalid_argument("pauli_expectation: size mismatch");
  // sigma_string |m> = phase(m) |m ^ flip>, so Tr(P rho) = sum_m phase(m) rho(m, m^flip).
  std::int64_t flip = 0;
  for (int k = 0; k < n; ++k) {
    const int i = p.indices[k];
    if (i == 1 || i == 2) flip |= std::int64_t{1} << (n - 1 - k);
  }
  const auto d = rho.dim();
  Complex acc = 0;
  for (std::int64_t m = 0; m < d; ++m) {
    Complex phase = 1.0;
    for (int k = 0; k < n; ++k) {
      const int bit = static_cast<int>((m >> (n - 1 - k)) & 1);
      switch (p.indices[k]) {
        case 1: break;
        case 2: phase *= bit ? Complex(0, -1) : Complex(0, 1); break;
        case 3: if (bit) phase = -phase; break;
        default: break;
      }
    }
    acc += phase * rho.matrix()(m, m ^ flip);
  }
  return acc;
}

DensityMatrix density_from_state(const StateVector& psi) {
  const auto& a = psi.amplitudes();
  if (std::abs(a.norm() - 1.0) > 1e-9) throw InvalidState("density_from_state: norm deviation");
  return DensityMatrix::trusted(psi.n_qubits(), a * a.adjoint());
}

DensityMatrix mix(const Ensemble& e) {
  if (e.members.empty()) throw std::invalid_argument("mix: empty ensemble");
  const int n = e.members.front().state.n_qubits();
  Matrix acc = Matrix::Zero(dim_of(n), dim_of(n));
  double total = 0;
  for (const auto& m : e.members) {
    if (m.state.n_qubits() != n) throw std::invalid_argument("mix: mismatched dimensions");
    if (m.probability < -1e-12) throw std::invalid_argument("mix: negative probability");
    acc += m.probability * m.state.matrix();
    total += m.probability;
  }
  if (std::abs(total - 1.0) > 1e-9) throw InvalidState("mix: probabilities do not sum to one");
  return DensityMatrix::trusted(n, std::move(acc));
}

DensityMatrix white_noise_mix(const DensityMatrix& rho, double q) {
  if (q < 0.0 || q > 1.0) throw std::invalid_argument("white_noise_mix: q outside [0,1]");
  const auto d = rho.dim();
  Matrix m = (1.0 - q) * rho.matrix();
  m += (q / static_cast<double>(d)) * Matrix::Identity(d, d);
  return DensityMatrix::trusted(rho.n_qubits(), std::move(m));
}

Matrix partial_transpose(const DensityMatrix& rho, const std::vector<int>& subset) {
  const int n = rho.n_qubits();
  std::int64_t mask = 0;
  for (int k : subset) {
    if (k < 0 || k >= n) throw std::invalid_argument("partial_transpose: qubit out of range");
    mask |= std::int64_t{1} << (n - 1 - k);
  }
  const auto d = rho.dim();
  Matrix out(d, d);
  for (std::int64_t r = 0; r < d; ++r) {
    for (std::int64_t c = 0; c < d; ++c) {
      const std::int64_t rr = (r & ~mask) | (c & mask);
      const std::int64_t cc = (c & ~mask) | (r & mask);
      out(rr, cc) = rho.matrix()(r, c);
    }
  }
  return out;
}

DensityMatrix apply_channel(const DensityMatrix& rho, const KrausChannel& ch, int qubit) {
  const int n = rho.n_qubits();
  if (qubit < 0 || qubit >= n) throw std::invalid_argument("apply_channel: qubit out of range");
  const auto d = rho.dim();
  const std::int64_t bit = std::int64_t{1} << (n - 1 - qubit);
  Matrix acc = Matrix::Zero(d, d);
  // (I (x) E (x) I) rho (I (x) E^dag (x) I) without forming the big operator.
  for (const auto& e : ch.operators) {
    Matrix tmp = Matrix::Zero(d, d);
    for (std::int64_t r = 0; r < d; ++r) {
      const int rb = (r & bit) ? 1 : 0;
      for (int s = 0; s < 2; ++s) {
        const Complex w = e(rb, s);
        if (w == Complex(0, 0)) continue;
        const std::int64_t src = s ? (r | bit) : (r & ~bit);
        tmp.row(r) += w * rho.matrix().row(src);
      }
    }
    Matrix term = Matrix::Zero(d, d);
    for (std::int64_t c = 0; c < d; ++c) {
      const int cb = (c & bit) ? 1 : 0;
      for (int s = 0; s < 2; ++s) {
        const Complex w = std::conj(e(cb, s));
        if (w == Complex(0, 0)) continue;
        const std::int64_t src = s ? (c | bit) : (c & ~bit);
        term.col(c) += w * tmp.col(src);
      }
    }
    acc += term;
  }
  return DensityMatrix::trusted(n, std::move(acc));
}

StateVector random_pure_state(int n_qubits, std::mt19937_64& rng) {
  if (n_qubits < 1) throw std::invalid_argument("random_pure_state: n < 1");
  std::normal_distribution<double> g;
  Vector v(dim_of(n_qubits));
  for (Eigen::Index i = 0; i < v.size(); ++i) v[i] = Complex(g(rng), g(rng));
  v /= v.norm();
  return StateVector(n_qubits, std::move(v));
}

Eigen::Matrix2cd random_local_unitary(std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  Eigen::Vector4d q;
  for (int i = 0; i < 4; ++i) q[i] = g(rng);
  q.normalize();
  Eigen::Matrix2cd u;
  u << Complex(q[0], q[1]), Complex(q[2], q[3]), Complex(-q[2], q[3]), Complex(q[0], -q[1]);
  return u;
}

DensityMatrix random_density_matrix(int n_qubits, int rank, std::mt19937_64& rng) {
  if (rank < 1) throw std::invalid_argument("random_density_matrix: rank < 1");
  std::normal_distribution<double> g;
  const auto d = dim_of(n_qubits);
  Matrix G(d, rank);
  for (Eigen::Index i = 0; i < G.rows(); ++i)
    for (Eigen::Index j = 0; j < G.cols(); ++j) G(i, j) = Complex(g(rng), g(rng));
  Matrix rho = G * G.adjoint();
  rho /= rho.trace().real();
  return DensityMatrix::trusted(n_qubits, std::move(rho));
}

StateVector ghz_state(int n_qubits) {
  if (n_qubits < 2) throw std::invalid_argument("ghz_state: need at least 2 qubits");
  Vector v = Vector::Zero(dim_of(n_qubits));
  const double a = 1.0 / std::sqrt(2.0);
  v[0] = a;
  v[v.size() - 1] = a;
  return StateVector(n_qubits, std::move(v));
}

StateVector w_state(int n_qubits) {
  if (n_qubits < 2) throw std::invalid_argument("w_state: need at least 2 qubits");
  Vector v = Vector::Zero(dim_of(n_qubits));
  const double a = 1.0 / std::sqrt(static_cast<double>(n_qubits));
  for (int k = 0; k < n_qubits; ++k) v[std::int64_t{1} << k] = a;
  return StateVector(n_qubits, std::move(v));
}

StateVector bell_state(const std::string& which) {
  Vector v = Vector::Zero(4);
  const double a = 1.0 / std::sqrt(2.0);
  if (which == "phi+") { v[0] = a; v[3] = a; }
  else if (which == "phi-") { v[0] = a; v[3] = -a; }
  else if (which == "psi+") { v[1] = a; v[2] = a; }
  else if (which == "psi-") { v[1] = a; v[2] = -a; }
  else throw std::invalid_argument("bell_state: unknown label " + which);
  return StateVector(2, std::move(v));
}

DensityMatrix maximally_mixed(int n_qubits) {
  const auto d = dim_of(n_qubits);
  return DensityMatrix::trusted(n_qubits, Matrix::Identity(d, d) / static_cast<double>(d));
}

DensityMatrix werner_state(double q) {
  return white_noise_mix(density_from_state(bell_state("psi-")), q);
}

DensityMatrix ghz_diagonal_state(const std::vector<double>& p) {
  if (p.size() != 8) throw std::invalid_argument("ghz_diagonal_state: need 8 probabilities");
  double total = 0;
  for (double v : p) {
    if (v < -1e-12) throw std::invalid_argument("ghz_diagonal_state: negative probability");
    total += v;
  }
  if (std::abs(total - 1.0) > 1e-9)
    throw std::invalid_argument("ghz_diagonal_state: probabilities do not sum to one");
  Matrix acc = Matrix::Zero(8, 8);
  const double a = 1.0 / std::sqrt(2.0);
  for (int k = 0; k < 8; ++k) {
    const int base = k / 2;             // 000,001,010,011
    const double sgn = (k % 2) ? -1.0 : 1.0;
    Vector v = Vector::Zero(8);
    v[base] = a;
    v[7 - base] = sgn * a;
    acc += p[k] * (v * v.adjoint());
  }
  return DensityMatrix::trusted(3, std::move(acc));
}

StateVector product_state(const std::string& labels) {
  const double a = 1.0 / std::sqrt(2.0);
  std::vector<Eigen::Vector2cd> qubits;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    char c = labels[i];
    bool tilde = false;
    if (c == '~') {
      tilde = true;
      if (++i >= labels.size()) throw std::invalid_argument("product_state: dangling ~");
      c = labels[i];
    }
    Eigen::Vector2cd v;
    if (tilde && c == '+') v << a, Complex(0, a);
    else if (tilde && c == '-') v << a, Complex(0, -a);
    else if (c == '0') v << 1, 0;
    else if (c == '1') v << 0, 1;
    else if (c == '+') v << a, a;
    else if (c == '-') v << a, -a;
    else throw std::invalid_argument(std::string("product_state: bad label char ") + c);
    qubits.push_back(v);
  }
  if (qubits.empty()) throw std::invalid_argument("product_state: empty");
  Vector out = Vector::Ones(1);
  for (const auto& q : qubits) {
    Vector next(out.size() * 2);
    for (Eigen::Index i = 0; i < out.size(); ++i) {
      next[2 * i] = out[i] * q[0];
      next[2 * i + 1] = out[i] * q[1];
    }
    out = std::move(next);
  }
  return StateVector(static_cast<int>(qubits.size()), std::move(out));
}

}  // namespace septensor
