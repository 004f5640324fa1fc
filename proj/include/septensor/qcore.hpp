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
#include <complex>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace septensor {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// Raised when a numeric result violates an invariant it should satisfy
/// (imaginary residue too large, reconstruction not PSD, ...).
struct NumericError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Raised when an input fails a state invariant (norm, trace, PSD, ...).
struct InvalidState : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline constexpr double kHermTol = 1e-12;
inline constexpr double kTraceTol = 1e-12;
inline constexpr double kPsdTol = 1e-10;  // round-off slack from channel application

inline std::int64_t dim_of(int n_qubits) { return std::int64_t{1} << n_qubits; }

/// Pure n-qubit state; qubit 0 is the leftmost tensor factor.
class StateVector {
 public:
  StateVector(int n_qubits, Vector amplitudes);

  int n_qubits() const { return n_qubits_; }
  const Vector& amplitudes() const { return amps_; }

 private:
  int n_qubits_;
  Vector amps_;
};

/// Hermitian, unit-trace, PSD 2^n x 2^n operator.
class DensityMatrix {
 public:
  /// Validates Hermiticity, trace and (for moderate dimensions) positivity.
  DensityMatrix(int n_qubits, Matrix entries);

  int n_qubits() const { return n_qubits_; }
  std::int64_t dim() const { return dim_of(n_qubits_); }
  const Matrix& matrix() const { return mat_; }

  /// Constructs without the O(d^3) eigenvalue check; Hermiticity and trace
  /// are still asserted. For internal paths that preserve positivity.
  static DensityMatrix trusted(int n_qubits, Matrix entries);

  double min_eigenvalue() const;

 private:
  DensityMatrix() = default;
  int n_qubits_ = 0;
  Matrix mat_;
};

/// Indices over {0,1,2,3}: 0 = identity, 1..3 = x,y,z Pauli axes.
struct PauliString {
  std::vector<int> indices;

  explicit PauliString(std::vector<int> idx);
  int n_qubits() const { return static_cast<int>(indices.size()); }
  /// Number of non-identity factors.
  int weight() const;
  std::string name() const;  // e.g. "IXZ"
};

/// Kraus channel on a single qubit: sum_k E_k^dag E_k = I.
struct KrausChannel {
  std::vector<Eigen::Matrix2cd> operators;

  explicit KrausChannel(std::vector<Eigen::Matrix2cd> ops);
  static KrausChannel depolarizing(double q);
};

struct EnsembleMember {
  double probability;
  DensityMatrix state;
  std::string label;  // human-readable, e.g. "|+~-0>" or a correlation tag
};

/// Convex combination of states; probabilities sum to one.
struct Ensemble {
  std::vector<EnsembleMember> members;

  double total_probability() const;
};

Eigen::Matrix2cd pauli_matrix(int index);
Matrix pauli_string_matrix(const PauliString& p);

/// Expectation Tr(sigma_string rho), computed in O(2^n) per string.
Complex pauli_expectation(const PauliString& p, const DensityMatrix& rho);

DensityMatrix density_from_state(const StateVector& psi);
DensityMatrix mix(const Ensemble& e);
DensityMatrix white_noise_mix(const DensityMatrix& rho, double q);

Matrix partial_transpose(const DensityMatrix& rho, const std::vector<int>& subset);

DensityMatrix apply_channel(const DensityMatrix& rho, const KrausChannel& ch, int qubit);

/// Haar-random pure state from normalized complex Gaussian amplitudes.
StateVector random_pure_state(int n_qubits, std::mt19937_64& rng);
/// Haar-random SU(2) element (unit quaternion parametrization).
Eigen::Matrix2cd random_local_unitary(std::mt19937_64& rng);
/// Random mixed state: normalized G G^dag with G a 2^n x rank Ginibre matrix.
DensityMatrix random_density_matrix(int n_qubits, int rank, std::mt19937_64& rng);

// Named states used throughout the tests and the CLI catalog.
StateVector ghz_state(int n_qubits);
StateVector w_state(int n_qubits);
StateVector bell_state(const std::string& which);  // phi+, phi-, psi+, psi-
DensityMatrix maximally_mixed(int n_qubits);
DensityMatrix werner_state(double q);
/// Mixture of the eight 3-qubit GHZ-type basis states.
DensityMatrix ghz_diagonal_state(const std::vector<double>& p);
/// Product state from per-qubit labels in {0,1,+,-,r,l}, r/l being the +/- y
/// eigenstates (printed as ~+ and ~-).
StateVector product_state(const std::string& labels);

}  // namespace septensor
