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

#include "septensor/criterion.hpp"

#include <algorithm>
#include <cmath>

#include "septensor/baselines.hpp"

namespace septensor {

namespace {

constexpr double kResidualTol = 1e-9;

std::string bitstring_label(const AxisTuple& axes, std::uint64_t j) {
  // product-basis ket in the tuple's axes, e.g. |+~-0>
  std::string s = "|";
  const int n = axes.n_qubits();
  for (int k = 0; k < n; ++k) {
    const int bit = static_cast<int>((j >> (n - 1 - k)) & 1);
    switch (axes.axes[static_cast<std::size_t>(k)]) {
      case 1: s += bit ? "-" : "+"; break;
      case 2: s += bit ? "~-" : "~+"; break;
      default: s += bit ? "1" : "0"; break;
    }
  }
  return s + ">";
}

Eigen::Matrix2cd bloch_projector(const Eigen::Vector3d& w, int sign) {
  Eigen::Matrix2cd m = Eigen::Matrix2cd::Identity();
  for (int k = 0; k < 3; ++k) m += static_cast<double>(sign) * w[k] * pauli_matrix(k + 1);
  return 0.5 * m;
}

Matrix kron_chain(const std::vector<Eigen::Matrix2cd>& mats) {
  Matrix out = Matrix::Identity(1, 1);
  for (const auto& m : mats) {
    Matrix next(out.rows() * 2, out.cols() * 2);
    for (Eigen::Index r = 0; r < out.rows(); ++r)
      for (Eigen::Index c = 0; c < out.cols(); ++c) next.block<2, 2>(2 * r, 2 * c) = out(r, c) * m;
    out = std::move(next);
  }
  return out;
}

// Correlation-term member (I + (x)_n w_n.sigma)/2^N as a density matrix.
DensityMatrix correlation_member(int n, const std::vector<Eigen::Vector3d>& dirs) {
  std::vector<Eigen::Matrix2cd> axes;
  for (const auto& w : dirs) axes.push_back(w[0] * pauli_matrix(1) + w[1] * pauli_matrix(2) + w[2] * pauli_matrix(3));
  const auto d = dim_of(n);
  Matrix m = Matrix::Identity(d, d) + kron_chain(axes);
  return DensityMatrix::trusted(n, m / static_cast<double>(d));
}

std::string direction_label(const std::vector<Eigen::Vector3d>& dirs) {
  std::string s;
  for (const auto& w : dirs) {
    int axis = 0;
    double best = 0;
    for (int k = 0; k < 3; ++k)
      if (std::abs(w[k]) > std::abs(best)) {
        best = w[k];
        axis = k;
      }
    if (std::abs(std::abs(best) - 1.0) < 1e-9) {
      const char* axis_names[] = {"X", "Y", "Z"};
      s += best > 0 ? "+" : "-";
      s += axis_names[axis];
    } else {
      char buf[40];
      std::snprintf(buf, sizeof buf, "(%.3f,%.3f,%.3f)", w[0], w[1], w[2]);
      s += buf;
    }
  }
  return s;
}

}  // namespace

CriterionReport evaluate(const DensityMatrix& rho, const EvaluateOptions& opt) {
  const int n = rho.n_qubits();
  if (n > opt.max_qubits) throw std::invalid_argument("evaluate: more qubits than configured maximum");
  CriterionReport rep;
  rep.n_qubits = n;
  const CorrelationTensorR R = correlation_tensor(rho);

  if (n >= 3) {
    rep.rebuild = rebuild(R, opt.rebuild);
  } else {
    // The 2-qubit (and trivially 1-qubit) criterion uses the correlation
    // matrix alone; local Bloch components carry no entanglement strength.
    rep.rebuild.t_core = t_form(R);
    rep.rebuild.t_add = CorrelationTensorT{n, Tensor(n, 3)};
  }
  rep.reduction = smin(rep.rebuild.t_core.values);
  rep.sum_s = rep.reduction.value;
  rep.sum_s_add = rep.rebuild.sum_t_add;
  rep.S = rep.sum_s + rep.sum_s_add;
  rep.boundary = std::abs(rep.S - 1.0) <= opt.verdict_tol;
  rep.verdict = rep.S > 1.0 + opt.verdict_tol ? Verdict::entangled : Verdict::separable;
  rep.feasibility_ok = rep.reduction.singular.feasible && rep.rebuild.feasible;
  return rep;
}

double two_qubit_measure(const DensityMatrix& rho) {
  if (rho.n_qubits() != 2) throw std::invalid_argument("two_qubit_measure: needs exactly 2 qubits");
  const CorrelationTensorT T = t_form(correlation_tensor(rho));
  const double s = matrix_svd_sum(T.values.as_matrix3()).sum;
  return std::max(s - 1.0, 0.0);
}

double noise_threshold(const DensityMatrix& rho_pure, const EvaluateOptions& opt) {
  // purity check: Tr(rho^2) = 1 for pure states
  const double purity = (rho_pure.matrix() * rho_pure.matrix()).trace().real();
  if (std::abs(purity - 1.0) > 1e-9) throw std::invalid_argument("noise_threshold: state is not pure");
  auto S_at = [&](double q) { return evaluate(white_noise_mix(rho_pure, q), opt).S; };
  if (S_at(0.0) <= 1.0) return 0.0;
  double lo = 0.0, hi = 1.0;
  while (hi - lo > 1e-9) {
    const double mid = 0.5 * (lo + hi);
    (S_at(mid) > 1.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

double ghz_S(int n_qubits) {
  if (n_qubits < 2) throw std::invalid_argument("ghz_S: need at least 2 qubits");
  return std::pow(2.0, n_qubits - 1) + 1.0;
}

double ghz_diagonal_S(const std::vector<double>& p) {
  if (p.size() != 8) throw std::invalid_argument("ghz_diagonal_S: need 8 probabilities");
  const double t111 = p[0] - p[1] + p[2] - p[3] + p[4] - p[5] + p[6] - p[7];
  const double t122 = -p[0] + p[1] + p[2] - p[3] + p[4] - p[5] - p[6] + p[7];
  const double t212 = -p[0] + p[1] + p[2] - p[3] - p[4] + p[5] + p[6] - p[7];
  const double t221 = -p[0] + p[1] - p[2] + p[3] + p[4] - p[5] + p[6] - p[7];
  return std::abs(t111) + std::abs(t122) + std::abs(t212) + std::abs(t221) + ghz_diag_tadd(p);
}

Ensemble extract_ensemble(const DensityMatrix& rho, EnsembleLevel level, const EvaluateOptions& opt) {
  const int n = rho.n_qubits();
  const CriterionReport rep = evaluate(rho, opt);
  if (rep.S > 1.0 + 1e-9 || !rep.feasibility_ok)
    throw std::invalid_argument("extract_ensemble: state is not certified separable");

  // Remove the full-weight coefficients delivered through rebuild events; the
  // event projectors carry them together with the consumed non-global parts.
  Tensor core = rep.rebuild.t_core.values;
  for (const auto& e : rep.rebuild.events) {
    if (!e.participates) continue;
    std::vector<int> pos(e.axes.axes.size());
    for (std::size_t k = 0; k < pos.size(); ++k) pos[k] = e.axes.axes[k] - 1;
    core.at(pos) = 0.0;
  }
  std::vector<RankOneTerm> terms;
  if (n >= 2) {
    terms = rank_one_terms(core);
  } else if (core.frobenius_norm() > 1e-12) {
    Eigen::Vector3d w;
    for (int k = 0; k < 3; ++k) w[k] = core[static_cast<std::size_t>(k)];
    terms.push_back({w.norm(), {w.normalized()}});
  }

  const CorrelationTensorR R = correlation_tensor(rho);
  Ensemble out;
  double mass = 0.0;
  for (const auto& e : rep.rebuild.events) {
    const double that = e.hidden_strength;
    if (that <= 1e-12) continue;
    mass += that;
    if (level == EnsembleLevel::mixed) {
      Matrix m = Matrix::Identity(rho.dim(), rho.dim());
      for (const auto& c : e.consumed) m += (R.values.at(c.indices) / that) * pauli_string_matrix(c);
      std::string axes_name;
      {
        std::vector<int> axes(e.axes.axes.begin(), e.axes.axes.end());
        if (e.participates) m += (R.values.at(axes) / that) * pauli_string_matrix(PauliString(axes));
        axes_name = PauliString(axes).name();
      }
      out.members.push_back({that, DensityMatrix::trusted(n, m / static_cast<double>(rho.dim())),
                             "composition " + axes_name});
    } else {
      for (std::uint64_t j = 0; j < e.weights.l.size(); ++j) {
        const double lj = e.weights.l[j];
        if (lj <= 1e-12) continue;
        std::vector<Eigen::Matrix2cd> mats;
        for (int k = 0; k < n; ++k) {
          Eigen::Vector3d w = Eigen::Vector3d::Zero();
          w[e.axes.axes[static_cast<std::size_t>(k)] - 1] = 1.0;
          const int bit = static_cast<int>((j >> (n - 1 - k)) & 1);
          mats.push_back(bloch_projector(w, bit ? -1 : 1));
        }
        out.members.push_back({lj, DensityMatrix::trusted(n, kron_chain(mats)),
                               bitstring_label(e.axes, j)});
      }
    }
  }
  for (const auto& term : terms) {
    mass += term.value;
    if (level == EnsembleLevel::mixed) {
      out.members.push_back({term.value, correlation_member(n, term.directions),
                             "correlation " + direction_label(term.directions)});
    } else {
      // split (I + (x) w.sigma)/2^N into the 2^(N-1) even-parity products
      const std::uint64_t half = std::uint64_t{1} << (n - 1);
      for (std::uint64_t bits = 0; bits < half; ++bits) {
        std::vector<Eigen::Matrix2cd> mats;
        int parity = 1;
        for (int k = 0; k < n - 1; ++k) {
          const int sign = (bits >> (n - 2 - k)) & 1 ? -1 : 1;
          parity *= sign;
          mats.push_back(bloch_projector(term.directions[static_cast<std::size_t>(k)], sign));
        }
        mats.push_back(bloch_projector(term.directions.back(), parity));
        out.members.push_back({term.value / static_cast<double>(half),
                               DensityMatrix::trusted(n, kron_chain(mats)), "product"});
      }
    }
  }
  const double residual = 1.0 - mass;
  if (residual < -kResidualTol)
    throw NumericError("extract_ensemble: delivered mass exceeds one (excluded strengths present?)");
  if (residual > 1e-12)
    out.members.push_back({residual, maximally_mixed(n), "maximally mixed"});

  // The construction is exact for delta-structured tensors; verify.
  const DensityMatrix remixed = mix(out);
  const double err = (remixed.matrix() - rho.matrix()).cwiseAbs().maxCoeff();
  if (err > kResidualTol)
    throw NumericError("extract_ensemble: reconstruction residual " + std::to_string(err));
  return out;
}

RobustnessCurve robustness_curve(int n_qubits, RobustnessVariant variant,
                                 const std::vector<double>& grid, bool find_zero) {
  if (n_qubits < 2) throw std::invalid_argument("robustness_curve: need at least 2 qubits");
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (grid[i] < 0.0 || grid[i] > 1.0) throw std::invalid_argument("robustness_curve: q outside [0,1]");
    if (i > 0 && grid[i] <= grid[i - 1]) throw std::invalid_argument("robustness_curve: grid not increasing");
  }
  const double SN = ghz_S(n_qubits);
  auto closed = [&](double q) {
    const double shat = SN * std::pow(1.0 - q, n_qubits);
    switch (variant) {
      case RobustnessVariant::E: return std::max((shat - 1.0) / (SN - 1.0), 0.0);
      case RobustnessVariant::E_prime: return (shat - 1.0) / (SN - 1.0);
      case RobustnessVariant::E_double_prime: return shat - 1.0;
      default: break;
    }
    // negativity of the channel-evolved GHZ state across the balanced cut.
    if (n_qubits > 8) throw std::invalid_argument("robustness_curve: negativity needs N <= 8");
    DensityMatrix rho = density_from_state(ghz_state(n_qubits));
    const KrausChannel ch = KrausChannel::depolarizing(q);
    for (int k = 0; k < n_qubits; ++k) rho = apply_channel(rho, ch, k);
    std::vector<int> left;
    for (int k = 0; k < n_qubits / 2; ++k) left.push_back(k);
    return negativity(rho, Bipartition(left, n_qubits));
  };
  RobustnessCurve out;
  out.variant = variant;
  out.n_qubits = n_qubits;
  for (double q : grid) out.samples.emplace_back(q, closed(q));
  if (find_zero) {
    double lo = 0.0, hi = 1.0;
    if (closed(lo) > 0.0) {
      while (hi - lo > 1e-9) {
        const double mid = 0.5 * (lo + hi);
        (closed(mid) > 0.0 ? lo : hi) = mid;
      }
      out.zero_crossing = 0.5 * (lo + hi);
    }
  }
  return out;
}

}  // namespace septensor
