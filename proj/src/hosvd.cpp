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

#include "septensor/hosvd.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "septensor/qcore.hpp"

namespace septensor {

namespace {

// Left singular vectors of the mode unfolding via its 3x3 Gram matrix,
// ordered by descending singular value, sign-fixed deterministically.
Eigen::MatrixXd mode_factor(const Tensor& t, int mode) {
  const Eigen::MatrixXd a = t.unfold(mode);
  const Eigen::MatrixXd gram = a * a.transpose();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(gram);
  if (es.info() != Eigen::Success) throw NumericError("hosvd: mode eigensolve failed");
  const int d = t.dim();
  Eigen::MatrixXd p(d, d);
  for (int c = 0; c < d; ++c) {
    Eigen::VectorXd v = es.eigenvectors().col(d - 1 - c);  // descending
    int arg = 0;
    v.cwiseAbs().maxCoeff(&arg);
    if (v[arg] < 0) v = -v;
    p.col(c) = v;
  }
  return p;
}

Tensor permute_modes(const Tensor& t, const std::vector<int>& perm) {
  Tensor out(t.order(), t.dim());
  std::vector<int> src(t.order());
  for (std::size_t lin = 0; lin < out.size(); ++lin) {
    const auto idx = out.multi_index(lin);
    for (int k = 0; k < t.order(); ++k) src[static_cast<std::size_t>(perm[static_cast<std::size_t>(k)])] = idx[static_cast<std::size_t>(k)];
    out[lin] = t.at(src);
  }
  return out;
}

}  // namespace

SvdSum matrix_svd_sum(const Eigen::Matrix3d& m) {
  if (!m.allFinite()) throw std::invalid_argument("matrix_svd_sum: non-finite entries");
  Eigen::JacobiSVD<Eigen::Matrix3d> svd(m);
  SvdSum out{};
  double total = 0;
  for (int i = 0; i < 3; ++i) {
    double s = svd.singularValues()[i];
    if (s < kSvdFloor) s = 0.0;
    out.values[static_cast<std::size_t>(i)] = s;
    total += s;
  }
  out.sum = total;
  return out;
}

Tensor HosvdResult::reconstruct() const {
  Tensor out = core;
  for (int mode = 0; mode < core.order(); ++mode)
    out = out.mode_product(factors[static_cast<std::size_t>(mode)], mode);
  return out;
}

HosvdResult hosvd(const Tensor& t) {
  if (t.order() < 2) throw std::invalid_argument("hosvd: order must be >= 2");
  HosvdResult res;
  res.factors.reserve(static_cast<std::size_t>(t.order()));
  for (int mode = 0; mode < t.order(); ++mode) {
    res.factors.push_back(mode_factor(t, mode));
    res.factor_determinants.push_back(res.factors.back().determinant());
  }
  res.core = t;
  for (int mode = 0; mode < t.order(); ++mode)
    res.core = res.core.mode_product(res.factors[static_cast<std::size_t>(mode)].transpose(), mode);
  return res;
}

std::vector<ReducedSlice> iterate_reduce(const Tensor& t) {
  if (t.order() < 2) throw std::invalid_argument("iterate_reduce: order must be >= 2");
  if (t.order() == 2) {
    ReducedSlice s{{}, t.as_matrix3(), {}};
    s.svd = matrix_svd_sum(s.matrix);
    return {std::move(s)};
  }
  // The slices of subtensors are not orthogonal in general, so each branch is
  // re-decomposed before the next split.
  const HosvdResult h = hosvd(t);
  std::vector<ReducedSlice> out;
  for (int a = 0; a < t.dim(); ++a) {
    const Tensor sub = h.core.slice_last(a);
    for (ReducedSlice& s : iterate_reduce(sub)) {
      s.fixed.push_back(a);
      out.push_back(std::move(s));
    }
  }
  return out;
}

SminResult smin(const Tensor& t) {
  SminResult res;
  if (t.order() == 1) {
    // Degenerate single-qubit case: minimal sum over rotations is the norm.
    Eigen::Vector3d v;
    for (int i = 0; i < 3; ++i) v[i] = t[static_cast<std::size_t>(i)];
    res.value = v.norm();
    res.singular.values = Tensor(1, 3);
    res.singular.values[0] = res.value;
    res.singular.smin = res.value;
    res.singular.feasible = res.value <= 1 + 1e-9;
    return res;
  }
  res.slices = iterate_reduce(t);
  res.singular.values = Tensor(t.order(), 3);
  std::vector<int> pos(static_cast<std::size_t>(t.order()));
  for (const auto& slice : res.slices) {
    int shift = 0;
    for (int f : slice.fixed) shift += f;
    for (int r = 0; r < 3; ++r) {
      const double s = slice.svd.values[static_cast<std::size_t>(r)];
      res.value += s;
      if (s <= kSvdFloor) continue;
      if (s > 1 + 1e-9) res.singular.feasible = false;
      pos[0] = r;
      pos[1] = (r + shift) % 3;
      for (std::size_t k = 0; k < slice.fixed.size(); ++k) pos[k + 2] = slice.fixed[k];
      res.singular.values.at(pos) += s;
    }
  }
  res.singular.smin = res.value;

  // delta structure: a nonzero entry must be alone on its fiber along every mode.
  const Tensor& sv = res.singular.values;
  for (std::size_t lin = 0; lin < sv.size() && res.singular.delta_ok; ++lin) {
    if (sv[lin] <= kSvdFloor) continue;
    const auto idx = sv.multi_index(lin);
    auto probe = idx;
    for (int mode = 0; mode < sv.order() && res.singular.delta_ok; ++mode) {
      for (int v = 0; v < 3; ++v) {
        if (v == idx[static_cast<std::size_t>(mode)]) continue;
        probe[static_cast<std::size_t>(mode)] = v;
        if (sv.at(probe) > kSvdFloor) res.singular.delta_ok = false;
      }
      probe[static_cast<std::size_t>(mode)] = idx[static_cast<std::size_t>(mode)];
    }
  }
  return res;
}

std::vector<RankOneTerm> rank_one_terms(const Tensor& t) {
  if (t.order() == 2) {
    Eigen::JacobiSVD<Eigen::Matrix3d> svd(t.as_matrix3(), Eigen::ComputeFullU | Eigen::ComputeFullV);
    std::vector<RankOneTerm> out;
    for (int r = 0; r < 3; ++r) {
      const double s = svd.singularValues()[r];
      if (s <= kSvdFloor) continue;
      out.push_back({s, {svd.matrixU().col(r), svd.matrixV().col(r)}});
    }
    return out;
  }
  const HosvdResult h = hosvd(t);
  std::vector<RankOneTerm> out;
  const int order = t.order();
  for (int a = 0; a < t.dim(); ++a) {
    const Eigen::Vector3d w_last = h.factors.back().col(a);
    for (const RankOneTerm& sub : rank_one_terms(h.core.slice_last(a))) {
      RankOneTerm term;
      term.value = sub.value;
      term.directions.reserve(static_cast<std::size_t>(order));
      for (int k = 0; k + 1 < order; ++k)
        term.directions.push_back(h.factors[static_cast<std::size_t>(k)] * sub.directions[static_cast<std::size_t>(k)]);
      term.directions.push_back(w_last);
      out.push_back(std::move(term));
    }
  }
  return out;
}

double smin_over_orders(const Tensor& t) {
  if (t.order() > 4) throw std::invalid_argument("smin_over_orders: order too large");
  std::vector<int> perm(static_cast<std::size_t>(t.order()));
  std::iota(perm.begin(), perm.end(), 0);
  double best = std::numeric_limits<double>::infinity();
  do {
    best = std::min(best, smin(permute_modes(t, perm)).value);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

}  // namespace septensor
