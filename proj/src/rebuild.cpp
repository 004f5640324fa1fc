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

#include "septensor/rebuild.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

namespace septensor {

namespace {

constexpr double kFeasTol = 1e-9;
constexpr double kGainTol = 1e-11;

struct Coefficient {
  std::vector<int> indices;  // with zeros on the identity qubits
  double value = 0.0;
};

bool tuple_compatible(const std::vector<int>& coeff, const std::vector<int>& axes) {
  for (std::size_t k = 0; k < coeff.size(); ++k)
    if (coeff[k] != 0 && coeff[k] != axes[k]) return false;
  return true;
}

// Raw (un-gauged) weight vector for a set of (indices, value) rows.
std::vector<double> compose_raw(int n, const std::vector<const Coefficient*>& rows) {
  const std::uint64_t cols = std::uint64_t{1} << n;
  std::vector<double> l(cols, 0.0);
  for (const Coefficient* row : rows) {
    const int sign = row->value >= 0 ? 1 : -1;
    const double w = std::abs(row->value) / static_cast<double>(cols / 2);
    std::uint64_t mask = 0;
    for (int k = 0; k < n; ++k)
      if (row->indices[static_cast<std::size_t>(k)] != 0) mask |= std::uint64_t{1} << (n - 1 - k);
    for (std::uint64_t j = 0; j < cols; ++j) {
      const int par = (std::popcount(j & mask) % 2 == 0) ? 1 : -1;
      if (par == sign) l[j] += w;
    }
  }
  return l;
}

struct EventCandidate {
  RebuildEvent event;
  double gain = 0.0;  // gauge mass removed by the completeness relation
};

// Builds the event for `axes` consuming `group`; the tuple's own full-weight
// coefficient joins the composition whenever it is nonzero.
std::optional<EventCandidate> make_event(const CorrelationTensorR& R, const std::vector<int>& axes,
                                         const std::vector<const Coefficient*>& group,
                                         double coeff_tol) {
  const int n = R.n_qubits;
  const double full = R.values.at(axes);
  Coefficient full_row{axes, full};
  std::vector<const Coefficient*> rows = group;
  const bool participates = std::abs(full) > coeff_tol;
  if (participates) rows.push_back(&full_row);

  std::vector<double> l = compose_raw(n, rows);
  const double gain = *std::min_element(l.begin(), l.end());
  for (double& v : l) v -= gain;
  double that = 0;
  for (double v : l) that += v;
  if (that > 1 + kFeasTol) return std::nullopt;
  const double t_add = that - std::abs(full);
  if (t_add < -kFeasTol) return std::nullopt;

  EventCandidate out;
  out.gain = gain * static_cast<double>(l.size());
  out.event.axes = AxisTuple(axes);
  for (const Coefficient* c : group) out.event.consumed.emplace_back(c->indices);
  out.event.weights.l = std::move(l);
  out.event.weights.feasible = true;
  out.event.hidden_strength = that;
  out.event.t_add = std::max(t_add, 0.0);
  out.event.participates = participates;
  return out;
}

std::vector<std::vector<int>> candidate_tuples(int n, const std::vector<Coefficient>& coeffs) {
  std::vector<std::vector<int>> cand;
  std::vector<int> axes(static_cast<std::size_t>(n), 1);
  while (true) {
    for (const auto& c : coeffs)
      if (tuple_compatible(c.indices, axes)) {
        cand.push_back(axes);
        break;
      }
    int k = n - 1;
    for (; k >= 0; --k) {
      if (axes[static_cast<std::size_t>(k)] < 3) {
        ++axes[static_cast<std::size_t>(k)];
        std::fill(axes.begin() + k + 1, axes.end(), 1);
        break;
      }
    }
    if (k < 0) break;
  }
  return cand;
}

// Greedy allocation: tuples ordered by how many unconsumed coefficients they
// cover (intersection priority), lexicographic on ties. The first pass only
// accepts groupings whose gauge reduction genuinely pools mass; the second
// pass settles the leftovers as single-coefficient events.
void greedy_allocate(const CorrelationTensorR& R, const std::vector<Coefficient>& coeffs,
                     const std::vector<std::vector<int>>& cand, const RebuildOptions& opt,
                     RebuildResult& out) {
  const std::size_t nc = coeffs.size();
  std::vector<bool> consumed(nc, false);
  std::size_t remaining = nc;

  for (int pass = 0; pass < 2 && remaining > 0; ++pass) {
    std::vector<bool> open(cand.size(), true);
    if (pass == 1) {
      // Reopen everything except tuples already carrying an event.
      for (std::size_t t = 0; t < cand.size(); ++t)
        for (const auto& e : out.events)
          if (e.axes.axes == cand[t]) open[t] = false;
    }
    while (remaining > 0) {
      int best_count = 0;
      std::size_t best_t = cand.size();
      for (std::size_t t = 0; t < cand.size(); ++t) {
        if (!open[t]) continue;
        int count = 0;
        for (std::size_t c = 0; c < nc; ++c)
          if (!consumed[c] && tuple_compatible(coeffs[c].indices, cand[t])) ++count;
        if (count > best_count) {
          best_count = count;
          best_t = t;
        }
      }
      if (best_count == 0) break;
      open[best_t] = false;
      std::vector<const Coefficient*> group;
      std::vector<std::size_t> group_ids;
      for (std::size_t c = 0; c < nc; ++c)
        if (!consumed[c] && tuple_compatible(coeffs[c].indices, cand[best_t])) {
          group.push_back(&coeffs[c]);
          group_ids.push_back(c);
        }
      auto ev = make_event(R, cand[best_t], group, opt.coeff_tol);
      if (!ev) continue;  // infeasible tuple: skipped, coefficients stay
      if (pass == 0) {
        // A composition that pools no mass is no better than leaving the
        // coefficients as independent strengths; keep them separate so the
        // extracted ensembles stay in single-correlation form.
        const std::size_t rows = group.size() + (ev->event.participates ? 1 : 0);
        if (rows > 1 && ev->gain <= kGainTol) continue;
      }
      out.events.push_back(std::move(ev->event));
      for (std::size_t c : group_ids) consumed[c] = true;
      remaining -= group_ids.size();
    }
  }
  for (std::size_t c = 0; c < nc; ++c)
    if (!consumed[c]) out.unconsumed.emplace_back(coeffs[c].indices);
}

// Exhaustive allocation over per-coefficient tuple assignments, minimizing the
// total additive strength; ties prefer fewer events, then the lexicographically
// smallest assignment. Falls back to nullopt when over budget or when no
// feasible assignment exists.
std::optional<std::vector<RebuildEvent>> exhaustive_allocate(const CorrelationTensorR& R,
                                                             const std::vector<Coefficient>& coeffs,
                                                             const std::vector<std::vector<int>>& cand,
                                                             const RebuildOptions& opt) {
  const std::size_t nc = coeffs.size();
  std::vector<std::vector<std::size_t>> options(nc);
  std::size_t total = 1;
  for (std::size_t c = 0; c < nc; ++c) {
    for (std::size_t t = 0; t < cand.size(); ++t)
      if (tuple_compatible(coeffs[c].indices, cand[t])) options[c].push_back(t);
    if (options[c].empty()) return std::nullopt;
    if (total > opt.assignment_budget / options[c].size()) return std::nullopt;
    total *= options[c].size();
  }

  std::vector<std::size_t> assign(nc, 0);
  std::optional<std::pair<double, std::size_t>> best_key;  // (cost, events)
  std::optional<std::vector<RebuildEvent>> best;
  while (true) {
    std::map<std::size_t, std::vector<const Coefficient*>> groups;
    for (std::size_t c = 0; c < nc; ++c) groups[options[c][assign[c]]].push_back(&coeffs[c]);
    double cost = 0;
    bool ok = true;
    std::vector<RebuildEvent> events;
    for (const auto& [t, group] : groups) {
      auto ev = make_event(R, cand[t], group, opt.coeff_tol);
      if (!ev) {
        ok = false;
        break;
      }
      cost += ev->event.t_add;
      events.push_back(std::move(ev->event));
    }
    if (ok) {
      const std::pair<double, std::size_t> key{cost, events.size()};
      if (!best_key || key.first < best_key->first - 1e-12 ||
          (std::abs(key.first - best_key->first) <= 1e-12 && key.second < best_key->second)) {
        best_key = key;
        best = std::move(events);
      }
    }
    // odometer over assignments (last coefficient fastest)
    std::size_t k = nc;
    while (k > 0) {
      --k;
      if (++assign[k] < options[k].size()) break;
      assign[k] = 0;
      if (k == 0) return best;
    }
    if (nc == 0) return best;
  }
}

}  // namespace

AxisTuple::AxisTuple(std::vector<int> a) : axes(std::move(a)) {
  for (int v : axes)
    if (v < 1 || v > 3) throw std::invalid_argument("AxisTuple: axis outside {1,2,3}");
}

double WeightVector::sum() const {
  double s = 0;
  for (double v : l) s += v;
  return s;
}

int parity_character(const AxisTuple& a, const std::set<int>& support, std::uint64_t column) {
  const int n = a.n_qubits();
  int par = 1;
  for (int k : support) {
    if (k < 0 || k >= n) throw std::invalid_argument("parity_character: qubit out of range");
    if ((column >> (n - 1 - k)) & 1) par = -par;
  }
  return par;
}

WeightVector compose_weights(const AxisTuple& a, const std::map<std::set<int>, double>& coeffs) {
  const int n = a.n_qubits();
  std::vector<Coefficient> rows;
  for (const auto& [support, value] : coeffs) {
    if (support.empty() || static_cast<int>(support.size()) == n)
      throw std::invalid_argument("compose_weights: subsets must be nonempty and proper");
    Coefficient c;
    c.indices.assign(static_cast<std::size_t>(n), 0);
    for (int k : support) {
      if (k < 0 || k >= n) throw std::invalid_argument("compose_weights: qubit out of range");
      c.indices[static_cast<std::size_t>(k)] = a.axes[static_cast<std::size_t>(k)];
    }
    c.value = value;
    rows.push_back(std::move(c));
  }
  std::vector<const Coefficient*> ptrs;
  for (const auto& r : rows) ptrs.push_back(&r);
  WeightVector out;
  out.l = compose_raw(n, ptrs);
  const double gauge = *std::min_element(out.l.begin(), out.l.end());
  for (double& v : out.l) v -= gauge;
  out.feasible = out.sum() <= 1 + kFeasTol;
  return out;
}

double hidden_strength(const AxisTuple& a, const WeightVector& l, const std::set<int>& target) {
  // |parity| = 1 on every column, so the target row collects the full weight.
  (void)a;
  (void)target;
  double s = 0;
  for (double v : l.l) s += v;
  return s;
}

RebuildResult rebuild(const CorrelationTensorR& R, const RebuildOptions& opt) {
  const int n = R.n_qubits;
  RebuildResult out;
  out.t_core = t_form(R);
  out.t_add = CorrelationTensorT{n, Tensor(n, 3)};

  std::vector<Coefficient> coeffs;
  for (std::size_t lin = 0; lin < R.values.size(); ++lin) {
    if (std::abs(R.values[lin]) <= opt.coeff_tol) continue;
    const auto idx = R.values.multi_index(lin);
    const int weight = static_cast<int>(std::count_if(idx.begin(), idx.end(), [](int v) { return v != 0; }));
    if (weight == 0 || weight == n) continue;
    coeffs.push_back({idx, R.values[lin]});
  }
  if (coeffs.empty()) return out;

  const auto cand = candidate_tuples(n, coeffs);
  bool done = false;
  if (static_cast<int>(cand.size()) <= opt.exhaustive_limit) {
    if (auto events = exhaustive_allocate(R, coeffs, cand, opt)) {
      out.events = std::move(*events);
      out.used_exhaustive = true;
      done = true;
    }
  }
  if (!done) greedy_allocate(R, coeffs, cand, opt, out);

  // An event is anchored to the global correlations when it pools several
  // coefficients, when its tuple's own full-weight coefficient is nonzero, or
  // when one of its coefficients could have fed such a tuple. A lone strength
  // with no full-weight connection stays out of S unless strict mode asks.
  for (auto& e : out.events) {
    bool anchored = e.consumed.size() > 1 || e.participates;
    if (!anchored) {
      const auto& idx = e.consumed.front().indices;
      std::vector<int> axes(idx.begin(), idx.end());
      std::vector<std::size_t> free_slots;
      for (std::size_t k = 0; k < axes.size(); ++k)
        if (axes[k] == 0) free_slots.push_back(k);
      // scan the tuples this coefficient fits for a nonzero full coefficient
      std::vector<int> counter(free_slots.size(), 1);
      while (!anchored) {
        for (std::size_t k = 0; k < free_slots.size(); ++k) axes[free_slots[k]] = counter[k];
        if (std::abs(R.values.at(axes)) > opt.coeff_tol) anchored = true;
        std::size_t k = free_slots.size();
        bool wrapped = true;
        while (k > 0) {
          --k;
          if (++counter[k] <= 3) {
            wrapped = false;
            break;
          }
          counter[k] = 1;
        }
        if (wrapped) break;
      }
    }
    e.anchored = anchored || opt.strict_nonglobal;
    if (e.anchored)
      out.sum_t_add += e.t_add;
    else
      out.excluded_strength += e.t_add;
  }
  // place strengths in the additive tensor (axes are 1-based)
  for (const auto& e : out.events) {
    std::vector<int> pos(e.axes.axes.size());
    for (std::size_t k = 0; k < pos.size(); ++k) pos[k] = e.axes.axes[k] - 1;
    out.t_add.values.at(pos) += e.anchored ? e.t_add : 0.0;
  }
  out.feasible = out.unconsumed.empty();
  return out;
}

double ghz_diag_tadd(const std::vector<double>& p) {
  if (p.size() != 8) throw std::invalid_argument("ghz_diag_tadd: need 8 probabilities");
  double total = 0;
  for (double v : p) {
    if (v < -1e-12) throw std::invalid_argument("ghz_diag_tadd: negative probability");
    total += v;
  }
  if (std::abs(total - 1.0) > 1e-9)
    throw std::invalid_argument("ghz_diag_tadd: probabilities do not sum to one");
  const double m = std::min(std::min(p[0] + p[1], p[2] + p[3]), std::min(p[4] + p[5], p[6] + p[7]));
  return std::max(0.0, 1.0 - 4.0 * m);
}

}  // namespace septensor
