// Copyright 2026 The ncgap Authors
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

#include "ncgap/ic.hpp"

#include <algorithm>
#include <limits>
#include <set>

#include "ncgap/error.hpp"

namespace ncgap {

bool ic_is_valid(const IndependentConfiguration& c, unsigned alpha) {
  if (alpha < 1 || alpha > c.h) return false;
  const std::size_t width = c.h * c.t;
  std::set<Subspace> distinct;
  for (const Subspace& s : c.members) {
    if (!(s.field() == c.field) || s.ambient() != width || s.dim() != c.t) return false;
    if (!distinct.insert(s).second) return false;
  }
  if (c.members.size() < alpha) return true;
  std::vector<std::size_t> idx(alpha);
  for (std::size_t i = 0; i < alpha; ++i) idx[i] = i;
  const std::size_t n = c.members.size();
  while (true) {
    std::vector<Subspace> parts;
    for (std::size_t i : idx) parts.push_back(c.members[i]);
    if (sum_dim(parts) != alpha * c.t) return false;
    std::size_t i = alpha;
    while (i > 0 && idx[i - 1] == n - alpha + (i - 1)) --i;
    if (i == 0) return true;
    ++idx[i - 1];
    for (std::size_t j = i; j < alpha; ++j) idx[j] = idx[j - 1] + 1;
  }
}

std::uint64_t ic_size_bound(std::uint64_t q, std::size_t t, unsigned h, unsigned alpha) {
  if (alpha < 2 || alpha > h) throw InvalidArgument("the IC size bound needs 2 <= alpha <= h");
  constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
  auto qpow = [&](std::uint64_t e) {
    std::uint64_t v = 1;
    for (std::uint64_t i = 0; i < e; ++i) {
      if (v > kMax / q) throw LimitExceeded("IC size bound overflows");
      v *= q;
    }
    return v;
  };
  return (qpow(static_cast<std::uint64_t>(h - alpha + 2) * t) - 1) / (qpow(t) - 1) + alpha - 2;
}

namespace {

class ICSearch {
 public:
  ICSearch(std::vector<Subspace> universe, std::size_t t, unsigned alpha, std::size_t target, std::size_t ceiling,
           BudgetMeter& meter)
      : u_(std::move(universe)), t_(t), alpha_(alpha), target_(target), ceiling_(ceiling), meter_(meter) {
    sums_.resize(alpha_);  // sums_[j]: sums of j-subsets of the members
    sums_[0].push_back(Subspace::zero(u_.front().field(), u_.front().ambient()));
  }

  void run(const std::vector<std::size_t>& pinned) {
    std::vector<std::size_t> cand;
    for (std::size_t i = 0; i < u_.size(); ++i) cand.push_back(i);
    for (std::size_t p : pinned) {
      if (!compatible(p)) return;
      add(p);
      std::vector<std::size_t> next;
      for (std::size_t c : cand)
        if (c != p && std::find(pinned.begin(), pinned.end(), c) == pinned.end() && compatible(c)) next.push_back(c);
      cand.swap(next);
    }
    record();
    dfs(cand);
  }

  bool done() const { return best_.size() >= ceiling_ || (target_ && best_.size() >= target_); }
  const std::vector<std::size_t>& best() const { return best_; }

 private:
  bool compatible(std::size_t c) const {
    for (const Subspace& s : sums_[alpha_ - 1])
      if (sum_dim(s, u_[c]) != alpha_ * t_) return false;
    return true;
  }

  void add(std::size_t c) {
    members_.push_back(c);
    for (std::size_t j = alpha_ - 1; j >= 1; --j) {
      const std::size_t have = sums_[j - 1].size();
      for (std::size_t i = 0; i < have; ++i) sums_[j].push_back(sum(sums_[j - 1][i], u_[c]));
    }
  }

  void record() {
    if (members_.size() > best_.size()) best_ = members_;
  }

  void dfs(const std::vector<std::size_t>& cand) {
    if (done()) return;
    for (std::size_t k = 0; k < cand.size(); ++k) {
      if (members_.size() + (cand.size() - k) <= best_.size()) return;
      if (!meter_.charge()) return;
      std::vector<std::size_t> mark;
      for (const auto& s : sums_) mark.push_back(s.size());
      add(cand[k]);
      record();
      std::vector<std::size_t> next;
      for (std::size_t i = k + 1; i < cand.size(); ++i)
        if (compatible(cand[i])) next.push_back(cand[i]);
      dfs(next);
      members_.pop_back();
      for (std::size_t j = 0; j < sums_.size(); ++j) sums_[j].resize(mark[j]);
      if (done() || meter_.exhausted()) return;
    }
  }

  std::vector<Subspace> u_;
  std::size_t t_;
  unsigned alpha_;
  std::size_t target_;
  std::size_t ceiling_;
  BudgetMeter& meter_;
  std::vector<std::vector<Subspace>> sums_;
  std::vector<std::size_t> members_;
  std::vector<std::size_t> best_;
};

ICSearchResult ic_search(std::uint64_t q, std::size_t t, unsigned h, unsigned alpha, std::size_t target,
                         const Budget& budget, const Limits& limits) {
  if (h < 1 || t < 1) throw InvalidArgument("IC search needs h, t >= 1");
  if (alpha < 1 || alpha > h) throw InvalidArgument("IC search needs 1 <= alpha <= h");
  const FieldSpec f = make_field_of_order(q, limits);
  std::vector<Subspace> universe = enumerate_subspaces(f, h * t, t, limits);
  ICSearchResult res;
  res.witness = IndependentConfiguration{f, t, h, {}};
  res.bound = alpha >= 2 ? ic_size_bound(q, t, h, alpha) : universe.size();

  BudgetMeter meter(budget);
  std::vector<std::size_t> best;
  if (alpha == 1) {
    // any distinct t-subspaces qualify
    for (std::size_t i = 0; i < universe.size(); ++i) best.push_back(i);
    if (target && best.size() > target) best.resize(target);
  } else if (target == 0 || target <= res.bound) {
    // span(e_1..e_t) comes first in canonical order; the complement
    // span(e_{t+1}..e_{2t}) is located by value.
    Matrix second(f, t, h * t);
    for (std::size_t i = 0; i < t; ++i) second.set(i, t + i, f.one());
    const auto it = std::lower_bound(universe.begin(), universe.end(), Subspace::span(second));
    const std::size_t second_idx = static_cast<std::size_t>(it - universe.begin());
    const std::size_t ceiling = static_cast<std::size_t>(std::min<std::uint64_t>(res.bound, universe.size()));
    ICSearch s(universe, t, alpha, target, ceiling, meter);
    std::vector<std::size_t> pinned{0};
    if (universe.size() > 1) pinned.push_back(second_idx);
    s.run(pinned);
    best = s.best();
  }
  for (std::size_t i : best) res.witness.members.push_back(universe[i]);
  res.best = best.size();
  res.nodes = meter.used();
  res.exact = !meter.exhausted() || res.best == res.bound;
  if (target) {
    if (res.best >= target) {
      res.outcome = Outcome::found;
      res.witness.members.resize(target);
      res.best = target;
    } else {
      res.outcome = res.exact ? Outcome::none : Outcome::unknown;
    }
  } else {
    res.outcome = res.exact ? Outcome::found : Outcome::unknown;
  }
  return res;
}

}  // namespace

ICSearchResult ic_max_size(std::uint64_t q, std::size_t t, unsigned h, unsigned alpha, const Budget& budget,
                           const Limits& limits) {
  return ic_search(q, t, h, alpha, 0, budget, limits);
}

ICSearchResult ic_find(std::uint64_t q, std::size_t t, unsigned h, unsigned alpha, std::size_t size,
                       const Budget& budget, const Limits& limits) {
  if (size == 0) throw InvalidArgument("IC target size must be >= 1");
  return ic_search(q, t, h, alpha, size, budget, limits);
}

NetworkCode ic_to_solution(const IndependentConfiguration& c) {
  if (!ic_is_valid(c, c.h)) throw InvalidArgument("not a valid IC with alpha = h");
  const Network n = build_combination(c.h, c.members.size(), c.h);
  std::vector<Matrix> rows;
  for (const Subspace& s : c.members) rows.push_back(padded_basis(s, c.t));
  return forward_code(n, c.field, c.t, rows);
}

IndependentConfiguration solution_to_ic(const Network& n, const NetworkCode& code) {
  const Verdict v = verify_solution(n, code);
  if (!v.accepted) throw InvalidArgument("code is not a solution: " + v.first_violation);
  IndependentConfiguration out{code.field, code.t, code.h, {}};
  for (EdgeId e : n.out_edges(n.source())) {
    out.members.push_back(Subspace::span(node_matrix(n, code, n.edge(e).to)));
  }
  return out;
}

}  // namespace ncgap
