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

#include "ncgap/gap.hpp"

#include <algorithm>
#include <limits>
#include <set>

#include "ncgap/error.hpp"
#include "ncgap/qkneser.hpp"
#include "ncgap/skeleton.hpp"

namespace ncgap {

bool is_prime_power(std::uint64_t n) {
  if (n < 2) return false;
  auto strip = [&](std::uint64_t p) {
    while (n % p == 0) n /= p;
    return n == 1;
  };
  if (n % 2 == 0) return strip(2);
  if (n % 3 == 0) return strip(3);
  for (std::uint64_t p = 5; p * p <= n; p += 6) {
    if (n % p == 0) return strip(p);
    if (n % (p + 2) == 0) return strip(p + 2);
  }
  return true;  // n itself is prime
}

std::uint64_t psi(std::uint64_t x) {
  if (x == 0) throw InvalidArgument("psi needs a positive argument");
  std::uint64_t n = std::max<std::uint64_t>(x, 2);
  while (!is_prime_power(n)) ++n;
  return n;
}

std::uint64_t psi_ratio(std::uint64_t num, std::uint64_t den) {
  if (den == 0 || num == 0) throw InvalidArgument("psi needs a positive argument");
  return psi((num + den - 1) / den);
}

std::string Bracket::str() const {
  if (exact()) return std::to_string(lower);
  return "[" + std::to_string(lower) + "," + std::to_string(upper) + "]";
}

std::optional<std::pair<std::size_t, std::size_t>> combination_params(const Network& n) {
  const NodeId src = n.source();
  const auto& src_out = n.out_edges(src);
  const std::size_t r = src_out.size();
  if (r == 0 || n.in_degree(src) != 0) return std::nullopt;
  std::vector<char> is_middle(n.node_count(), 0);
  for (EdgeId e : src_out) {
    const NodeId m = n.edge(e).to;
    if (is_middle[m] || n.in_degree(m) != 1 || n.is_terminal(m)) return std::nullopt;
    is_middle[m] = 1;
  }
  if (n.node_count() != 1 + r + n.terminals().size()) return std::nullopt;
  std::optional<std::size_t> s;
  std::set<std::vector<NodeId>> subsets;
  for (NodeId tau : n.terminals()) {
    if (n.out_degree(tau) != 0) return std::nullopt;
    std::vector<NodeId> from;
    for (EdgeId e : n.in_edges(tau)) {
      const NodeId m = n.edge(e).from;
      if (!is_middle[m]) return std::nullopt;
      from.push_back(m);
    }
    std::sort(from.begin(), from.end());
    if (std::adjacent_find(from.begin(), from.end()) != from.end()) return std::nullopt;
    if (s && *s != from.size()) return std::nullopt;
    s = from.size();
    if (!subsets.insert(from).second) return std::nullopt;
  }
  if (!s || *s == 0) return std::nullopt;
  // all s-subsets present: compare with the binomial count
  long double count = 1;
  for (std::size_t i = 1; i <= *s; ++i) count = count * static_cast<long double>(r - *s + i) / i;
  if (static_cast<long double>(subsets.size()) + 0.5L < count || static_cast<long double>(subsets.size()) > count + 0.5L) {
    return std::nullopt;
  }
  return std::make_pair(r, *s);
}

namespace {

void require_solvable(const Network& n) {
  n.validate();
  for (NodeId tau : n.terminals()) {
    if (min_cut(n, tau) < n.h()) {
      throw InvalidArgument("terminal " + n.display_name(tau) + " has min-cut " + std::to_string(min_cut(n, tau)) +
                            " < h; no solution exists over any alphabet");
    }
  }
}

std::vector<std::uint64_t> prime_powers_upto(std::uint64_t limit) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t q = 2; q <= limit; ++q)
    if (is_prime_power(q)) out.push_back(q);
  return out;
}

bool skeleton_method_allowed(const Network& n, const GapOptions& opt, std::vector<std::string>& notes) {
  if (opt.method == GapMethod::exhaustive) return false;
  const std::string issue = skeleton_equivalence_issue(n);
  if (issue.empty()) return true;
  if (opt.method == GapMethod::skeleton) throw InvalidArgument("skeleton method unavailable: " + issue);
  notes.push_back("skeleton method not applicable: " + issue);
  return false;
}

std::uint64_t terminal_bound(const Network& n) {
  return psi(std::max<std::uint64_t>(n.terminals().size(), 2));
}

AlphabetResult qv_impl(const Network& n, const GapOptions& opt, std::uint64_t upper) {
  AlphabetResult res;
  require_solvable(n);
  const auto comb = combination_params(n);
  const bool use_ic = opt.method == GapMethod::automatic && comb && comb->second == n.h();
  const bool use_skel = !use_ic && skeleton_method_allowed(n, opt, res.notes);

  std::optional<SkeletonGraph> skel;
  std::vector<std::size_t> skel_clique;
  if (use_skel) {
    skel = skeleton(n);
    BudgetMeter meter(opt.budget);
    skel_clique = max_clique(skel->graph, meter);
    res.skeleton_clique = skel_clique;
  }

  struct Cand {
    std::uint64_t value, q, t;
  };
  std::vector<Cand> cands;
  for (std::uint64_t q : prime_powers_upto(upper)) {
    std::uint64_t v = q;
    for (std::uint64_t t = 1; v <= upper; ++t) {
      cands.push_back({v, q, t});
      if (v > upper / q) break;
      v *= q;
    }
  }
  std::sort(cands.begin(), cands.end(),
            [](const Cand& a, const Cand& b) { return a.value != b.value ? a.value < b.value : a.q < b.q; });

  std::optional<std::uint64_t> first_unknown;
  for (const Cand& c : cands) {
    const FieldSpec f = make_field_of_order(c.q, opt.limits);
    Outcome outcome = Outcome::unknown;
    try {
      if (use_ic) {
        res.method = "IC";
        ICSearchResult ic = ic_find(c.q, c.t, n.h(), n.h(), comb->first, opt.budget, opt.limits);
        outcome = ic.outcome;
        if (outcome == Outcome::found) {
          std::vector<Matrix> rows;
          for (const Subspace& s : ic.witness.members) rows.push_back(padded_basis(s, c.t));
          res.code = forward_code(n, f, c.t, rows);
          res.ic = std::move(ic.witness);
        }
      } else if (use_skel) {
        res.method = "homomorphism";
        // pairwise trivially intersecting t-subspaces of F_q^{2t} cover
        // disjoint sets of q^t - 1 nonzero vectors, so cliques of
        // qK_{2t:t} have at most q^t + 1 vertices
        if (skel_clique.size() > c.value + 1) {
          res.notes.push_back("(" + std::to_string(c.q) + "," + std::to_string(c.t) + ") excluded: skeleton clique of " +
                              std::to_string(skel_clique.size()) + " > q^t + 1");
          continue;
        }
        const UGraph target = build_qkneser(c.q, 2 * c.t, c.t, opt.limits);
        std::vector<std::optional<std::size_t>> hint(skel->graph.vertex_count());
        for (std::size_t v = 0; v < hint.size(); ++v) {
          const auto& label = n.label(n.edge(skel->class_ids[v]).to);
          if (!label || label->field().q() != c.q || label->ambient() != 2 * c.t || label->dim() != c.t) continue;
          const auto& tl = target.labels();
          const auto it = std::lower_bound(tl.begin(), tl.end(), *label);
          if (it != tl.end() && *it == *label) hint[v] = static_cast<std::size_t>(it - tl.begin());
        }
        HomomorphismResult h = find_homomorphism(skel->graph, target, opt.budget, hint);
        outcome = h.outcome;
        if (outcome == Outcome::found) {
          std::vector<Subspace> labels;
          for (std::size_t x : h.map) labels.push_back(target.labels()[x]);
          res.code = code_from_skeleton_labels(n, *skel, labels, c.t);
          res.hom = std::move(h.map);
        }
      } else {
        res.method = "exhaustive";
        SearchResult s = search_solution(n, f, c.t, opt.budget, opt.limits);
        outcome = s.outcome;
        if (outcome == Outcome::found) res.code = std::move(s.code);
      }
    } catch (const LimitExceeded& e) {
      res.notes.push_back("(" + std::to_string(c.q) + "," + std::to_string(c.t) + "): " + e.what());
      outcome = Outcome::unknown;
    }
    if (outcome == Outcome::found) {
      if (!verify_solution(n, *res.code).accepted) throw Error("internal: certificate for q_v failed verification");
      res.t = c.t;
      res.value = Bracket{first_unknown.value_or(c.value), c.value};
      return res;
    }
    if (outcome == Outcome::unknown) {
      if (!first_unknown) first_unknown = c.value;
      res.notes.push_back("(" + std::to_string(c.q) + "," + std::to_string(c.t) + ") undecided within budget");
    }
  }
  res.value = Bracket{first_unknown.value_or(upper), upper};
  res.notes.push_back("upper bound " + std::to_string(upper) + " without a certificate");
  return res;
}

}  // namespace

AlphabetResult qs_exact(const Network& n, const GapOptions& opt) {
  AlphabetResult res;
  require_solvable(n);
  if (skeleton_method_allowed(n, opt, res.notes)) {
    const SkeletonGraph skel = skeleton(n);
    const ChromaticResult chi = chromatic_number(skel.graph, opt.budget);
    if (chi.upper < 2) throw Error("internal: minimal h = 2 network with an edgeless skeleton");
    res.method = "skeleton-chi";
    res.value = Bracket{psi(std::max<std::size_t>(chi.lower, 2) - 1), psi(chi.upper - 1)};
    if (!chi.exact) res.notes.push_back("chromatic number only bracketed: [" + std::to_string(chi.lower) + "," +
                                        std::to_string(chi.upper) + "]");
    const std::uint64_t q = res.value.upper;
    const FieldSpec f = make_field_of_order(q, opt.limits);
    const std::vector<Subspace> lines = enumerate_subspaces(f, 2, 1, opt.limits);
    std::vector<Subspace> labels;
    for (std::size_t c : chi.witness.colors) labels.push_back(lines.at(c));
    res.code = code_from_skeleton_labels(n, skel, labels, 1);
    res.coloring = chi.witness;
    if (!verify_solution(n, *res.code).accepted) throw Error("internal: coloring certificate failed verification");
    return res;
  }

  res.method = "exhaustive";
  const std::uint64_t upper = terminal_bound(n);
  std::optional<std::uint64_t> first_unknown;
  for (std::uint64_t q : prime_powers_upto(upper)) {
    const SearchResult s = search_solution(n, make_field_of_order(q, opt.limits), 1, opt.budget, opt.limits);
    if (s.outcome == Outcome::found) {
      res.value = Bracket{first_unknown.value_or(q), q};
      res.code = s.code;
      return res;
    }
    if (s.outcome == Outcome::unknown) {
      if (!first_unknown) first_unknown = q;
      res.notes.push_back("q = " + std::to_string(q) + " undecided within budget");
    }
  }
  res.value = Bracket{first_unknown.value_or(upper), upper};
  res.notes.push_back("upper bound psi(|T|) = " + std::to_string(upper) + " without a certificate");
  return res;
}

AlphabetResult qv_exact(const Network& n, const GapOptions& opt) { return qv_impl(n, opt, terminal_bound(n)); }

GapReport gap_exact(const Network& n, const GapOptions& opt) {
  GapReport r;
  r.qs = qs_exact(n, opt);
  r.qv = qv_impl(n, opt, r.qs.value.upper);
  r.gap.lower = r.qs.value.lower > r.qv.value.upper ? r.qs.value.lower - r.qv.value.upper : 0;
  r.gap.upper = r.qs.value.upper - std::min(r.qv.value.lower, r.qs.value.upper);
  return r;
}

// ---------------------------------------------------------------------------

std::string to_string(FormulaKind kind) {
  switch (kind) {
    case FormulaKind::kneser_h2: return "kneser-h2";
    case FormulaKind::minimal_h2: return "minimal-h2";
    case FormulaKind::kneser_t2: return "kneser-t2";
    case FormulaKind::kneser_h3: return "kneser-h3";
    case FormulaKind::combination: return "combination";
  }
  return "?";
}

std::optional<FormulaKind> parse_formula_kind(const std::string& name) {
  for (FormulaKind k : {FormulaKind::kneser_h2, FormulaKind::minimal_h2, FormulaKind::kneser_t2,
                        FormulaKind::kneser_h3, FormulaKind::combination}) {
    if (to_string(k) == name) return k;
  }
  return std::nullopt;
}

namespace {

std::uint64_t ipow(std::uint64_t b, std::uint64_t e) {
  std::uint64_t v = 1;
  for (std::uint64_t i = 0; i < e; ++i) {
    if (v > std::numeric_limits<std::uint64_t>::max() / b) throw LimitExceeded("power overflows 64 bits");
    v *= b;
  }
  return v;
}

std::string s(std::uint64_t v) { return std::to_string(v); }

}  // namespace

FormulaValue gap_formula(FormulaKind kind, const FormulaParams& p) {
  FormulaValue out;
  auto unmet = [&](const std::string& why) {
    out.hypotheses_met = false;
    out.note = "outside stated hypotheses: " + why;
  };
  if (kind != FormulaKind::combination) {
    if (!is_prime_power(p.q)) throw InvalidArgument("q = " + s(p.q) + " is not a prime power");
    if (p.t < 1) throw InvalidArgument("t must be >= 1");
  }
  switch (kind) {
    case FormulaKind::kneser_h2:
    case FormulaKind::minimal_h2: {
      const std::uint64_t qt = ipow(p.q, p.t), qt1 = ipow(p.q, p.t - 1);
      const std::uint64_t ps = psi(qt + qt1 - 1);
      out.value = static_cast<std::int64_t>(ps) - static_cast<std::int64_t>(qt);
      out.expression = "psi(" + s(qt + qt1 - 1) + ") - " + s(qt) + " = " + s(ps) + " - " + s(qt);
      if (kind == FormulaKind::kneser_h2) {
        out.relation = "=";
        out.weaker = ">= q^{t-1} - 1 = " + std::to_string(static_cast<std::int64_t>(qt1) - 1);
        if (!(p.q >= 5 || p.t <= 3)) unmet("needs q >= 5 or t <= 3");
      } else {
        out.relation = "<=";
        out.weaker = "<= q^t + 2q^{t-1} - 2 = " + s(qt + 2 * qt1 - 2);
      }
      break;
    }
    case FormulaKind::kneser_t2: {
      const std::uint64_t qt = ipow(p.q, p.t);
      const std::uint64_t ps = psi(qt + 1);
      out.value = static_cast<std::int64_t>(ps) - static_cast<std::int64_t>(qt);
      out.relation = ">=";
      out.expression = "psi(" + s(qt + 1) + ") - " + s(qt) + " = " + s(ps) + " - " + s(qt);
      out.weaker = ">= 1";
      if (p.t < 2) unmet("needs t >= 2");
      break;
    }
    case FormulaKind::kneser_h3: {
      if (p.h < 2) throw InvalidArgument("h must be >= 2");
      const std::uint64_t qt = ipow(p.q, p.t), qt1 = ipow(p.q, p.t - 1);
      const std::uint64_t den = p.t >= p.h ? p.h - 1 : (p.h - 1) * (p.h - 1);
      const std::uint64_t ps = psi_ratio(qt * den + qt1, den);
      out.value = static_cast<std::int64_t>(ps) - static_cast<std::int64_t>(qt);
      out.relation = ">=";
      out.expression = "psi(" + s(qt) + " + " + s(qt1) + "/" + s(den) + ") - " + s(qt) + " = " + s(ps) + " - " + s(qt);
      out.weaker = ">= " + s(qt1) + "/" + s(den);
      if (p.t < 2 || p.h < 3) unmet("needs t >= 2 and h >= 3");
      break;
    }
    case FormulaKind::combination: {
      if (p.h < 1 || p.r < p.h) throw InvalidArgument("needs r >= h >= 1");
      const std::uint64_t a = psi(std::max<std::uint64_t>(p.r - 1, 1));
      const std::uint64_t b = psi(p.r - p.h + 1);
      out.value = static_cast<std::int64_t>(a) - static_cast<std::int64_t>(b);
      out.relation = "<=";
      out.expression = "psi(" + s(p.r - 1) + ") - psi(" + s(p.r - p.h + 1) + ") = " + s(a) + " - " + s(b);
      out.weaker = "<= r + h - 3 = " + std::to_string(static_cast<std::int64_t>(p.r + p.h) - 3);
      if (p.h < 2) unmet("needs r >= h >= 2");
      break;
    }
  }
  return out;
}

}  // namespace ncgap
