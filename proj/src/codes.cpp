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

#include "ncgap/codes.hpp"

#include <algorithm>
#include <limits>
#include <set>

#include "ncgap/error.hpp"
#include "ncgap/network.hpp"

namespace ncgap {

LinearCode make_linear_code(Matrix generator) {
  if (rank(generator) != generator.rows()) throw InvalidArgument("generator matrix is rank deficient");
  return LinearCode{std::move(generator)};
}

LinearCode rs_code(std::uint64_t q, std::size_t r, std::size_t h, const Limits& limits) {
  if (h < 1) throw InvalidArgument("code dimension must be >= 1");
  if (r < h) throw InvalidArgument("code length must be >= dimension");
  if (r > q + 1) {
    throw InvalidArgument("Reed-Solomon length " + std::to_string(r) + " exceeds q + 1 = " + std::to_string(q + 1));
  }
  const FieldSpec f = make_field_of_order(q, limits);
  Matrix g(f, h, r);
  const std::size_t finite = std::min<std::size_t>(r, q);
  for (std::size_t i = 0; i < finite; ++i) {
    const Felt a{static_cast<std::uint32_t>(i)};
    Felt power = f.one();
    for (std::size_t j = 0; j < h; ++j) {
      g.set(j, i, power);
      power = f.mul(power, a);
    }
  }
  if (r == q + 1) g.set(h - 1, q, f.one());
  return make_linear_code(std::move(g));
}

void validate(const Codebook& c) {
  std::set<Word> seen;
  for (const Word& w : c.words) {
    if (w.size() != c.length) throw DimensionMismatch("codeword has the wrong length");
    for (Felt x : w)
      if (!c.field.valid(x)) throw InvalidArgument("codeword symbol outside the field");
    if (!seen.insert(w).second) throw InvalidArgument("codebook repeats a word");
  }
}

Codebook codebook_of(const LinearCode& code, const Limits& limits) {
  const FieldSpec& f = code.field();
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < code.dimension(); ++i) {
    count *= f.q();
    if (count > limits.max_codewords) throw LimitExceeded("code has more than the codeword limit");
  }
  Codebook out{f, code.length(), {}};
  out.words.reserve(count);
  std::vector<Felt> msg(code.dimension(), f.zero());
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    std::uint64_t rest = idx;
    for (auto& m : msg) {
      m = Felt{static_cast<std::uint32_t>(rest % f.q())};
      rest /= f.q();
    }
    Word w(code.length(), f.zero());
    for (std::size_t j = 0; j < code.dimension(); ++j) {
      if (msg[j].code == 0) continue;
      for (std::size_t i = 0; i < code.length(); ++i) w[i] = f.add(w[i], f.mul(msg[j], code.generator(j, i)));
    }
    out.words.push_back(std::move(w));
  }
  return out;
}

std::size_t hamming_distance(const Word& a, const Word& b) {
  if (a.size() != b.size()) throw DimensionMismatch("words of different length");
  std::size_t d = 0;
  for (std::size_t i = 0; i < a.size(); ++i) d += a[i] != b[i];
  return d;
}

std::size_t min_distance(const LinearCode& code, const Limits& limits) {
  const Codebook book = codebook_of(code, limits);
  std::size_t best = std::numeric_limits<std::size_t>::max();
  for (const Word& w : book.words) {
    const auto weight = static_cast<std::size_t>(std::count_if(w.begin(), w.end(), [](Felt x) { return x.code; }));
    if (weight > 0) best = std::min(best, weight);
  }
  return best;
}

std::size_t min_distance(const Codebook& code) {
  if (code.words.size() < 2) throw InvalidArgument("minimum distance needs at least two codewords");
  std::size_t best = std::numeric_limits<std::size_t>::max();
  for (std::size_t i = 0; i < code.words.size(); ++i)
    for (std::size_t j = i + 1; j < code.words.size(); ++j)
      best = std::min(best, hamming_distance(code.words[i], code.words[j]));
  return best;
}

bool projections_injective(const Codebook& code, std::size_t s) {
  if (s > code.length) throw InvalidArgument("s exceeds the code length");
  std::vector<std::size_t> c(s);
  for (std::size_t i = 0; i < s; ++i) c[i] = i;
  while (true) {
    std::set<Word> seen;
    for (const Word& w : code.words) {
      Word p;
      for (std::size_t i : c) p.push_back(w[i]);
      if (!seen.insert(std::move(p)).second) return false;
    }
    std::size_t i = s;
    while (i > 0 && c[i - 1] == code.length - s + (i - 1)) --i;
    if (i == 0) return true;
    ++c[i - 1];
    for (std::size_t j = i; j < s; ++j) c[j] = c[j - 1] + 1;
  }
}

namespace {

void check_code_shape(unsigned h, std::size_t r, std::size_t s, std::size_t length) {
  if (s < 1 || s > r || h < 1) throw InvalidArgument("need 1 <= s <= r and h >= 1");
  if (length != r) {
    throw DimensionMismatch("code length " + std::to_string(length) + " differs from r = " + std::to_string(r));
  }
}

}  // namespace

CodeSolvability solvability_by_code(unsigned h, std::size_t r, std::size_t s, const LinearCode& code,
                                    const Limits& limits) {
  check_code_shape(h, r, s, code.length());
  if (code.dimension() != h) throw DimensionMismatch("code dimension differs from h");
  CodeSolvability out;
  out.distance = min_distance(code, limits);
  out.required = r - s + 1;
  out.solvable = out.distance >= out.required;
  if (out.solvable) out.linear_solution = solution_from_classical_code(build_combination(h, r, s, limits), code.generator);
  return out;
}

CodeSolvability solvability_by_code(unsigned h, std::size_t r, std::size_t s, const Codebook& code) {
  check_code_shape(h, r, s, code.length);
  validate(code);
  std::uint64_t expected = 1;
  for (unsigned i = 0; i < h; ++i) expected *= code.field.q();
  if (code.words.size() != expected) {
    throw DimensionMismatch("codebook has " + std::to_string(code.words.size()) + " words, need q^h = " +
                            std::to_string(expected));
  }
  CodeSolvability out;
  out.distance = min_distance(code);
  out.required = r - s + 1;
  out.solvable = out.distance >= out.required;
  if (out.solvable) {
    out.forwarding =
        "source edge i carries coordinate i of the codeword indexed by (x_1..x_h); middle nodes repeat their "
        "input; each terminal inverts the projection onto its s coordinates";
  }
  return out;
}

CodebookSearchResult max_codebook_distance(std::uint64_t q, std::size_t r, std::size_t size, const Budget& budget) {
  if (size < 2) throw InvalidArgument("codebook search needs at least two words");
  if (size * r > 24) throw LimitExceeded("exhaustive codebook search is limited to size * length <= 24");
  const FieldSpec f = make_field_of_order(q);
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < r; ++i) total *= q;
  if (total < size) throw InvalidArgument("fewer words than the requested codebook size");
  std::vector<Word> all(total);
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    std::uint64_t rest = idx;
    for (std::size_t i = 0; i < r; ++i) {
      all[idx].push_back(Felt{static_cast<std::uint32_t>(rest % q)});
      rest /= q;
    }
  }
  // Singleton: deleting d-1 coordinates keeps words distinct.
  std::size_t k = 0;
  for (std::uint64_t p = 1; p < size; p *= q) ++k;
  const std::size_t ceiling = r - k + 1;

  BudgetMeter meter(budget);
  CodebookSearchResult res;
  std::vector<std::uint64_t> chosen{0}, best_set;
  std::function<void(std::uint64_t, std::size_t)> dfs = [&](std::uint64_t from, std::size_t cur) {
    if (cur <= res.best_distance || res.best_distance >= ceiling) return;
    if (chosen.size() == size) {
      res.best_distance = cur;
      best_set = chosen;
      return;
    }
    for (std::uint64_t w = from; w + (size - chosen.size()) <= total; ++w) {
      if (!meter.charge()) return;
      std::size_t d = cur;
      for (std::uint64_t c : chosen) d = std::min(d, hamming_distance(all[c], all[w]));
      if (d <= res.best_distance) continue;
      chosen.push_back(w);
      dfs(w + 1, d);
      chosen.pop_back();
      if (meter.exhausted() || res.best_distance >= ceiling) return;
    }
  };
  dfs(1, r + 1);
  res.exact = !meter.exhausted();
  res.nodes = meter.used();
  res.witness = Codebook{f, r, {}};
  for (std::uint64_t c : best_set) res.witness.words.push_back(all[c]);
  return res;
}

}  // namespace ncgap
