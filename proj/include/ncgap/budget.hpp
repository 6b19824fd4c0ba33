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

#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string_view>

namespace ncgap {

/// Verdict of an exhaustive search. `none` is only reported when the complete
/// search space was explored; running out of budget yields `unknown`.
enum class Outcome { found, none, unknown };

constexpr std::string_view to_string(Outcome o) {
  switch (o) {
    case Outcome::found: return "found";
    case Outcome::none: return "none";
    case Outcome::unknown: return "unknown";
  }
  return "?";
}

struct Budget {
  std::uint64_t max_nodes = 100'000'000;
  std::optional<std::chrono::steady_clock::time_point> deadline;

  static Budget nodes(std::uint64_t n) { return Budget{n, std::nullopt}; }
  Budget& with_timeout(std::chrono::duration<double> d) {
    deadline = std::chrono::steady_clock::now() +
               std::chrono::duration_cast<std::chrono::steady_clock::duration>(d);
    return *this;
  }
};

/// Counts node expansions against a Budget.
class BudgetMeter {
 public:
  explicit BudgetMeter(const Budget& b) : budget_(b) {}

  /// Charges one expansion. Returns false once the budget is spent.
  bool charge() {
    if (exhausted_) return false;
    ++used_;
    if (used_ > budget_.max_nodes) {
      exhausted_ = true;
    } else if (budget_.deadline && (used_ & 0x3ff) == 0 &&
               std::chrono::steady_clock::now() > *budget_.deadline) {
      exhausted_ = true;
    }
    return !exhausted_;
  }

  bool exhausted() const { return exhausted_; }
  std::uint64_t used() const { return used_; }

  /// Budget that remains, for handing to a nested search.
  Budget remaining() const {
    Budget b = budget_;
    b.max_nodes = used_ >= budget_.max_nodes ? 0 : budget_.max_nodes - used_;
    return b;
  }

 private:
  Budget budget_;
  std::uint64_t used_ = 0;
  bool exhausted_ = false;
};

/// Size limits for enumerations and materialized objects.
struct Limits {
  std::uint64_t max_field_order = 1u << 20;
  std::uint64_t max_subspaces = 1'000'000;
  std::uint64_t max_terminals = 200'000;
  std::uint64_t max_codewords = 1'000'000;
};

}  // namespace ncgap
