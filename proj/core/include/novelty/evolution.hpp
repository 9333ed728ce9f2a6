// Copyright 2026 The Novelty Authors.
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

// Sequential research by short-lived, identical researchers. Each period the
// researcher picks opt_choice, searches a prediction interval around the
// conjecture mean and succeeds iff the drawn answer falls inside it.
//
// A failure is absorbing: the next researcher faces the same knowledge and
// repeats the same search, so run() stops at the first failure.

#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "novelty/knowledge.hpp"
#include "novelty/researcher.hpp"

namespace novelty {

struct SearchInterval {
  double a;
  double b;

  bool contains(double y) const { return a <= y && y <= b; }
  double length() const { return b - a; }
};

// Interval of length 2^{3/2} erf_inv(rho) sigma centered on mean. Throws
// std::domain_error unless sigma >= 0 and rho in [0, 1).
SearchInterval prediction_interval(double mean, double sigma, double rho);

// std::mt19937_64 with a portable normal transform: one 53-bit uniform per
// draw mapped through sqrt(2) * erf_inv(2u - 1). Identical seeds give
// identical streams on every conforming platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Uniform on the open interval (0, 1).
  double uniform();
  double standard_normal();

 private:
  std::mt19937_64 engine_;
};

// Draw from the conjecture at x. Throws std::invalid_argument for a known x.
double sample_answer(const KnowledgeSet& f, double x, Rng& rng);

struct StepOptions {
  Side side = Side::kRight;
  bool force_success = false;  // answers are still drawn
};

struct StepResult {
  ResearchChoice choice;
  double x;
  double y;
  SearchInterval interval;
  bool success;
  KnowledgeSet after;
};

StepResult step(const KnowledgeSet& f, const EconomyParams& p, Rng& rng,
                const StepOptions& opt = {});

struct PeriodRecord {
  int t;
  ResearchChoice choice;
  double x;
  double y;
  SearchInterval interval;
  bool success;
  KnowledgeSet knowledge_after;
  double value_after;
};

struct EvolutionTrace {
  std::vector<PeriodRecord> periods;
  std::uint64_t seed;
  std::optional<int> halted_at;  // period of the first failure
};

struct RunOptions {
  Side side = Side::kRight;
  bool force_success = false;
  // Period 1 is a guaranteed discovery at this distance beyond the frontier.
  std::optional<double> moonshot;
};

// Throws std::invalid_argument unless T >= 1.
EvolutionTrace run(const KnowledgeSet& f1, const EconomyParams& p, int T,
                   std::uint64_t seed, const RunOptions& opt = {});

// sum_{t=1}^{T} delta^{t-1} v(F_{t+1}); after a halt the last value is
// carried to the horizon T in closed form.
double discounted_value(const EvolutionTrace& trace, double delta, int T);

// One JSON object per period: t, x, d, X (null when unbounded), rho, y,
// success, v.
std::string to_jsonl(const EvolutionTrace& trace);

}  // namespace novelty
