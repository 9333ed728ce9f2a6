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

// Discounted value of a first-period discovery and the comparison of a
// moonshot (a first discovery beyond 3q) against the myopic optimum 3q.
//
// NPV convention: sum_{t>=1} delta^{t-1} E[v(F_{t+1})]. After period 1 the
// policy is deterministic given success, so the expectation runs over the
// first failure time only. Once the policy settles into expansion it keeps a
// constant step and output, and the rest of the series is summed in closed
// form.
//
// Two modes:
//   kConsistentFoc    every later choice comes from opt_choice.
//   kPaperReplication the published closed-form recipe for the 6q-vs-3q
//                     comparison at q = 1: expansion step solving
//                     d = 3q - eta c(rho)/rho, and the printed midpoint
//                     output erf(sqrt(W(8(3 - 2/sqrt3)/(9 eta^2 pi))/2)).
//                     Only first distances <= 3q and exactly 6q are defined.

#pragma once

#include <optional>
#include <string>
#include <utility>

#include "novelty/knowledge.hpp"
#include "novelty/researcher.hpp"

namespace novelty {

enum class NpvMode { kPaperReplication, kConsistentFoc };

const char* to_string(NpvMode m);
// Accepts "paper" / "paper-replication" and "consistent" / "consistent-foc".
NpvMode parse_npv_mode(const std::string& s);

struct MoonshotAssessment {
  double x_hat;
  double delta;
  double npv_moonshot;
  double npv_myopic;
  double benefit;  // npv_moonshot - npv_myopic
  NpvMode mode;
};

// True iff x lies outside [x_1, x_k] at distance greater than 3q.
bool is_moonshot(double x, const KnowledgeSet& f, double q);

// The period-1 discovery: an expansion at distance d to the right of the
// frontier, certain or succeeding with probability rho.
struct FirstChoice {
  double d;
  bool guaranteed = true;
  double rho = 1.0;
};

// Throws std::invalid_argument unless delta in [0, 1).
double chain_npv(const KnowledgeSet& f1, const FirstChoice& first, const EconomyParams& p,
                 double delta, NpvMode mode = NpvMode::kConsistentFoc);

struct ReplicationBenchmark {
  double d_inf;
  double rho_inf;
  double rho_6q;
  // The same output obtained by feeding V(3q;6q)/(eta sigma2(3q;6q)) into the
  // inverse marginal cost. Differs from rho_6q, whose printed Lambert W
  // argument is not squared.
  double rho_6q_substituted;
  double loss;            // V(3q;inf) - V(6q;inf)
  double gain_delta1;     // rho_6q V(3q;6q) - rho_inf V(d_inf;inf)
  double benefit_delta1;  // gain_delta1 - loss
};

// The published recipe evaluated verbatim. Requires q = 1 and eta > 0.
ReplicationBenchmark replication_benchmark(const EconomyParams& p);

// Moonshot at x_hat against 3q, both guaranteed, from a single known point.
MoonshotAssessment assess_moonshot(double x_hat, const EconomyParams& p, double delta,
                                   NpvMode mode = NpvMode::kConsistentFoc);

// Lower bound on the per-period-unit benefit of 6q over 3q that ignores the
// continuation after period 2. Never exceeds (1 - delta) * benefit.
double conservative_benefit(const EconomyParams& p, double delta,
                            NpvMode mode = NpvMode::kConsistentFoc);

// Smallest delta in [0, 1) above which 6q beats 3q; nullopt if it never does.
std::optional<double> critical_delta(const EconomyParams& p,
                                     NpvMode mode = NpvMode::kConsistentFoc);

// Interval of eta for which 6q beats 3q at this delta; nullopt if empty on
// the scanned range [1e-4, 1e2].
std::optional<std::pair<double, double>> eta_range(double delta, const EconomyParams& p,
                                                   NpvMode mode = NpvMode::kConsistentFoc);

// Best first-period distance on [3q, upper]; upper defaults to 12q.
// Consistent mode only.
MoonshotAssessment optimal_moonshot(double delta, const EconomyParams& p,
                                    std::optional<double> upper = std::nullopt);

}  // namespace novelty
