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

// A funder with budget K splits it between an ex-post reward zeta, paid with
// probability f(sigma2) on success, and an ex-ante cost reduction h priced
// at kappa per unit: zeta + kappa * h = K, eta = eta0 - h.
//
// The funded researcher always expands from a single known point, so the
// area is unbounded and sigma2 = d throughout.

#pragma once

#include <optional>
#include <string>

#include "novelty/moonshot.hpp"
#include "novelty/researcher.hpp"

namespace novelty {

enum class RewardTech { kLinear, kExponential };

const char* to_string(RewardTech t);
// Accepts "linear" and "exponential".
RewardTech parse_reward_tech(const std::string& s);

struct FundingParams {
  double K = 3.0;
  double kappa = 16.0;
  double s = 6.0;
  double eta0 = 1.0;
  RewardTech tech = RewardTech::kLinear;

  // Throws std::invalid_argument on violation, including kappa <= K / eta0
  // and, for the linear technology, s < 4q.
  void validate(double q) const;
};

struct FundingScheme {
  double zeta;
  double h;
  double eta;
};

// The budget-line scheme with reward zeta. Throws unless zeta in [0, K].
FundingScheme scheme_on_budget(double zeta, const FundingParams& fp);

struct FrontierPoint {
  double rho;
  double d;
  FundingScheme scheme;
  bool at_kink;   // d = s under the linear technology
  double payoff;  // the researcher's
};

// Linear: min(sigma2 / s, 1). Exponential: 1 - exp(-s sigma2).
double reward_prob(double sigma2, double s, RewardTech tech);

// The researcher's optimum under a scheme. Linear technology: the interior
// first-order candidate against the kink d = s. Exponential: a profile scan
// in d with local refinement. Throws unless scheme.eta > 0.
FrontierPoint researcher_with_rewards(const FundingScheme& scheme, const FundingParams& fp,
                                      const EconomyParams& econ);

struct ImpliedScheme {
  double eta;
  double zeta;
  bool implementable;  // zeta >= 0
};

// The unique (eta, zeta) making (d, rho) an interior optimum. A negative
// zeta is reported, not clamped. Throws unless rho in (0, 1) and d > 0.
ImpliedScheme scheme_from_choice(double d, double rho, double s, double q);

struct FeasibleBounds {
  double rho_low;
  double rho_high;
  bool low_at_rewards;  // rho_low comes from the rewards-only scheme
};

// Output under the two polar schemes, sorted. Under the linear technology a
// polar scheme whose global optimum sits at the kink contributes the output
// of its interior first-order solution instead.
FeasibleBounds feasible_bounds(const FundingParams& fp, double q);

// Distance on the research-possibility frontier at output rho. Linear
// technology only. Throws std::domain_error outside feasible_bounds.
double frontier_d_of_rho(double rho, const FundingParams& fp, double q);

// Marginal rates of substitution between reward and cost weight along the
// iso-output and iso-novelty curves. Both scale linearly in s.
double mrs_rho(double rho, double s);
double mrs_d(double rho, double s);

// +1 where novelty rises with output along the frontier, -1 where it falls,
// 0 on the boundary.
int complementarity_sign(double rho, const FundingParams& fp, double q);

enum class FundingMix { kCostOnly, kRewardsOnly, kMix };

const char* to_string(FundingMix m);

struct FundingOptimum {
  FundingScheme scheme;
  FrontierPoint point;
  double objective;
  FundingMix mix;
};

inline constexpr int kFundingGrid = 2001;

// Maximizes rho * V(d;inf) along the budget line.
FundingOptimum optimize_myopic(const FundingParams& fp, double q, int grid = kFundingGrid);

struct ForwardOptimum {
  FundingOptimum best;
  // x_hat is the induced d; npv_myopic is the forward value of the myopic
  // scheme, so benefit is the gain from looking ahead.
  MoonshotAssessment assessment;
  bool moonshot;
};

// Maximizes the chain NPV along the budget line. Period 1 succeeds with the
// induced rho; later researchers are unfunded with cost weight econ.eta.
ForwardOptimum optimize_forward(const FundingParams& fp, const EconomyParams& econ, double delta,
                                int grid = kFundingGrid);

}  // namespace novelty
