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

// The researcher's problem: pick a question (area and distance d) and an
// output probability rho to maximize rho * V(d;X) - eta * c(rho) * sigma2.

#pragma once

#include <cstddef>

#include "novelty/knowledge.hpp"

namespace novelty {

struct EconomyParams {
  double q = 1.0;    // error tolerance, > 0
  double eta = 1.0;  // cost weight, >= 0

  // Throws std::invalid_argument on violation.
  void validate() const;
};

enum class Side { kLeft, kRight };

struct ResearchChoice {
  bool expand = true;
  Side side = Side::kRight;  // meaningful when expanding
  std::size_t anchor = 0;    // lower endpoint index when deepening
  Length X = Length::infinite();
  double d = 0.0;
  double rho = 0.0;
  double payoff = 0.0;
};

// c(rho) * sigma2(d;X), without the eta weight.
double cost(double rho, double d, Length X, const EconomyParams& p);

// rho * V(d;X) - eta * c(rho) * sigma2(d;X). With eta = 0 the cost term is
// zero even at rho = 1; with eta > 0, rho = 1 yields -inf.
double payoff(double rho, double d, Length X, const EconomyParams& p);

// Output that solves the first-order condition in rho for a fixed d.
// Returns 0 for d = 0 and 1 when eta = 0.
double opt_rho_given_d(double d, Length X, const EconomyParams& p);

// Best expansion beyond the frontier.
ResearchChoice opt_expand(const EconomyParams& p, Side side = Side::kRight);

// Best question inside a bounded area of length X. Compares the midpoint
// with interior first-order solutions; ties go to the midpoint.
ResearchChoice opt_deepen(double X, const EconomyParams& p);

// Best choice over expansion and every bounded area. Ties prefer expansion,
// then the lowest area.
ResearchChoice opt_choice(const KnowledgeSet& f, const EconomyParams& p,
                          Side side = Side::kRight);

// The question x that a choice targets, given the knowledge it was made on.
double question_of(const ResearchChoice& c, const KnowledgeSet& f);

struct ResearcherCutoffs {
  double x_hat;    // deepening beats expansion above this length
  double x_dot;    // output peaks here on the midpoint branch
  double x_check;  // researcher payoff peaks here
  double x_tilde;  // interior questions beat the midpoint above this length
};

// Throws std::invalid_argument unless eta > 0, ConvergenceError if a
// bracket fails or the ordering 2q < x_hat < x_dot < x_check < x_tilde < 8q
// does not hold.
ResearcherCutoffs researcher_cutoffs(const EconomyParams& p);

// 8 cos(pi/18) / sqrt(3) * q.
double x_dot(double q);

enum class Interaction { kIndependent, kComplements, kSubstitutes };

const char* to_string(Interaction i);

// Whether novelty d and output move together (complements) or against each
// other (substitutes) at (d, X).
Interaction substitutes_or_complements(double d, Length X, const EconomyParams& p);

// Lower root of the derivative of V/sigma2 in d, for X in ((4+sqrt6)q, 8q).
double d_hat_minus(double X, double q);

}  // namespace novelty
