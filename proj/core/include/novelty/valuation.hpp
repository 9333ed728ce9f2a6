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

// Value of knowledge and the benefit of a single discovery.
//
// Distances inside a bounded area are canonical: 0 <= d <= X/2, measured
// from the nearer endpoint. Callers holding d > X/2 reflect it first.

#pragma once

#include "novelty/knowledge.hpp"

namespace novelty {

// Conjecture variance at distance d: d(X-d)/X, or d when X is infinite.
double sigma2(double d, Length X);

// Derivative of sigma2 in d.
double sigma2_dd(double d, Length X);

// Value contributed by a bounded area of length X.
double area_value(double X, double q);

// q (both unbounded areas together) plus the value of every bounded area.
double value_of_knowledge(const KnowledgeSet& f, double q);

// Benefit V(d;X) of discovering the answer at distance d in an area of
// length X.
double benefit(double d, Length X, double q);

// Partial derivative of V(d;X) in d.
double benefit_dd(double d, Length X, double q);

// Benefit-maximizing distance in an area of length X.
double d0(Length X, double q);

struct BenefitCutoffs {
  double x_hat0;
  double x_check0;
  double x_tilde0;
  double d0_inf;
  double v_inf_max;
};

// Cutoff area lengths of the benefit function, in absolute units.
// Ordering: 4q < x_hat0 < 6q < x_check0 < x_tilde0 < 8q.
BenefitCutoffs benefit_cutoffs(double q);

// x_tilde0 / q, computed once and cached.
double x_tilde0_unit();

}  // namespace novelty
