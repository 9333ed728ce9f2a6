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

// Special functions behind the research cost model.
//
// The cost kernel is c(rho) = erf_inv(rho)^2. With iota = erf_inv(rho):
//
//   c'(rho)  = sqrt(pi) * iota * exp(iota^2)
//   c''(rho) = (pi / 2) * exp(2 iota^2) * (1 + 2 iota^2)
//   c'^-1(x) = erf(sqrt(W0(2 x^2 / pi) / 2))
//
// All functions are pure and reentrant. Arguments outside the documented
// domain raise std::domain_error.

#pragma once

#include <limits>

namespace novelty::specfun {

// Returned by ctilde(1). Optimizers treat rho = 1 as infeasible unless the
// cost weight is zero.
inline constexpr double kInfiniteCost = std::numeric_limits<double>::infinity();

// Inverse error function on (-1, 1).
double erf_inv(double p);

// Cost kernel on [0, 1]; ctilde(1) == kInfiniteCost.
double ctilde(double rho);

// First derivative of the kernel on [0, 1).
double ctilde_prime(double rho);

// Second derivative of the kernel on [0, 1). Overflows to +inf near 1.
double ctilde_second(double rho);

// Principal branch of the Lambert W function on [-1/e, inf).
double lambert_w0(double x);

// Inverse of ctilde_prime on [0, inf). The result always lies in [0, 1).
double ctilde_prime_inv(double x);

struct CostKernelPoint {
  double rho;
  double ctilde;
  double ctilde_prime;
  double ctilde_second;
};

// Evaluates the kernel and both derivatives with one erf_inv call.
CostKernelPoint cost_kernel(double rho);

}  // namespace novelty::specfun
