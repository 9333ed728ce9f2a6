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

#include "novelty/specfun.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace novelty::specfun {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kSqrtPi = 1.7724538509055160273;
constexpr double kTwoOverSqrtPi = std::numbers::inv_sqrtpi * 2.0;
constexpr int kLambertMaxIter = 50;
constexpr double kLambertTol = 1e-14;

[[noreturn]] void domain(const char* fn, double v) {
  throw std::domain_error(std::string(fn) + ": argument " + std::to_string(v) +
                          " outside domain");
}

// Giles' single-precision approximation, used only as a starting point.
double erf_inv_guess(double x) {
  double w = -std::log((1.0 - x) * (1.0 + x));
  double p;
  if (w < 5.0) {
    w -= 2.5;
    p = 2.81022636e-08;
    p = 3.43273939e-07 + p * w;
    p = -3.5233877e-06 + p * w;
    p = -4.39150654e-06 + p * w;
    p = 0.00021858087 + p * w;
    p = -0.00125372503 + p * w;
    p = -0.00417768164 + p * w;
    p = 0.246640727 + p * w;
    p = 1.50140941 + p * w;
  } else {
    w = std::sqrt(w) - 3.0;
    p = -0.000200214257;
    p = 0.000100950558 + p * w;
    p = 0.00134934322 + p * w;
    p = -0.00367342844 + p * w;
    p = 0.00573950773 + p * w;
    p = -0.0076224613 + p * w;
    p = 0.00943887047 + p * w;
    p = 1.00167406 + p * w;
    p = 2.83297682 + p * w;
  }
  return p * x;
}

void check_unit_open(const char* fn, double rho) {
  if (!(rho >= 0.0 && rho < 1.0)) domain(fn, rho);
}

}  // namespace

double erf_inv(double p) {
  if (!(p > -1.0 && p < 1.0)) domain("erf_inv", p);
  if (p == 0.0) return 0.0;
  const double a = std::fabs(p);
  double x = erf_inv_guess(a);
  // Residual via erfc above 0.5 keeps relative accuracy near 1; 1 - a is
  // exact there.
  // The guess degrades in the far tail, so iterate to a fixed point.
  for (int i = 0; i < 6; ++i) {
    const double f = a <= 0.5 ? std::erf(x) - a : (1.0 - a) - std::erfc(x);
    const double fp = kTwoOverSqrtPi * std::exp(-x * x);
    const double step = f / (fp + x * f);
    x -= step;
    if (std::fabs(step) <= 1e-16 * x) break;
  }
  return std::copysign(x, p);
}

double ctilde(double rho) {
  if (!(rho >= 0.0 && rho <= 1.0)) domain("ctilde", rho);
  if (rho == 1.0) return kInfiniteCost;
  const double iota = erf_inv(rho);
  return iota * iota;
}

double ctilde_prime(double rho) {
  check_unit_open("ctilde_prime", rho);
  const double iota = erf_inv(rho);
  return kSqrtPi * iota * std::exp(iota * iota);
}

double ctilde_second(double rho) {
  check_unit_open("ctilde_second", rho);
  const double iota = erf_inv(rho);
  const double i2 = iota * iota;
  return 0.5 * kPi * std::exp(2.0 * i2) * (1.0 + 2.0 * i2);
}

CostKernelPoint cost_kernel(double rho) {
  check_unit_open("cost_kernel", rho);
  const double iota = erf_inv(rho);
  const double i2 = iota * iota;
  const double e = std::exp(i2);
  return {rho, i2, kSqrtPi * iota * e, 0.5 * kPi * e * e * (1.0 + 2.0 * i2)};
}

double lambert_w0(double x) {
  constexpr double kInvE = 0.36787944117144232160;
  if (std::isnan(x) || x < -kInvE) domain("lambert_w0", x);
  if (x == 0.0) return 0.0;
  if (std::isinf(x)) return x;

  const double t = 2.0 * (std::numbers::e * x + 1.0);
  const double p = std::sqrt(t > 0.0 ? t : 0.0);
  if (p < 1e-3) {
    // Branch-point series; truncation error is below p^7.
    return -1.0 + p * (1.0 + p * (-1.0 / 3.0 + p * (11.0 / 72.0 +
           p * (-43.0 / 540.0 + p * (769.0 / 17280.0 + p * (-221.0 / 8505.0))))));
  }

  double w;
  if (x < -0.32) {
    w = -1.0 + p - p * p / 3.0 + 11.0 / 72.0 * p * p * p;
  } else if (x < 10.0) {
    const double l = std::log1p(x);
    w = l * (1.0 - std::log1p(l) / (2.0 + l));
  } else {
    const double l1 = std::log(x);
    const double l2 = std::log(l1);
    w = l1 - l2 + l2 / l1;
  }

  for (int i = 0; i < kLambertMaxIter; ++i) {
    const double ew = std::exp(w);
    const double f = w * ew - x;
    const double wp1 = w + 1.0;
    const double step = f / (ew * wp1 - (w + 2.0) * f / (2.0 * wp1));
    w -= step;
    if (std::fabs(step) <= kLambertTol * (1.0 + std::fabs(w))) break;
  }
  return w;
}

double ctilde_prime_inv(double x) {
  if (!(x >= 0.0)) domain("ctilde_prime_inv", x);
  if (x == 0.0) return 0.0;
  constexpr double kBelowOne = 1.0 - 0x1p-53;
  if (x > 1e150) return kBelowOne;
  const double w = lambert_w0(2.0 * x * x / kPi);
  const double rho = std::erf(std::sqrt(0.5 * w));
  return rho < 1.0 ? rho : kBelowOne;
}

}  // namespace novelty::specfun
