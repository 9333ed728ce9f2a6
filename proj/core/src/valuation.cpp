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

#include "novelty/valuation.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <stdexcept>

#include "numeric.hpp"

namespace novelty {
namespace {

constexpr int kInteriorScan = 200;
constexpr double kDerivTol = 1e-10;
constexpr double kTildeTol = 1e-8;

void check_q(double q) {
  if (!(q > 0.0)) throw std::invalid_argument("q must be positive");
}

void check_canonical(double d, Length X) {
  if (!(d >= 0.0) || !std::isfinite(d)) {
    throw std::domain_error("distance must be finite and nonnegative");
  }
  if (X.is_finite() && d > 0.5 * X.value()) {
    throw std::domain_error("distance exceeds half the area length; reflect first");
  }
}

// Loss-truncation term sqrt(a)(a-4q)^{3/2} for a > 4q.
double tail(double a, double q) {
  return a > 4.0 * q ? std::sqrt(a) * std::pow(a - 4.0 * q, 1.5) : 0.0;
}

// Derivative of tail(a): 2(a-q) sqrt((a-4q)/a).
double tail_da(double a, double q) {
  return a > 4.0 * q ? 2.0 * (a - q) * std::sqrt((a - 4.0 * q) / a) : 0.0;
}

// Local maximizer of V(.;X) strictly inside (3q, min(X/2, 4q)), if any.
std::optional<double> interior_critical(double X, double q) {
  const double lo = 3.0 * q;
  const double hi = std::min(0.5 * X, 4.0 * q);
  if (!(hi > lo)) return std::nullopt;
  auto vd = [&](double d) { return benefit_dd(d, Length(X), q); };
  double prev_d = lo;
  double prev = vd(lo);
  for (int i = 1; i <= kInteriorScan; ++i) {
    const double d = lo + (hi - lo) * i / kInteriorScan;
    const double cur = vd(d);
    if (prev > 0.0 && cur < 0.0) {
      return detail::bisect_root(vd, prev_d, d, kDerivTol * q, "d0 interior root");
    }
    prev_d = d;
    prev = cur;
  }
  return std::nullopt;
}

bool interior_beats_boundary(double X, double q) {
  const auto d = interior_critical(X, q);
  if (!d || *d >= 0.5 * X) return false;
  return benefit(*d, Length(X), q) > benefit(0.5 * X, Length(X), q);
}

}  // namespace

double sigma2(double d, Length X) {
  check_canonical(d, X);
  if (X.is_infinite()) return d;
  const double x = X.value();
  return x == 0.0 ? 0.0 : d * (x - d) / x;
}

double sigma2_dd(double d, Length X) {
  check_canonical(d, X);
  if (X.is_infinite()) return 1.0;
  const double x = X.value();
  return x == 0.0 ? 0.0 : (x - 2.0 * d) / x;
}

double area_value(double X, double q) {
  check_q(q);
  if (!(X >= 0.0) || !std::isfinite(X)) {
    throw std::invalid_argument("area_value: length must be finite and nonnegative");
  }
  double v = X - X * X / (6.0 * q);
  if (X > 4.0 * q) v += (X - 4.0 * q) / (6.0 * q) * std::sqrt(X) * std::sqrt(X - 4.0 * q);
  return v;
}

double value_of_knowledge(const KnowledgeSet& f, double q) {
  check_q(q);
  double v = q;
  for (std::size_t i = 0; i + 1 < f.size(); ++i) v += area_value(f[i + 1].x - f[i].x, q);
  return v;
}

double benefit(double d, Length X, double q) {
  check_q(q);
  check_canonical(d, X);
  if (X.is_infinite()) return (6.0 * q * d - d * d + tail(d, q)) / (6.0 * q);
  const double x = X.value();
  return (2.0 * x * sigma2(d, X) + tail(d, q) + tail(x - d, q) - tail(x, q)) / (6.0 * q);
}

double benefit_dd(double d, Length X, double q) {
  check_q(q);
  check_canonical(d, X);
  if (X.is_infinite()) return (6.0 * q - 2.0 * d + tail_da(d, q)) / (6.0 * q);
  const double x = X.value();
  return (2.0 * x - 4.0 * d + tail_da(d, q) - tail_da(x - d, q)) / (6.0 * q);
}

double d0(Length X, double q) {
  check_q(q);
  if (X.is_infinite()) return 3.0 * q;
  const double x = X.value();
  if (!(x > 0.0)) throw std::invalid_argument("d0: area length must be positive");
  const auto d = interior_critical(x, q);
  if (d && *d < 0.5 * x && benefit(*d, X, q) > benefit(0.5 * x, X, q)) return *d;
  return 0.5 * x;
}

double x_tilde0_unit() {
  static const double value = [] {
    const double check = (2.0 / 3.0) * (4.0 + std::cbrt(19.0 - 3.0 * std::sqrt(2.0)) +
                                        std::cbrt(19.0 + 3.0 * std::sqrt(2.0)));
    if (interior_beats_boundary(check, 1.0) || !interior_beats_boundary(8.0, 1.0)) {
      throw ConvergenceError("x_tilde0: switch not bracketed by [x_check0, 8q]");
    }
    return detail::bisect_switch([](double X) { return interior_beats_boundary(X, 1.0); },
                                 check, 8.0, kTildeTol);
  }();
  return value;
}

BenefitCutoffs benefit_cutoffs(double q) {
  check_q(q);
  auto hat = [](double l) {
    return l * l / 12.0 - std::sqrt(l) / 6.0 * std::pow(l - 4.0, 1.5) - 1.5;
  };
  const double x_hat = detail::bisect_root(hat, 4.0, 6.0, 1e-13, "x_hat0");
  const double x_check = (2.0 / 3.0) * (4.0 + std::cbrt(19.0 - 3.0 * std::sqrt(2.0)) +
                                        std::cbrt(19.0 + 3.0 * std::sqrt(2.0)));
  return {x_hat * q, x_check * q, x_tilde0_unit() * q, 3.0 * q, 1.5 * q};
}

}  // namespace novelty
