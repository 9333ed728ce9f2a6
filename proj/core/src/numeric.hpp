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

// Thin wrappers over Boost.Math root bracketing and Brent minimization.

#pragma once

#include <cmath>
#include <cstdint>
#include <string>
#include <utility>

#include <boost/math/tools/minima.hpp>
#include <boost/math/tools/roots.hpp>

#include "novelty/errors.hpp"

namespace novelty::detail {

inline constexpr int kMaxBisect = 200;

// Root of f on [lo, hi] by bisection. f(lo) and f(hi) must differ in sign.
template <class F>
double bisect_root(F&& f, double lo, double hi, double abs_tol,
                   const char* what, int max_iter = kMaxBisect) {
  const double flo = f(lo);
  const double fhi = f(hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if (std::signbit(flo) == std::signbit(fhi)) {
    throw ConvergenceError(std::string(what) + ": root not bracketed");
  }
  std::uintmax_t iters = static_cast<std::uintmax_t>(max_iter);
  auto tol = [abs_tol](double a, double b) { return std::fabs(b - a) <= abs_tol; };
  const auto br = boost::math::tools::bisect(f, lo, hi, tol, iters);
  return 0.5 * (br.first + br.second);
}

// Bisection on a predicate that is false at lo and true at hi. Returns the
// midpoint of the final bracket.
template <class P>
double bisect_switch(P&& pred, double lo, double hi, double abs_tol,
                     int max_iter = kMaxBisect) {
  for (int i = 0; i < max_iter && hi - lo > abs_tol; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (pred(mid)) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return 0.5 * (lo + hi);
}

struct Extremum {
  double x;
  double value;
};

// Maximizer of f on [lo, hi] by Brent's method.
template <class F>
Extremum brent_max(F&& f, double lo, double hi) {
  constexpr int kBits = std::numeric_limits<double>::digits / 2;
  std::uintmax_t iters = 500;
  const auto r = boost::math::tools::brent_find_minima(
      [&f](double x) { return -f(x); }, lo, hi, kBits, iters);
  return {r.first, -r.second};
}

}  // namespace novelty::detail
