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

#include "novelty/researcher.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numbers>
#include <stdexcept>

#include "novelty/specfun.hpp"
#include "novelty/valuation.hpp"
#include "numeric.hpp"

namespace novelty {
namespace {

using specfun::ctilde;
using specfun::ctilde_prime;
using specfun::ctilde_prime_inv;

constexpr double kRhoLo = 1e-12;
constexpr double kRhoHi = 1.0 - 1e-9;
constexpr double kRhoTol = 1e-15;
constexpr int kDeepenScan = 256;
constexpr double kCutoffTol = 1e-9;

// Derivative of the payoff profile max_rho u(d, rho) in d. By the envelope
// theorem this is the d-first-order condition evaluated at the best rho.
double profile_dd(double d, Length X, const EconomyParams& p) {
  const double rho = opt_rho_given_d(d, X, p);
  return rho * benefit_dd(d, X, p.q) - p.eta * ctilde(rho) * sigma2_dd(d, X);
}

ResearchChoice make_deepen(double X, double d, const EconomyParams& p) {
  ResearchChoice c;
  c.expand = false;
  c.X = Length(X);
  c.d = d;
  c.rho = opt_rho_given_d(d, c.X, p);
  c.payoff = payoff(c.rho, d, c.X, p);
  return c;
}

// Best interior first-order solution with d < 4q and X - d > 4q.
bool best_interior(double X, const EconomyParams& p, ResearchChoice* out) {
  const double q = p.q;
  const double hi = std::min({4.0 * q, 0.5 * X, X - 4.0 * q});
  if (!(hi > 0.0)) return false;
  const Length len(X);
  auto g = [&](double d) { return profile_dd(d, len, p); };
  bool found = false;
  double prev_d = hi * 1e-6;
  double prev = g(prev_d);
  for (int i = 1; i <= kDeepenScan; ++i) {
    const double d = hi * 1e-6 + (hi - hi * 1e-6) * i / kDeepenScan * (1.0 - 1e-12);
    const double cur = g(d);
    if (prev > 0.0 && cur < 0.0) {
      const double root = detail::bisect_root(g, prev_d, d, 1e-13 * q, "interior FOC");
      ResearchChoice c = make_deepen(X, root, p);
      if (!found || c.payoff > out->payoff) *out = c;
      found = true;
    }
    prev_d = d;
    prev = cur;
  }
  return found;
}

}  // namespace

void EconomyParams::validate() const {
  if (!(q > 0.0) || !std::isfinite(q)) throw std::invalid_argument("q must be positive");
  if (!(eta >= 0.0) || !std::isfinite(eta)) {
    throw std::invalid_argument("eta must be nonnegative");
  }
}

double cost(double rho, double d, Length X, const EconomyParams& p) {
  p.validate();
  const double s2 = sigma2(d, X);
  if (s2 == 0.0) return 0.0;
  return ctilde(rho) * s2;
}

double payoff(double rho, double d, Length X, const EconomyParams& p) {
  p.validate();
  const double v = benefit(d, X, p.q);
  if (p.eta == 0.0) {
    if (!(rho >= 0.0 && rho <= 1.0)) throw std::domain_error("rho outside [0,1]");
    return rho * v;
  }
  const double c = cost(rho, d, X, p);
  if (std::isinf(c)) return -std::numeric_limits<double>::infinity();
  return rho * v - p.eta * c;
}

double opt_rho_given_d(double d, Length X, const EconomyParams& p) {
  p.validate();
  const double s2 = sigma2(d, X);
  if (d == 0.0 || s2 == 0.0) return 0.0;
  if (p.eta == 0.0) return 1.0;
  return ctilde_prime_inv(benefit(d, X, p.q) / (p.eta * s2));
}

ResearchChoice opt_expand(const EconomyParams& p, Side side) {
  p.validate();
  ResearchChoice c;
  c.expand = true;
  c.side = side;
  c.X = Length::infinite();
  if (p.eta == 0.0) {
    c.d = 3.0 * p.q;
    c.rho = 1.0;
    c.payoff = benefit(c.d, c.X, p.q);
    return c;
  }
  const double q = p.q;
  auto d_of = [q](double rho) {
    const double ct = ctilde(rho);
    return 3.0 * q * (1.0 - ct / (2.0 * rho * ctilde_prime(rho) - ct));
  };
  auto resid = [&](double rho) {
    return p.eta * ctilde_prime(rho) - (1.0 - d_of(rho) / (6.0 * q));
  };
  c.rho = detail::bisect_root(resid, kRhoLo, kRhoHi, kRhoTol, "opt_expand");
  c.d = d_of(c.rho);
  c.payoff = payoff(c.rho, c.d, c.X, p);
  return c;
}

ResearchChoice opt_deepen(double X, const EconomyParams& p) {
  p.validate();
  if (!(X > 0.0) || !std::isfinite(X)) {
    throw std::invalid_argument("opt_deepen: area length must be finite and positive");
  }
  if (p.eta == 0.0) {
    ResearchChoice c;
    c.expand = false;
    c.X = Length(X);
    c.d = d0(c.X, p.q);
    c.rho = 1.0;
    c.payoff = benefit(c.d, c.X, p.q);
    return c;
  }
  ResearchChoice best = make_deepen(X, 0.5 * X, p);
  ResearchChoice inner;
  if (best_interior(X, p, &inner) && inner.payoff > best.payoff) best = inner;
  return best;
}

ResearchChoice opt_choice(const KnowledgeSet& f, const EconomyParams& p, Side side) {
  ResearchChoice best = opt_expand(p, side);
  std::map<double, ResearchChoice> seen;
  for (std::size_t i = 0; i + 1 < f.size(); ++i) {
    const double X = f[i + 1].x - f[i].x;
    auto it = seen.find(X);
    if (it == seen.end()) it = seen.emplace(X, opt_deepen(X, p)).first;
    if (it->second.payoff > best.payoff) {
      best = it->second;
      best.anchor = i;
    }
  }
  return best;
}

double question_of(const ResearchChoice& c, const KnowledgeSet& f) {
  if (c.expand) return c.side == Side::kRight ? f.highest() + c.d : f.lowest() - c.d;
  if (c.anchor + 1 >= f.size()) throw std::out_of_range("question_of: anchor out of range");
  return f[c.anchor].x + c.d;
}

double x_dot(double q) {
  return 8.0 * std::cos(std::numbers::pi / 18.0) / std::sqrt(3.0) * q;
}

ResearcherCutoffs researcher_cutoffs(const EconomyParams& p) {
  p.validate();
  if (!(p.eta > 0.0)) throw std::invalid_argument("researcher_cutoffs: eta must be positive");
  const double q = p.q;
  const double tol = kCutoffTol * q;
  const double u_exp = opt_expand(p).payoff;

  ResearcherCutoffs out{};
  out.x_dot = x_dot(q);
  out.x_hat = detail::bisect_root(
      [&](double X) { return opt_deepen(X, p).payoff - u_exp; }, 2.0 * q, 6.0 * q, tol,
      "x_hat");

  auto interior_wins = [&](double X) {
    ResearchChoice inner;
    if (!best_interior(X, p, &inner)) return false;
    return inner.payoff > make_deepen(X, 0.5 * X, p).payoff;
  };
  if (interior_wins(4.0 * q) || !interior_wins(8.0 * q)) {
    throw ConvergenceError("x_tilde: switch not bracketed by [4q, 8q]");
  }
  out.x_tilde = detail::bisect_switch(interior_wins, 4.0 * q, 8.0 * q, tol);
  out.x_check =
      detail::brent_max([&](double X) { return opt_deepen(X, p).payoff; }, 4.0 * q,
                        out.x_tilde)
          .x;

  if (!(2.0 * q < out.x_hat && out.x_hat < out.x_dot && out.x_dot < out.x_check &&
        out.x_check < out.x_tilde && out.x_tilde < 8.0 * q)) {
    throw ConvergenceError("researcher cutoffs violate the expected ordering");
  }
  return out;
}

const char* to_string(Interaction i) {
  switch (i) {
    case Interaction::kIndependent: return "independent";
    case Interaction::kComplements: return "complements";
    case Interaction::kSubstitutes: return "substitutes";
  }
  return "unknown";
}

double d_hat_minus(double X, double q) {
  const double disc = (18.0 * q * q - 8.0 * q * X + X * X) / 2.0;
  return 2.0 / (X - 6.0 * q) *
         ((X * X - 6.0 * q * X + 6.0 * q * q) - (X - 2.0 * q) * std::sqrt(disc));
}

Interaction substitutes_or_complements(double d, Length X, const EconomyParams& p) {
  p.validate();
  sigma2(d, X);  // domain check
  if (X.is_infinite()) return Interaction::kSubstitutes;
  const double x = X.value();
  const double q = p.q;
  if (x <= 4.0 * q) return Interaction::kIndependent;
  if (x <= (4.0 + std::sqrt(6.0)) * q) return Interaction::kComplements;
  if (x < 8.0 * q) {
    const double dh = d_hat_minus(x, q);
    if (d < dh) return Interaction::kSubstitutes;
    if (d > dh) return Interaction::kComplements;
    return Interaction::kIndependent;
  }
  return Interaction::kSubstitutes;
}

}  // namespace novelty
