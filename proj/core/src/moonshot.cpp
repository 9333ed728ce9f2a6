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

#include "novelty/moonshot.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "novelty/specfun.hpp"
#include "novelty/valuation.hpp"
#include "numeric.hpp"

namespace novelty {
namespace {

constexpr int kMaxChain = 100000;
constexpr double kNegligible = 1e-18;
constexpr double kDeltaTol = 1e-9;
constexpr int kDeltaScan = 400;
constexpr int kEtaScan = 241;
constexpr double kEtaScanLo = 1e-4;
constexpr double kEtaScanHi = 1e2;
constexpr double kXhatStep = 0.025;

void check_delta(double delta) {
  if (!(delta >= 0.0 && delta < 1.0)) throw std::invalid_argument("delta must lie in [0, 1)");
}

// Discounted sum of expected value increments after period 1, scaled so
// that the first increment carries weight 1 (I in the header comment).
double increments_consistent(KnowledgeSet f, const FirstChoice& first, const EconomyParams& p,
                             double delta) {
  const double q = p.q;
  double alive = first.guaranteed ? 1.0 : first.rho;
  double total = alive * benefit(first.d, Length::infinite(), q);
  f = insert(f, {f.highest() + first.d, 0.0});
  double w = 1.0;
  for (int t = 2; t < kMaxChain; ++t) {
    w *= delta;
    if (w * alive < kNegligible) break;
    const ResearchChoice c = opt_choice(f, p);
    const double v = benefit(c.d, c.X, q);
    if (c.expand) {
      // Constant step and output from here on: sum_n w delta^n alive rho^{n+1} v.
      total += w * alive * c.rho * v / (1.0 - delta * c.rho);
      return total;
    }
    total += w * alive * c.rho * v;
    alive *= c.rho;
    f = insert(f, {question_of(c, f), 0.0});
  }
  return total;
}

double increments_replication(const KnowledgeSet& f, const FirstChoice& first, const EconomyParams& p,
                        double delta) {
  if (f.size() != 1) {
    throw std::invalid_argument("paper-replication mode starts from a single known point");
  }
  const double q = p.q;
  const ReplicationBenchmark b = replication_benchmark(p);
  const double alive = first.guaranteed ? 1.0 : first.rho;
  const double v_inf = b.d_inf * (1.0 - b.d_inf / (6.0 * q));
  const double tail = delta * b.rho_inf * v_inf / (1.0 - delta * b.rho_inf);
  double total = alive * benefit(first.d, Length::infinite(), q);
  if (first.d <= 3.0 * q * (1.0 + 1e-12)) return total + alive * tail;
  if (std::fabs(first.d - 6.0 * q) <= 1e-12 * q) {
    const double v_bridge = benefit(3.0 * q, Length(6.0 * q), q);
    return total + alive * (delta * b.rho_6q * v_bridge + delta * b.rho_6q * tail);
  }
  throw std::invalid_argument(
      "paper-replication mode only defines first distances <= 3q or exactly 6q");
}

double increments(const KnowledgeSet& f, const FirstChoice& first, const EconomyParams& p,
                  double delta, NpvMode mode) {
  return mode == NpvMode::kPaperReplication ? increments_replication(f, first, p, delta)
                                            : increments_consistent(f, first, p, delta);
}

KnowledgeSet origin() { return make_knowledge({{0.0, 0.0}}); }

// (1 - delta) times the level benefit of 6q over 3q; same sign, bounded.
double unit_benefit(const EconomyParams& p, double delta, NpvMode mode) {
  const KnowledgeSet f = origin();
  return increments(f, {6.0 * p.q}, p, delta, mode) - increments(f, {3.0 * p.q}, p, delta, mode);
}

}  // namespace

const char* to_string(NpvMode m) {
  return m == NpvMode::kPaperReplication ? "paper-replication" : "consistent-foc";
}

NpvMode parse_npv_mode(const std::string& s) {
  if (s == "paper" || s == "paper-replication") return NpvMode::kPaperReplication;
  if (s == "consistent" || s == "consistent-foc") return NpvMode::kConsistentFoc;
  throw std::invalid_argument("unknown mode '" + s + "'");
}

bool is_moonshot(double x, const KnowledgeSet& f, double q) {
  if (x >= f.lowest() && x <= f.highest()) return false;
  return distance(x, f) > 3.0 * q;
}

double chain_npv(const KnowledgeSet& f1, const FirstChoice& first, const EconomyParams& p,
                 double delta, NpvMode mode) {
  p.validate();
  check_delta(delta);
  if (!(first.d > 0.0)) throw std::invalid_argument("first distance must be positive");
  if (!first.guaranteed && !(first.rho >= 0.0 && first.rho <= 1.0)) {
    throw std::invalid_argument("first-period success probability outside [0, 1]");
  }
  const double v1 = value_of_knowledge(f1, p.q);
  return (v1 + increments(f1, first, p, delta, mode)) / (1.0 - delta);
}

ReplicationBenchmark replication_benchmark(const EconomyParams& p) {
  p.validate();
  if (p.q != 1.0) throw std::invalid_argument("the published recipe is stated for q = 1");
  if (!(p.eta > 0.0)) throw std::invalid_argument("the published recipe needs eta > 0");
  using specfun::ctilde;
  using specfun::ctilde_prime_inv;
  const double q = p.q;
  const double eta = p.eta;
  auto rho_of = [&](double d) { return ctilde_prime_inv((6.0 * q - d) / (6.0 * q * eta)); };
  auto resid = [&](double d) {
    const double r = rho_of(d);
    return d - (3.0 * q - eta * ctilde(r) / r);
  };
  ReplicationBenchmark b{};
  b.d_inf = detail::bisect_root(resid, 1e-12 * q, 3.0 * q, 1e-14 * q, "paper d_inf");
  b.rho_inf = rho_of(b.d_inf);
  const double k = 3.0 - 2.0 / std::sqrt(3.0);
  const double w = specfun::lambert_w0(8.0 * k / (9.0 * eta * eta * std::numbers::pi));
  b.rho_6q = std::erf(std::sqrt(w / 2.0));
  b.rho_6q_substituted = ctilde_prime_inv(benefit(3.0 * q, Length(6.0 * q), q) / (1.5 * q * eta));
  b.loss = (1.5 - 2.0 / std::sqrt(3.0)) * q;
  b.gain_delta1 = b.rho_6q * k * q - b.rho_inf * b.d_inf * (1.0 - b.d_inf / (6.0 * q));
  b.benefit_delta1 = b.gain_delta1 - b.loss;
  return b;
}

MoonshotAssessment assess_moonshot(double x_hat, const EconomyParams& p, double delta,
                                   NpvMode mode) {
  const KnowledgeSet f = origin();
  MoonshotAssessment a{};
  a.x_hat = x_hat;
  a.delta = delta;
  a.mode = mode;
  a.npv_moonshot = chain_npv(f, {x_hat}, p, delta, mode);
  a.npv_myopic = chain_npv(f, {3.0 * p.q}, p, delta, mode);
  a.benefit = a.npv_moonshot - a.npv_myopic;
  return a;
}

double conservative_benefit(const EconomyParams& p, double delta, NpvMode mode) {
  p.validate();
  check_delta(delta);
  const double q = p.q;
  const double loss = benefit(3.0 * q, Length::infinite(), q) -
                      benefit(6.0 * q, Length::infinite(), q);
  const double v_bridge = benefit(3.0 * q, Length(6.0 * q), q);
  double rho6, rho_inf, d_inf;
  if (mode == NpvMode::kPaperReplication) {
    const ReplicationBenchmark b = replication_benchmark(p);
    rho6 = b.rho_6q;
    rho_inf = b.rho_inf;
    d_inf = b.d_inf;
  } else {
    const ResearchChoice bridge = opt_deepen(6.0 * q, p);
    const ResearchChoice e = opt_expand(p);
    rho6 = bridge.rho;
    rho_inf = e.rho;
    d_inf = e.d;
  }
  return delta * (rho6 * v_bridge - rho_inf * benefit(d_inf, Length::infinite(), q)) - loss;
}

std::optional<double> critical_delta(const EconomyParams& p, NpvMode mode) {
  p.validate();
  auto f = [&](double delta) { return unit_benefit(p, delta, mode); };
  const double top = 1.0 - 1e-9;
  double prev_x = 0.0;
  double prev = f(prev_x);
  for (int i = 1; i <= kDeltaScan; ++i) {
    const double x = i == kDeltaScan ? top : top * i / kDeltaScan;
    const double cur = f(x);
    if (prev <= 0.0 && cur > 0.0) return detail::bisect_root(f, prev_x, x, kDeltaTol, "critical delta");
    prev_x = x;
    prev = cur;
  }
  return std::nullopt;
}

std::optional<std::pair<double, double>> eta_range(double delta, const EconomyParams& p,
                                                   NpvMode mode) {
  p.validate();
  check_delta(delta);
  auto f = [&](double log_eta) {
    EconomyParams e = p;
    e.eta = std::exp(log_eta);
    return unit_benefit(e, delta, mode);
  };
  const double a = std::log(kEtaScanLo);
  const double b = std::log(kEtaScanHi);
  std::vector<double> xs(kEtaScan), fs(kEtaScan);
  for (int i = 0; i < kEtaScan; ++i) {
    xs[i] = a + (b - a) * i / (kEtaScan - 1);
    fs[i] = f(xs[i]);
  }
  int first_pos = -1;
  for (int i = 0; i < kEtaScan; ++i) {
    if (fs[i] > 0.0) {
      first_pos = i;
      break;
    }
  }
  if (first_pos < 0) return std::nullopt;
  const double tol = 1e-12;
  double lo = std::exp(xs[0]);
  if (first_pos > 0) {
    lo = std::exp(detail::bisect_root(f, xs[first_pos - 1], xs[first_pos], tol, "eta low"));
  }
  double hi = std::exp(xs[kEtaScan - 1]);
  for (int i = first_pos + 1; i < kEtaScan; ++i) {
    if (fs[i] <= 0.0) {
      hi = std::exp(detail::bisect_root(f, xs[i - 1], xs[i], tol, "eta high"));
      break;
    }
  }
  return std::make_pair(lo, hi);
}

MoonshotAssessment optimal_moonshot(double delta, const EconomyParams& p,
                                    std::optional<double> upper) {
  p.validate();
  check_delta(delta);
  const double q = p.q;
  const double lo = 3.0 * q;
  const double hi = upper.value_or(12.0 * q);
  if (!(hi > lo)) throw std::invalid_argument("search bracket must extend beyond 3q");
  const KnowledgeSet f = origin();
  auto npv = [&](double x) { return chain_npv(f, {x}, p, delta); };

  const int n = std::max(2, static_cast<int>(std::ceil((hi - lo) / (kXhatStep * q))));
  int best_i = 0;
  double best_v = npv(lo);
  for (int i = 1; i <= n; ++i) {
    const double v = npv(lo + (hi - lo) * i / n);
    if (v > best_v) {
      best_v = v;
      best_i = i;
    }
  }
  double best_x = lo + (hi - lo) * best_i / n;
  const double a = lo + (hi - lo) * std::max(0, best_i - 1) / n;
  const double b = lo + (hi - lo) * std::min(n, best_i + 1) / n;
  const detail::Extremum r = detail::brent_max(npv, a, b);
  if (r.value > best_v + 1e-12 * std::fabs(best_v)) {
    best_x = r.x;
    best_v = r.value;
  }

  MoonshotAssessment out{};
  out.x_hat = best_x;
  out.delta = delta;
  out.mode = NpvMode::kConsistentFoc;
  out.npv_moonshot = best_v;
  out.npv_myopic = npv(lo);
  out.benefit = out.npv_moonshot - out.npv_myopic;
  return out;
}

}  // namespace novelty
