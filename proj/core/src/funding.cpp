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

#include "novelty/funding.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "novelty/specfun.hpp"
#include "novelty/valuation.hpp"
#include "numeric.hpp"

namespace novelty {
namespace {

using specfun::ctilde;
using specfun::ctilde_prime;
using specfun::ctilde_prime_inv;
using specfun::ctilde_second;

constexpr double kRhoLo = 1e-12;
constexpr double kRhoHi = 1.0 - 1e-9;
constexpr double kRhoTol = 1e-15;
constexpr int kExpScan = 2000;
constexpr double kExpReach = 20.0;  // in units of q
constexpr double kBoundSlack = 1e-9;

double v_inf(double d, double q) { return benefit(d, Length::infinite(), q); }

// Gross benefit of success at distance d including the expected reward.
double gross(double d, double zeta, const FundingParams& fp, double q) {
  return v_inf(d, q) + reward_prob(d, fp.s, fp.tech) * zeta;
}

// Best output and payoff at a fixed distance.
FrontierPoint at_distance(double d, const FundingScheme& sc, const FundingParams& fp, double q) {
  const double b = gross(d, sc.zeta, fp, q);
  FrontierPoint pt{};
  pt.d = d;
  pt.scheme = sc;
  pt.rho = b > 0.0 ? ctilde_prime_inv(b / (sc.eta * d)) : 0.0;
  pt.payoff = pt.rho * b - sc.eta * ctilde(pt.rho) * d;
  return pt;
}

// Interior candidate for the linear technology. With A = 1 + zeta/s and
// e = rho c'/c the two first-order conditions give d = 6qA(e-1)/(2e-1), and
// the rho-condition residual is increasing in rho.
std::optional<FrontierPoint> interior_linear(const FundingScheme& sc, const FundingParams& fp,
                                             double q) {
  const double A = 1.0 + sc.zeta / fp.s;
  auto d_of = [&](double rho) {
    const double e = rho * ctilde_prime(rho) / ctilde(rho);
    return 6.0 * q * A * (e - 1.0) / (2.0 * e - 1.0);
  };
  auto resid = [&](double rho) {
    return sc.eta * ctilde_prime(rho) - A + d_of(rho) / (6.0 * q);
  };
  const double rho = detail::bisect_root(resid, kRhoLo, kRhoHi, kRhoTol, "rewarded researcher");
  const double d = d_of(rho);
  if (!(d > 0.0 && d <= 4.0 * q && d < fp.s)) return std::nullopt;
  FrontierPoint pt = at_distance(d, sc, fp, q);
  pt.rho = rho;
  pt.payoff = rho * gross(d, sc.zeta, fp, q) - sc.eta * ctilde(rho) * d;
  return pt;
}

FrontierPoint solve_linear(const FundingScheme& sc, const FundingParams& fp, double q) {
  FrontierPoint kink = at_distance(fp.s, sc, fp, q);
  kink.at_kink = true;
  const auto inner = interior_linear(sc, fp, q);
  if (inner && inner->payoff >= kink.payoff) return *inner;
  return kink;
}

FrontierPoint solve_exponential(const FundingScheme& sc, const FundingParams& fp, double q) {
  const double hi = kExpReach * q;
  auto u = [&](double d) { return at_distance(d, sc, fp, q).payoff; };
  int best_i = 1;
  double best_u = u(hi / kExpScan);
  for (int i = 2; i <= kExpScan; ++i) {
    const double v = u(hi * i / kExpScan);
    if (v > best_u) {
      best_u = v;
      best_i = i;
    }
  }
  const double a = hi * std::max(1e-6, (best_i - 1.0) / kExpScan);
  const double b = hi * std::min(1.0, (best_i + 1.0) / kExpScan);
  const detail::Extremum r = detail::brent_max(u, a, b);
  const double d = r.value > best_u ? r.x : hi * best_i / kExpScan;
  return at_distance(d, sc, fp, q);
}

struct Candidate {
  double zeta;
  FrontierPoint point;
  double value;
};

// Dense scan of the budget line followed by Brent refinement on the two
// neighboring cells. The refined point is kept only on strict improvement,
// so corners survive exactly.
template <class Objective>
Candidate scan_budget(const FundingParams& fp, const EconomyParams& econ, int grid,
                      Objective&& obj) {
  if (grid < 3) throw std::invalid_argument("funding grid needs at least 3 points");
  auto eval = [&](double zeta) {
    const FundingScheme sc = scheme_on_budget(zeta, fp);
    const FrontierPoint pt = researcher_with_rewards(sc, fp, econ);
    return Candidate{zeta, pt, obj(pt)};
  };
  auto zeta_at = [&](int i) { return fp.K * i / (grid - 1); };
  Candidate best = eval(0.0);
  int best_i = 0;
  for (int i = 1; i < grid; ++i) {
    Candidate c = eval(zeta_at(i));
    if (c.value > best.value) {
      best = c;
      best_i = i;
    }
  }
  if (fp.K > 0.0) {
    const double a = zeta_at(std::max(0, best_i - 1));
    const double b = zeta_at(std::min(grid - 1, best_i + 1));
    const detail::Extremum r = detail::brent_max([&](double z) { return eval(z).value; }, a, b);
    if (r.value > best.value) best = eval(r.x);
  }
  return best;
}

FundingMix classify(double zeta, const FundingParams& fp) {
  const double tol = 1e-12 * std::max(1.0, fp.K);
  if (zeta <= tol) return FundingMix::kCostOnly;
  if (zeta >= fp.K - tol) return FundingMix::kRewardsOnly;
  return FundingMix::kMix;
}

}  // namespace

const char* to_string(RewardTech t) {
  return t == RewardTech::kLinear ? "linear" : "exponential";
}

RewardTech parse_reward_tech(const std::string& s) {
  if (s == "linear") return RewardTech::kLinear;
  if (s == "exponential") return RewardTech::kExponential;
  throw std::invalid_argument("unknown reward technology '" + s + "'");
}

const char* to_string(FundingMix m) {
  switch (m) {
    case FundingMix::kCostOnly: return "cost-only";
    case FundingMix::kRewardsOnly: return "rewards-only";
    case FundingMix::kMix: return "mix";
  }
  return "unknown";
}

void FundingParams::validate(double q) const {
  if (!(K >= 0.0) || !std::isfinite(K)) throw std::invalid_argument("K must be nonnegative");
  if (!(kappa > 0.0) || !std::isfinite(kappa)) throw std::invalid_argument("kappa must be positive");
  if (!(eta0 > 0.0) || !std::isfinite(eta0)) throw std::invalid_argument("eta0 must be positive");
  if (!(s > 0.0) || !std::isfinite(s)) throw std::invalid_argument("s must be positive");
  if (tech == RewardTech::kLinear && s < 4.0 * q) {
    throw std::invalid_argument("s must be at least 4q for the linear technology");
  }
  if (!(kappa > K / eta0)) throw std::invalid_argument("kappa must exceed K / eta0");
}

FundingScheme scheme_on_budget(double zeta, const FundingParams& fp) {
  if (!(zeta >= 0.0 && zeta <= fp.K)) throw std::invalid_argument("zeta must lie in [0, K]");
  const double h = (fp.K - zeta) / fp.kappa;
  return {zeta, h, fp.eta0 - h};
}

double reward_prob(double sigma2, double s, RewardTech tech) {
  if (!(sigma2 >= 0.0)) throw std::domain_error("reward_prob: negative variance");
  if (tech == RewardTech::kLinear) return sigma2 < s ? sigma2 / s : 1.0;
  return -std::expm1(-s * sigma2);
}

FrontierPoint researcher_with_rewards(const FundingScheme& scheme, const FundingParams& fp,
                                      const EconomyParams& econ) {
  econ.validate();
  if (!(scheme.eta > 0.0)) throw std::invalid_argument("funded cost weight must be positive");
  if (!(scheme.zeta >= 0.0)) throw std::invalid_argument("reward must be nonnegative");
  return fp.tech == RewardTech::kLinear ? solve_linear(scheme, fp, econ.q)
                                        : solve_exponential(scheme, fp, econ.q);
}

ImpliedScheme scheme_from_choice(double d, double rho, double s, double q) {
  if (!(rho > 0.0 && rho < 1.0)) throw std::domain_error("scheme_from_choice: rho outside (0,1)");
  if (!(d > 0.0)) throw std::domain_error("scheme_from_choice: d must be positive");
  const double c = ctilde(rho);
  const double gap = rho * ctilde_prime(rho) - c;
  const double eta = d / (6.0 * q) * rho / gap;
  if (!(eta > 0.0)) throw std::domain_error("scheme_from_choice: implied eta not positive");
  const double zeta = s * (d / (3.0 * q) - 1.0 + d / (6.0 * q) * c / gap);
  return {eta, zeta, zeta >= 0.0};
}

FeasibleBounds feasible_bounds(const FundingParams& fp, double q) {
  fp.validate(q);
  const EconomyParams econ{q, fp.eta0};
  // The closed-form frontier describes interior optima, so under the linear
  // technology each polar scheme is read on its interior branch when one
  // exists.
  auto polar = [&](double zeta) {
    const FundingScheme sc = scheme_on_budget(zeta, fp);
    if (fp.tech == RewardTech::kLinear) {
      if (const auto inner = interior_linear(sc, fp, q)) return inner->rho;
    }
    return researcher_with_rewards(sc, fp, econ).rho;
  };
  const double r_cost = polar(0.0);
  const double r_reward = polar(fp.K);
  if (r_reward < r_cost) return {r_reward, r_cost, true};
  return {r_cost, r_reward, false};
}

double frontier_d_of_rho(double rho, const FundingParams& fp, double q) {
  if (fp.tech != RewardTech::kLinear) {
    throw std::invalid_argument("the closed-form frontier needs the linear technology");
  }
  const FeasibleBounds b = feasible_bounds(fp, q);
  if (!(rho >= b.rho_low - kBoundSlack && rho <= b.rho_high + kBoundSlack)) {
    throw std::domain_error("frontier_d_of_rho: rho outside the feasible range");
  }
  const double c = ctilde(rho);
  const double cp = ctilde_prime(rho);
  const double s = fp.s;
  return 6.0 * q * (fp.K + s - fp.kappa * fp.eta0) * (rho * cp - c) /
         (2.0 * s * rho * cp - s * c - fp.kappa * rho);
}

double mrs_rho(double rho, double s) {
  return s * (2.0 * ctilde_prime(rho) - ctilde(rho) / rho);
}

double mrs_d(double rho, double s) {
  const double c = ctilde(rho);
  const double cp = ctilde_prime(rho);
  const double cpp = ctilde_second(rho);
  return s * cp * (c / rho - cp + c / cp * cpp) / (c / rho - cp + rho * cpp);
}

int complementarity_sign(double rho, const FundingParams& fp, double q) {
  fp.validate(q);
  const double v = (fp.K + fp.s - fp.kappa * fp.eta0) * (mrs_d(rho, fp.s) - fp.kappa);
  return (v > 0.0) - (v < 0.0);
}

FundingOptimum optimize_myopic(const FundingParams& fp, double q, int grid) {
  fp.validate(q);
  const EconomyParams econ{q, fp.eta0};
  const Candidate c = scan_budget(fp, econ, grid, [q](const FrontierPoint& pt) {
    return pt.rho * v_inf(pt.d, q);
  });
  return {c.point.scheme, c.point, c.value, classify(c.zeta, fp)};
}

ForwardOptimum optimize_forward(const FundingParams& fp, const EconomyParams& econ, double delta,
                                int grid) {
  econ.validate();
  fp.validate(econ.q);
  const KnowledgeSet f1 = make_knowledge({{0.0, 0.0}});
  auto npv = [&](const FrontierPoint& pt) {
    return chain_npv(f1, {pt.d, false, pt.rho}, econ, delta);
  };
  const Candidate c = scan_budget(fp, econ, grid, npv);
  ForwardOptimum out{};
  out.best = {c.point.scheme, c.point, c.value, classify(c.zeta, fp)};
  const FundingOptimum myopic = optimize_myopic(fp, econ.q, grid);
  out.assessment.x_hat = c.point.d;
  out.assessment.delta = delta;
  out.assessment.mode = NpvMode::kConsistentFoc;
  out.assessment.npv_moonshot = c.value;
  out.assessment.npv_myopic = npv(myopic.point);
  out.assessment.benefit = out.assessment.npv_moonshot - out.assessment.npv_myopic;
  out.moonshot = c.point.d > 3.0 * econ.q;
  return out;
}

}  // namespace novelty
