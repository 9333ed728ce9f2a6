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

#include "novelty/evolution.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "json.hpp"
#include "novelty/specfun.hpp"
#include "novelty/valuation.hpp"

namespace novelty {

SearchInterval prediction_interval(double mean, double sigma, double rho) {
  if (!(sigma >= 0.0)) throw std::domain_error("prediction_interval: sigma < 0");
  if (!(rho >= 0.0 && rho < 1.0)) {
    throw std::domain_error("prediction_interval: rho must lie in [0, 1)");
  }
  const double half = std::sqrt(2.0) * specfun::erf_inv(rho) * sigma;
  return {mean - half, mean + half};
}

double Rng::uniform() {
  const std::uint64_t bits = engine_() >> 11;
  return (static_cast<double>(bits) + 0.5) * 0x1p-53;
}

double Rng::standard_normal() {
  return std::sqrt(2.0) * specfun::erf_inv(2.0 * uniform() - 1.0);
}

double sample_answer(const KnowledgeSet& f, double x, Rng& rng) {
  if (f.contains(x)) throw std::invalid_argument("sample_answer: question already known");
  const Conjecture c = conjecture(x, f);
  return c.mean + std::sqrt(c.variance) * rng.standard_normal();
}

namespace {

StepResult attempt(const KnowledgeSet& f, const ResearchChoice& choice, Rng& rng,
                   bool force_success) {
  const double x = question_of(choice, f);
  const Conjecture c = conjecture(x, f);
  const double y = sample_answer(f, x, rng);
  SearchInterval iv;
  if (choice.rho >= 1.0) {
    constexpr double kInf = std::numeric_limits<double>::infinity();
    iv = {-kInf, kInf};
  } else {
    iv = prediction_interval(c.mean, std::sqrt(c.variance), choice.rho);
  }
  const bool ok = force_success || iv.contains(y);
  return {choice, x, y, iv, ok, ok ? insert(f, {x, y}) : f};
}

}  // namespace

StepResult step(const KnowledgeSet& f, const EconomyParams& p, Rng& rng,
                const StepOptions& opt) {
  return attempt(f, opt_choice(f, p, opt.side), rng, opt.force_success);
}

EvolutionTrace run(const KnowledgeSet& f1, const EconomyParams& p, int T,
                   std::uint64_t seed, const RunOptions& opt) {
  if (T < 1) throw std::invalid_argument("run: horizon must be at least 1");
  p.validate();
  EvolutionTrace trace{{}, seed, std::nullopt};
  Rng rng(seed);
  KnowledgeSet f = f1;
  for (int t = 1; t <= T; ++t) {
    StepResult r = [&] {
      if (t == 1 && opt.moonshot) {
        if (!(*opt.moonshot > 0.0)) throw std::invalid_argument("moonshot distance must be positive");
        ResearchChoice c;
        c.expand = true;
        c.side = opt.side;
        c.d = *opt.moonshot;
        c.rho = 1.0;
        c.payoff = benefit(c.d, Length::infinite(), p.q);
        return attempt(f, c, rng, true);
      }
      return step(f, p, rng, {opt.side, opt.force_success});
    }();
    f = r.after;
    trace.periods.push_back(
        {t, r.choice, r.x, r.y, r.interval, r.success, f, value_of_knowledge(f, p.q)});
    if (!r.success) {
      trace.halted_at = t;
      break;
    }
  }
  return trace;
}

double discounted_value(const EvolutionTrace& trace, double delta, int T) {
  if (!(delta >= 0.0 && delta <= 1.0)) throw std::invalid_argument("delta must lie in [0, 1]");
  double total = 0.0;
  double w = 1.0;
  int t = 1;
  for (const auto& rec : trace.periods) {
    if (t > T) return total;
    total += w * rec.value_after;
    w *= delta;
    ++t;
  }
  if (trace.periods.empty() || t > T) return total;
  // Remaining periods t..T keep the last value.
  const double v = trace.periods.back().value_after;
  const int n = T - t + 1;
  const double geo = delta == 1.0 ? n : (1.0 - std::pow(delta, n)) / (1.0 - delta);
  return total + w * v * geo;
}

std::string to_jsonl(const EvolutionTrace& trace) {
  std::string out;
  for (const auto& r : trace.periods) {
    nlohmann::json j;
    j["t"] = r.t;
    j["x"] = r.x;
    j["d"] = r.choice.d;
    j["X"] = r.choice.X.is_infinite() ? nlohmann::json(nullptr) : nlohmann::json(r.choice.X.value());
    j["rho"] = r.choice.rho;
    j["y"] = r.y;
    j["success"] = r.success;
    j["v"] = r.value_after;
    out += j.dump();
    out += '\n';
  }
  return out;
}

}  // namespace novelty
