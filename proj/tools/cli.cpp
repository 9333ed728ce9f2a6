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

#include "cli.hpp"

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <limits>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "novelty/errors.hpp"
#include "novelty/evolution.hpp"
#include "novelty/funding.hpp"
#include "novelty/knowledge.hpp"
#include "novelty/moonshot.hpp"
#include "novelty/researcher.hpp"
#include "novelty/valuation.hpp"
#include "novelty/version.hpp"

namespace novelty::cli {
namespace {

using nlohmann::json;

struct Config {
  double q = 1.0;
  double eta = 1.0;
  double delta = 0.9;
  std::string knowledge_file;
  std::string out;
  std::uint64_t seed = 1;
  int periods = 20;
  std::string mode = "consistent";
  double K = 3.0;
  double kappa = 16.0;
  double s = 6.0;
  double eta0 = 1.0;
  std::string tech = "linear";
  int grid = kFundingGrid;
  int points = 201;

  // Subcommand options.
  std::string curve = "none";
  std::string X = "inf";
  std::optional<double> d;
  double d_max = 0.0;
  bool with_cutoffs = false;
  bool force_success = false;
  std::optional<double> moonshot;
  std::string sweep = "none";
  double x_hat = 0.0;
  double lo = 0.0;
  double hi = 0.0;
};

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

// Finite values as numbers, infinities as null.
json jnum(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

Length parse_length(const std::string& s) {
  if (s == "inf" || s == "infinity") return Length::infinite();
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("cannot parse length '" + s + "'");
  }
  if (used != s.size()) throw std::invalid_argument("cannot parse length '" + s + "'");
  return Length(v);
}

EconomyParams econ(const Config& c) {
  EconomyParams p{c.q, c.eta};
  p.validate();
  return p;
}

FundingParams funding(const Config& c) {
  FundingParams fp{c.K, c.kappa, c.s, c.eta0, parse_reward_tech(c.tech)};
  fp.validate(c.q);
  return fp;
}

void check_delta(const Config& c) {
  if (!(c.delta >= 0.0 && c.delta < 1.0)) throw std::invalid_argument("delta must lie in [0, 1)");
}

KnowledgeSet knowledge(const Config& c) {
  if (c.knowledge_file.empty()) return make_knowledge({{0.0, 0.0}});
  return load_knowledge_file(c.knowledge_file);
}

std::vector<double> linspace(double a, double b, int n) {
  if (n < 2) throw std::invalid_argument("grids need at least 2 points");
  std::vector<double> v(n);
  for (int i = 0; i < n; ++i) v[i] = a + (b - a) * i / (n - 1);
  return v;
}

class Csv {
 public:
  Csv(std::ostream& os, const std::string& cmd, const Config& c, std::vector<std::string> cols)
      : os_(os) {
    os_ << "# knowctl " << kVersion << " cmd=" << cmd << " q=" << num(c.q) << " eta=" << num(c.eta)
        << " delta=" << num(c.delta) << " mode=" << c.mode << " K=" << num(c.K)
        << " kappa=" << num(c.kappa) << " s=" << num(c.s) << " eta0=" << num(c.eta0)
        << " tech=" << c.tech << " seed=" << c.seed << " periods=" << c.periods
        << " grid=" << c.grid << " points=" << c.points << " curve=" << c.curve << " X=" << c.X
        << " d_max=" << num(c.d_max) << " sweep=" << c.sweep << " x_hat=" << num(c.x_hat)
        << " lo=" << num(c.lo) << " hi=" << num(c.hi);
    if (!c.knowledge_file.empty()) os_ << " knowledge=" << c.knowledge_file;
    os_ << '\n';
    for (std::size_t i = 0; i < cols.size(); ++i) os_ << (i ? "," : "") << cols[i];
    os_ << '\n';
  }

  template <class... T>
  void row(const T&... cells) {
    bool first = true;
    ((os_ << (first ? "" : ",") << cell(cells), first = false), ...);
    os_ << '\n';
  }

 private:
  static std::string cell(double v) { return num(v); }
  static std::string cell(const std::string& s) { return s; }
  static std::string cell(const char* s) { return s; }
  std::ostream& os_;
};

json choice_json(const ResearchChoice& r, const KnowledgeSet& f) {
  json j;
  j["action"] = r.expand ? "expand" : "deepen";
  if (r.expand) {
    j["side"] = r.side == Side::kRight ? "right" : "left";
  } else {
    j["area"] = {f[r.anchor].x, f[r.anchor + 1].x};
  }
  j["X"] = r.X.is_infinite() ? json(nullptr) : json(r.X.value());
  j["d"] = r.d;
  j["x"] = question_of(r, f);
  j["rho"] = r.rho;
  j["payoff"] = r.payoff;
  return j;
}

json cutoffs_json(const Config& c) {
  const BenefitCutoffs b = benefit_cutoffs(c.q);
  json j;
  j["q"] = c.q;
  j["benefit"] = {{"x_hat0", b.x_hat0},
                  {"x_check0", b.x_check0},
                  {"x_tilde0", b.x_tilde0},
                  {"d0_inf", b.d0_inf},
                  {"v_inf_max", b.v_inf_max}};
  j["x_dot"] = x_dot(c.q);
  if (c.eta > 0.0) {
    const ResearcherCutoffs r = researcher_cutoffs(econ(c));
    j["researcher"] = {{"eta", c.eta},
                       {"x_hat", r.x_hat},
                       {"x_dot", r.x_dot},
                       {"x_check", r.x_check},
                       {"x_tilde", r.x_tilde}};
  }
  return j;
}

void cmd_value(const Config& c, std::ostream& os) {
  if (c.curve == "V") {
    const Length X = parse_length(c.X);
    const double top = c.d_max > 0.0 ? c.d_max
                       : X.is_infinite() ? 8.0 * c.q
                                         : 0.5 * X.value();
    Csv csv(os, "value", c, {"d", "X", "V"});
    for (double d : linspace(0.0, top, c.points)) csv.row(d, X.to_string(), benefit(d, X, c.q));
    return;
  }
  if (c.curve != "none") throw std::invalid_argument("unknown curve '" + c.curve + "'");
  const KnowledgeSet f = knowledge(c);
  json j;
  j["q"] = c.q;
  j["v"] = value_of_knowledge(f, c.q);
  json rows = json::array();
  for (const Area& a : areas(f)) {
    json r;
    if (a.kind == AreaKind::kBounded) {
      r["kind"] = "bounded";
      r["from"] = f[a.anchor].x;
      r["to"] = f[a.anchor + 1].x;
      r["X"] = a.length.value();
      r["value"] = area_value(a.length.value(), c.q);
    } else {
      r["kind"] = a.kind == AreaKind::kLeftUnbounded ? "left" : "right";
      r["frontier"] = f[a.anchor].x;
      r["X"] = nullptr;
      r["value"] = 0.5 * c.q;
    }
    rows.push_back(r);
  }
  j["areas"] = rows;
  os << j.dump(2) << '\n';
}

void cmd_benefit(const Config& c, std::ostream& os) {
  const Length X = parse_length(c.X);
  if (c.d) {
    json j;
    j["d"] = *c.d;
    j["X"] = X.is_infinite() ? json(nullptr) : json(X.value());
    j["V"] = benefit(*c.d, X, c.q);
    j["dV_dd"] = jnum(benefit_dd(*c.d, X, c.q));
    j["sigma2"] = sigma2(*c.d, X);
    os << j.dump(2) << '\n';
    return;
  }
  json j;
  j["X"] = X.is_infinite() ? json(nullptr) : json(X.value());
  j["d0"] = d0(X, c.q);
  j["V_at_d0"] = benefit(j["d0"].get<double>(), X, c.q);
  const BenefitCutoffs b = benefit_cutoffs(c.q);
  j["cutoffs"] = {{"x_hat0", b.x_hat0}, {"x_check0", b.x_check0}, {"x_tilde0", b.x_tilde0}};
  os << j.dump(2) << '\n';
}

void cmd_choose(const Config& c, std::ostream& os) {
  const EconomyParams p = econ(c);
  if (c.curve == "deepen") {
    const double top = c.hi > 0.0 ? c.hi : 10.0 * c.q;
    const double bottom = c.lo > 0.0 ? c.lo : 0.05 * c.q;
    const ResearchChoice e = opt_expand(p);
    Csv csv(os, "choose", c, {"X", "payoff", "d", "rho", "midpoint", "expand_payoff"});
    for (double X : linspace(bottom, top, c.points)) {
      const ResearchChoice r = opt_deepen(X, p);
      csv.row(X, r.payoff, r.d, r.rho, std::fabs(r.d - 0.5 * X) < 1e-12 * X ? "1" : "0",
              e.payoff);
    }
    return;
  }
  if (c.curve != "none") throw std::invalid_argument("unknown curve '" + c.curve + "'");
  const KnowledgeSet f = knowledge(c);
  json j;
  j["q"] = c.q;
  j["eta"] = c.eta;
  j["choice"] = choice_json(opt_choice(f, p), f);
  if (c.with_cutoffs) j["cutoffs"] = cutoffs_json(c);
  os << j.dump(2) << '\n';
}

void cmd_cutoffs(const Config& c, std::ostream& os) {
  econ(c);
  os << cutoffs_json(c).dump(2) << '\n';
}

void cmd_simulate(const Config& c, std::ostream& os) {
  const EconomyParams p = econ(c);
  if (c.periods < 1) throw std::invalid_argument("periods must be at least 1");
  RunOptions opt;
  opt.force_success = c.force_success;
  if (c.moonshot) opt.moonshot = *c.moonshot * c.q;
  const EvolutionTrace t = run(knowledge(c), p, c.periods, c.seed, opt);
  os << to_jsonl(t);
  json s;
  s["summary"] = true;
  s["seed"] = c.seed;
  s["periods"] = t.periods.size();
  s["halted_at"] = t.halted_at ? json(*t.halted_at) : json(nullptr);
  s["final_v"] = t.periods.empty() ? json(nullptr) : json(t.periods.back().value_after);
  s["discounted_value"] = discounted_value(t, c.delta, c.periods);
  os << s.dump() << '\n';
}

void cmd_moonshot(const Config& c, std::ostream& os) {
  const EconomyParams p = econ(c);
  check_delta(c);
  const NpvMode mode = parse_npv_mode(c.mode);
  const double x_hat = c.x_hat > 0.0 ? c.x_hat : 6.0 * c.q;
  if (c.sweep == "xhat") {
    const double top = c.hi > 0.0 ? c.hi : 12.0 * c.q;
    Csv csv(os, "moonshot", c, {"x_hat", "npv_moonshot", "npv_myopic", "benefit"});
    for (double x : linspace(3.0 * c.q, top, c.points)) {
      const MoonshotAssessment a = assess_moonshot(x, p, c.delta, mode);
      csv.row(x, a.npv_moonshot, a.npv_myopic, a.benefit);
    }
    return;
  }
  if (c.sweep == "eta") {
    const double lo = c.lo > 0.0 ? c.lo : 1e-3;
    const double hi = c.hi > 0.0 ? c.hi : 10.0;
    Csv csv(os, "moonshot", c, {"eta", "benefit", "conservative"});
    for (double le : linspace(std::log(lo), std::log(hi), c.points)) {
      EconomyParams e = p;
      e.eta = std::exp(le);
      const MoonshotAssessment a = assess_moonshot(x_hat, e, c.delta, mode);
      csv.row(e.eta, a.benefit, conservative_benefit(e, c.delta, mode) / (1.0 - c.delta));
    }
    return;
  }
  if (c.sweep == "delta") {
    Csv csv(os, "moonshot", c, {"delta", "benefit", "conservative"});
    for (double d : linspace(0.0, 0.99, c.points)) {
      const MoonshotAssessment a = assess_moonshot(x_hat, p, d, mode);
      csv.row(d, a.benefit, conservative_benefit(p, d, mode) / (1.0 - d));
    }
    return;
  }
  if (c.sweep != "none") throw std::invalid_argument("unknown sweep '" + c.sweep + "'");

  const MoonshotAssessment a = assess_moonshot(x_hat, p, c.delta, mode);
  json j;
  j["mode"] = to_string(mode);
  j["q"] = c.q;
  j["eta"] = c.eta;
  j["delta"] = c.delta;
  j["x_hat"] = x_hat;
  j["npv_moonshot"] = a.npv_moonshot;
  j["npv_myopic"] = a.npv_myopic;
  j["benefit"] = a.benefit;
  const auto cd = critical_delta(p, mode);
  j["critical_delta"] = cd ? json(*cd) : json(nullptr);
  const auto range = eta_range(c.delta, p, mode);
  j["eta_range"] = range ? json({range->first, range->second}) : json(nullptr);
  if (mode == NpvMode::kPaperReplication) {
    const ReplicationBenchmark b = replication_benchmark(p);
    j["benchmark"] = {{"d_inf", b.d_inf},
                      {"rho_inf", b.rho_inf},
                      {"rho_6q", b.rho_6q},
                      {"benefit_delta1", b.benefit_delta1}};
  } else {
    const MoonshotAssessment best = optimal_moonshot(c.delta, p);
    j["optimal_x_hat"] = best.x_hat;
    j["optimal_benefit"] = best.benefit;
  }
  os << j.dump(2) << '\n';
}

// Myopic iso-objective curve rho V(d;inf) = level; both branches around 3q.
std::optional<std::pair<double, double>> iso_d(double level, double rho, double q) {
  const double v = level / rho;
  if (!(v <= 1.5 * q)) return std::nullopt;
  const double r = std::sqrt(9.0 * q * q - 6.0 * q * v);
  return std::pair{3.0 * q - r, 3.0 * q + r};
}

void cmd_funding(const Config& c, std::ostream& os) {
  const FundingParams fp = funding(c);
  check_delta(c);
  const EconomyParams p{c.q, c.eta0};
  p.validate();
  const FundingOptimum myopic = optimize_myopic(fp, c.q, c.grid);
  Csv csv(os, "funding", c, {"kind", "zeta", "h", "eta", "rho", "d", "value", "label"});
  for (double z : linspace(0.0, fp.K, c.points)) {
    const FundingScheme sc = scheme_on_budget(z, fp);
    const FrontierPoint pt = researcher_with_rewards(sc, fp, p);
    csv.row("frontier", sc.zeta, sc.h, sc.eta, pt.rho, pt.d,
            pt.rho * benefit(pt.d, Length::infinite(), c.q), pt.at_kink ? "kink" : "interior");
  }
  const double rho_min = std::min(myopic.objective / (1.5 * c.q), 0.999);
  for (double r : linspace(rho_min, 0.999, c.points)) {
    if (const auto d = iso_d(myopic.objective, r, c.q)) {
      csv.row("indifference", std::nan(""), std::nan(""), std::nan(""), r, d->first,
              myopic.objective, "lower");
      if (d->second <= 4.0 * c.q) {
        csv.row("indifference", std::nan(""), std::nan(""), std::nan(""), r, d->second,
                myopic.objective, "upper");
      }
    }
  }
  auto emit = [&](const char* kind, const FundingOptimum& o) {
    csv.row(kind, o.scheme.zeta, o.scheme.h, o.scheme.eta, o.point.rho, o.point.d, o.objective,
            to_string(o.mix));
  };
  emit("myopic", myopic);
  const ForwardOptimum fwd = optimize_forward(fp, p, c.delta, c.grid);
  if (c.delta == 0.0) {
    emit("forward", myopic);
  } else {
    emit("forward", fwd.best);
  }
}

void write_output(const Config& c, const std::string& text, std::ostream& out) {
  if (c.out.empty()) {
    out << text;
    return;
  }
  std::ofstream f(c.out, std::ios::binary);
  if (!f) throw std::invalid_argument("cannot open output file '" + c.out + "'");
  f << text;
  if (!f) throw std::runtime_error("failed writing '" + c.out + "'");
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Config c;
  CLI::App app{"knowctl: value, choose, simulate and fund research on a Brownian knowledge model",
               "knowctl"};
  app.set_version_flag("--version", std::string(kVersion));
  app.set_config("--config", "", "TOML config file; flags override its values");
  app.require_subcommand(1);
  app.fallthrough();

  app.add_option("--q", c.q, "error tolerance")->capture_default_str();
  app.add_option("--eta", c.eta, "cost weight")->capture_default_str();
  app.add_option("--delta", c.delta, "discount factor")->capture_default_str();
  app.add_option("--knowledge-file", c.knowledge_file, "JSON knowledge file");
  app.add_option("--out", c.out, "output path (stdout if absent)");
  app.add_option("--seed", c.seed, "RNG seed")->capture_default_str();
  app.add_option("--periods", c.periods, "simulation horizon")->capture_default_str();
  app.add_option("--mode", c.mode, "NPV mode: consistent or paper")->capture_default_str();
  app.add_option("--K", c.K, "funding budget")->capture_default_str();
  app.add_option("--kappa", c.kappa, "price of cost reductions")->capture_default_str();
  app.add_option("--s", c.s, "reward technology scale")->capture_default_str();
  app.add_option("--eta0", c.eta0, "baseline cost weight")->capture_default_str();
  app.add_option("--tech", c.tech, "reward technology: linear or exponential")
      ->capture_default_str();
  app.add_option("--grid", c.grid, "budget-line grid size")->capture_default_str();
  app.add_option("--points", c.points, "curve sample count")->capture_default_str();

  auto* value = app.add_subcommand("value", "value of knowledge, or a V(d;X) curve");
  value->add_option("--curve", c.curve, "none or V");
  value->add_option("--X", c.X, "area length or inf");
  value->add_option("--d-max", c.d_max, "curve upper end");

  auto* ben = app.add_subcommand("benefit", "benefit of a discovery and its optimum");
  ben->add_option("--X", c.X, "area length or inf");
  ben->add_option("--d", c.d, "distance");

  auto* choose = app.add_subcommand("choose", "the researcher's optimal choice");
  choose->add_flag("--cutoffs", c.with_cutoffs, "include cutoff lengths");
  choose->add_option("--curve", c.curve, "none or deepen");
  choose->add_option("--lo", c.lo, "curve lower end");
  choose->add_option("--hi", c.hi, "curve upper end");

  auto* cut = app.add_subcommand("cutoffs", "benefit and researcher cutoff lengths");

  auto* sim = app.add_subcommand("simulate", "sequential research trace as JSONL");
  sim->add_flag("--force-success", c.force_success, "every search succeeds");
  sim->add_option("--moonshot", c.moonshot, "first discovery at this distance / q");

  auto* moon = app.add_subcommand("moonshot", "moonshot against the myopic 3q");
  moon->add_option("--sweep", c.sweep, "none, xhat, eta or delta");
  moon->add_option("--x-hat", c.x_hat, "moonshot distance (default 6q)");
  moon->add_option("--lo", c.lo, "sweep lower end");
  moon->add_option("--hi", c.hi, "sweep upper end");

  auto* fund = app.add_subcommand("funding", "budget-constrained funding");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitBadInput;
  }

  try {
    std::ostringstream buf;
    if (*value) cmd_value(c, buf);
    if (*ben) cmd_benefit(c, buf);
    if (*choose) cmd_choose(c, buf);
    if (*cut) cmd_cutoffs(c, buf);
    if (*sim) cmd_simulate(c, buf);
    if (*moon) cmd_moonshot(c, buf);
    if (*fund) cmd_funding(c, buf);
    write_output(c, buf.str(), out);
  } catch (const ConvergenceError& e) {
    err << "knowctl: no convergence: " << e.what() << '\n';
    return kExitNoConvergence;
  } catch (const std::invalid_argument& e) {
    err << "knowctl: " << e.what() << '\n';
    return kExitBadInput;
  } catch (const std::domain_error& e) {
    err << "knowctl: " << e.what() << '\n';
    return kExitBadInput;
  } catch (const std::out_of_range& e) {
    err << "knowctl: " << e.what() << '\n';
    return kExitBadInput;
  } catch (const std::exception& e) {
    err << "knowctl: " << e.what() << '\n';
    return kExitNoConvergence;
  }
  return kExitOk;
}

}  // namespace novelty::cli
