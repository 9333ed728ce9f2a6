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

#include "novelty/knowledge.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace novelty {

Length::Length(double x) : value_(x), infinite_(false) {
  if (!std::isfinite(x) || x < 0.0) {
    throw std::invalid_argument("Length: finite lengths must be finite and >= 0; "
                                "use Length::infinite() for unbounded areas");
  }
}

double Length::value() const {
  if (infinite_) throw std::logic_error("Length::value on an infinite length");
  return value_;
}

std::string Length::to_string() const {
  return infinite_ ? std::string("inf") : std::to_string(value_);
}

namespace {

auto upper_of(const KnowledgeSet& f, double x) {
  return std::upper_bound(f.begin(), f.end(), x,
                          [](double v, const KnowledgePoint& p) { return v < p.x; });
}

}  // namespace

bool KnowledgeSet::contains(double x) const {
  auto it = std::lower_bound(begin(), end(), x,
                             [](const KnowledgePoint& p, double v) { return p.x < v; });
  return it != end() && it->x == x;
}

KnowledgeSet make_knowledge(std::vector<KnowledgePoint> points) {
  if (points.empty()) throw std::invalid_argument("knowledge: no points");
  for (const auto& p : points) {
    if (!std::isfinite(p.x) || !std::isfinite(p.y)) {
      throw std::invalid_argument("knowledge: non-finite coordinate");
    }
  }
  std::sort(points.begin(), points.end(),
            [](const KnowledgePoint& a, const KnowledgePoint& b) {
              return a.x < b.x || (a.x == b.x && a.y < b.y);
            });
  std::vector<KnowledgePoint> out;
  out.reserve(points.size());
  for (const auto& p : points) {
    if (!out.empty() && out.back().x == p.x) {
      if (out.back().y != p.y) {
        throw std::invalid_argument("knowledge: duplicate question with conflicting answers");
      }
      continue;
    }
    out.push_back(p);
  }
  return KnowledgeSet(std::make_shared<const std::vector<KnowledgePoint>>(std::move(out)));
}

KnowledgeSet insert(const KnowledgeSet& f, KnowledgePoint p) {
  if (!std::isfinite(p.x) || !std::isfinite(p.y)) {
    throw std::invalid_argument("insert: non-finite coordinate");
  }
  if (f.contains(p.x)) throw std::invalid_argument("insert: question already known");
  auto next = std::make_shared<std::vector<KnowledgePoint>>();
  next->reserve(f.size() + 1);
  auto it = upper_of(f, p.x);
  next->insert(next->end(), f.begin(), it);
  next->push_back(p);
  next->insert(next->end(), it, f.end());
  return KnowledgeSet(std::move(next));
}

std::vector<Area> areas(const KnowledgeSet& f) {
  std::vector<Area> out;
  out.reserve(f.size() + 1);
  out.push_back({AreaKind::kLeftUnbounded, 0, Length::infinite()});
  for (std::size_t i = 0; i + 1 < f.size(); ++i) {
    out.push_back({AreaKind::kBounded, i, Length(f[i + 1].x - f[i].x)});
  }
  out.push_back({AreaKind::kRightUnbounded, f.size() - 1, Length::infinite()});
  return out;
}

std::size_t nearest_anchor(double x, const KnowledgeSet& f) {
  auto it = upper_of(f, x);
  if (it == f.begin()) return 0;
  const std::size_t lo = static_cast<std::size_t>(it - f.begin()) - 1;
  if (it == f.end()) return lo;
  return (x - f[lo].x) <= (f[lo + 1].x - x) ? lo : lo + 1;
}

double distance(double x, const KnowledgeSet& f) {
  return std::fabs(x - f[nearest_anchor(x, f)].x);
}

Conjecture conjecture(double x, const KnowledgeSet& f) {
  if (x <= f.lowest()) return {f[0].y, f.lowest() - x};
  if (x >= f.highest()) return {f[f.size() - 1].y, x - f.highest()};
  auto it = upper_of(f, x);
  const KnowledgePoint& a = *(it - 1);
  const KnowledgePoint& b = *it;
  if (x == a.x) return {a.y, 0.0};
  const double len = b.x - a.x;
  const double mean = a.y + (b.y - a.y) * (x - a.x) / len;
  const double var = (b.x - x) * (x - a.x) / len;
  return {mean, var};
}

DecisionAction optimal_action(double x, const KnowledgeSet& f, double q) {
  if (!(q > 0.0)) throw std::invalid_argument("optimal_action: q must be positive");
  const Conjecture c = conjecture(x, f);
  if (c.variance <= q) return {true, c.mean, (q - c.variance) / q};
  return {false, std::numeric_limits<double>::quiet_NaN(), 0.0};
}

}  // namespace novelty
