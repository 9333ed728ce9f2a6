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

// Knowledge: known question/answer pairs on the real line, the partition of
// the line they induce, and the Gaussian conjecture about any other question.

#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace novelty {

// Length of an area. Unbounded areas carry an explicit infinite marker.
class Length {
 public:
  // Implicit on purpose: finite lengths read naturally as plain numbers.
  Length(double x);  // NOLINT(google-explicit-constructor)

  static Length infinite() { return Length(); }

  bool is_infinite() const { return infinite_; }
  bool is_finite() const { return !infinite_; }

  // Throws std::logic_error for the infinite marker.
  double value() const;

  std::string to_string() const;

  friend bool operator==(const Length& a, const Length& b) {
    return a.infinite_ == b.infinite_ && (a.infinite_ || a.value_ == b.value_);
  }

 private:
  Length() : value_(0.0), infinite_(true) {}
  double value_;
  bool infinite_;
};

struct KnowledgePoint {
  double x;
  double y;
};

// Immutable, nonempty, strictly increasing in x. Copies share storage;
// insert() builds a new set and leaves the original untouched.
class KnowledgeSet {
 public:
  std::size_t size() const { return points_->size(); }
  const KnowledgePoint& operator[](std::size_t i) const { return (*points_)[i]; }
  std::span<const KnowledgePoint> points() const { return *points_; }
  auto begin() const { return points_->begin(); }
  auto end() const { return points_->end(); }

  // Frontier questions x_1 and x_k.
  double lowest() const { return points_->front().x; }
  double highest() const { return points_->back().x; }

  bool contains(double x) const;

 private:
  explicit KnowledgeSet(std::shared_ptr<const std::vector<KnowledgePoint>> p)
      : points_(std::move(p)) {}
  std::shared_ptr<const std::vector<KnowledgePoint>> points_;

  friend KnowledgeSet make_knowledge(std::vector<KnowledgePoint> points);
  friend KnowledgeSet insert(const KnowledgeSet& f, KnowledgePoint p);
};

// Sorts the points. Exact duplicates collapse; a repeated x with a different
// y throws std::invalid_argument, as does an empty list or a non-finite value.
KnowledgeSet make_knowledge(std::vector<KnowledgePoint> points);

// New set with p added. Throws std::invalid_argument if p.x is already known.
KnowledgeSet insert(const KnowledgeSet& f, KnowledgePoint p);

enum class AreaKind { kLeftUnbounded, kBounded, kRightUnbounded };

// One element of the partition. For a bounded area, `anchor` is the index of
// its lower endpoint; for the unbounded areas it is the adjacent frontier
// point (0 on the left, k-1 on the right).
struct Area {
  AreaKind kind;
  std::size_t anchor;
  Length length;
};

// The k+1 areas in left-to-right order.
std::vector<Area> areas(const KnowledgeSet& f);

// Distance to the closest known question.
double distance(double x, const KnowledgeSet& f);

// Index of the closest known question; ties resolve to the lower x.
std::size_t nearest_anchor(double x, const KnowledgeSet& f);

struct Conjecture {
  double mean;
  double variance;
};

Conjecture conjecture(double x, const KnowledgeSet& f);

struct DecisionAction {
  bool proactive;
  double action;  // the conjecture mean when proactive, NaN otherwise
  double payoff;  // max{(q - variance)/q, 0}
};

// Proactive iff the conjecture variance is at most q. Throws
// std::invalid_argument unless q > 0.
DecisionAction optimal_action(double x, const KnowledgeSet& f, double q);

// {"points": [{"x": .., "y": ..}, ...]}. Parse failures throw
// std::invalid_argument.
KnowledgeSet parse_knowledge_json(const std::string& text);
KnowledgeSet load_knowledge_file(const std::string& path);
std::string to_json(const KnowledgeSet& f);

}  // namespace novelty
