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

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "novelty/knowledge.hpp"

namespace novelty {

KnowledgeSet parse_knowledge_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("knowledge file: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("points") || !doc["points"].is_array()) {
    throw std::invalid_argument("knowledge file: expected {\"points\": [...]}");
  }
  std::vector<KnowledgePoint> pts;
  for (const auto& p : doc["points"]) {
    if (!p.is_object() || !p.contains("x") || !p.contains("y") ||
        !p["x"].is_number() || !p["y"].is_number()) {
      throw std::invalid_argument("knowledge file: each point needs numeric x and y");
    }
    pts.push_back({p["x"].get<double>(), p["y"].get<double>()});
  }
  return make_knowledge(std::move(pts));
}

KnowledgeSet load_knowledge_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("knowledge file: cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_knowledge_json(buf.str());
}

std::string to_json(const KnowledgeSet& f) {
  nlohmann::json pts = nlohmann::json::array();
  for (const auto& p : f) pts.push_back({{"x", p.x}, {"y", p.y}});
  return nlohmann::json{{"points", pts}}.dump();
}

}  // namespace novelty
